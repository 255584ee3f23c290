"""Arabic offensive-language and hate-speech detection pipeline.

Rule-based text normalization (emoji/emoticon conversion, hashtag
segmentation, letter normalization, dialect and animal-name mapping,
cleaning, stopword removal), character 2-5-gram count features, a linear
SVM with hinge loss, minority upsampling, and an ablation harness.
"""

from .errors import OfansivError

__version__ = "0.1.0"

__all__ = ["OfansivError", "__version__"]
