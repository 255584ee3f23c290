"""Character n-gram count vectorizer over codepoint windows of length 2-5.

Windows span the whole string including spaces (cross-token windows are
deliberate).  Counts are raw term frequencies; no frequency pruning.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import OfansivError
from .normalize import NormalizedText


class VectorizeError(OfansivError):
    pass


class EmptyCorpusError(VectorizeError):
    pass


@dataclass(frozen=True)
class Vocabulary:
    """Fitted n-gram -> column-index map.

    Indexing is deterministic: keys sorted lexicographically by codepoint,
    then numbered 0..size-1.
    """

    ngram_to_index: dict[str, int]
    n_min: int = 2
    n_max: int = 5
    fitted_on: str = ""

    def __len__(self) -> int:
        return len(self.ngram_to_index)

    @property
    def size(self) -> int:
        return len(self.ngram_to_index)


@dataclass(frozen=True)
class SparseVector:
    """Ordered (index, count) pairs for one featurized text."""

    entries: tuple[tuple[int, int], ...]
    dim: int

    def to_dict(self) -> dict[int, int]:
        return dict(self.entries)


def _as_text(text: str | NormalizedText) -> str:
    return text.text if isinstance(text, NormalizedText) else text


def extract_char_ngrams(text: str | NormalizedText, n_min: int, n_max: int) -> Counter:
    """All contiguous codepoint windows of each length in [n_min, n_max],
    with multiplicities."""
    if not (1 <= n_min <= n_max):
        raise VectorizeError(f"invalid n-gram range [{n_min}, {n_max}]")
    s = _as_text(text)
    counts: Counter = Counter()
    L = len(s)
    for n in range(n_min, n_max + 1):
        for i in range(L - n + 1):
            counts[s[i:i + n]] += 1
    return counts


def corpus_fingerprint(corpus: Sequence[str | NormalizedText]) -> str:
    h = hashlib.sha256()
    for doc in corpus:
        data = _as_text(doc).encode("utf-8")
        h.update(len(data).to_bytes(8, "big"))
        h.update(data)
    return h.hexdigest()


def fit_vocabulary(corpus: Sequence[str | NormalizedText],
                   n_min: int = 2, n_max: int = 5) -> Vocabulary:
    """Vocabulary over the union of n-grams appearing at least once."""
    if not corpus:
        raise EmptyCorpusError("cannot fit a vocabulary on an empty corpus")
    seen: set[str] = set()
    for doc in corpus:
        seen.update(extract_char_ngrams(doc, n_min, n_max))
    mapping = {ng: i for i, ng in enumerate(sorted(seen))}
    return Vocabulary(ngram_to_index=mapping, n_min=n_min, n_max=n_max,
                      fitted_on=corpus_fingerprint(corpus))


def transform(text: str | NormalizedText, vocab: Vocabulary) -> SparseVector:
    """Counts of in-vocabulary n-grams; out-of-vocabulary windows are
    silently dropped."""
    counts = extract_char_ngrams(text, vocab.n_min, vocab.n_max)
    idx_counts = sorted(
        (vocab.ngram_to_index[ng], c)
        for ng, c in counts.items()
        if ng in vocab.ngram_to_index
    )
    return SparseVector(entries=tuple(idx_counts), dim=vocab.size)


def transform_many(texts: Iterable[str | NormalizedText], vocab: Vocabulary) -> list[SparseVector]:
    return [transform(t, vocab) for t in texts]


def save_vocabulary(vocab: Vocabulary, path: str | Path) -> None:
    """Text serialization: header line, then one ``ngram<TAB>index`` line per
    entry in index order.  N-grams containing tabs or newlines are rejected
    rather than escaped (they cannot arise from TSV-sourced corpora)."""
    lines = [f"ngram-vocab v1 n_min={vocab.n_min} n_max={vocab.n_max} size={vocab.size}"]
    by_index = sorted(vocab.ngram_to_index.items(), key=lambda kv: kv[1])
    for ng, i in by_index:
        if "\t" in ng or "\n" in ng:
            raise VectorizeError(f"n-gram {ng!r} contains a tab/newline; cannot serialize")
        lines.append(f"{ng}\t{i}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_vocabulary(path: str | Path) -> Vocabulary:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        fields = header.split()
        if len(fields) != 5 or fields[0] != "ngram-vocab" or fields[1] != "v1":
            raise VectorizeError(f"{path}: bad vocabulary header {header!r}")
        meta = dict(f.split("=", 1) for f in fields[2:])
        n_min, n_max, size = int(meta["n_min"]), int(meta["n_max"]), int(meta["size"])
        mapping: dict[str, int] = {}
        for lineno, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line:
                continue
            ng, _, idx = line.rpartition("\t")
            mapping[ng] = int(idx)
    if len(mapping) != size or sorted(mapping.values()) != list(range(size)):
        raise VectorizeError(f"{path}: vocabulary indices are not a contiguous 0-based range")
    return Vocabulary(ngram_to_index=mapping, n_min=n_min, n_max=n_max)
