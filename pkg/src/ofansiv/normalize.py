"""The normalization pipeline: nine individually toggleable pure text
transforms applied in a fixed order.

Stage order (pinned): Unicode NFC canonicalization happens first, then
emoji conversion, emoticon conversion, hashtag segmentation, letter
normalization, repeat reduction, miscellaneous cleaning, dialect
normalization, word categorization, stopword removal.  Emoji and emoticons
must be converted before the symbol filter would strip them; letter
normalization precedes the lexicon lookups so one spelling per entry
suffices; stopword removal runs last so it sees final tokens.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import OfansivError
from .lexicons import Lexicon, LexiconKind


class MissingLexiconError(OfansivError):
    pass


class Stage(Enum):
    EMOJI_CONVERT = "emoji_convert"
    EMOTICON_CONVERT = "emoticon_convert"
    HASHTAG_SEGMENT = "hashtag_segment"
    LETTER_NORMALIZE = "letter_normalize"
    REPEAT_REDUCE = "repeat_reduce"
    MISC_CLEAN = "misc_clean"
    DIALECT_NORMALIZE = "dialect_normalize"
    WORD_CATEGORIZE = "word_categorize"
    STOPWORD_REMOVE = "stopword_remove"


STAGE_ORDER: tuple[Stage, ...] = (
    Stage.EMOJI_CONVERT,
    Stage.EMOTICON_CONVERT,
    Stage.HASHTAG_SEGMENT,
    Stage.LETTER_NORMALIZE,
    Stage.REPEAT_REDUCE,
    Stage.MISC_CLEAN,
    Stage.DIALECT_NORMALIZE,
    Stage.WORD_CATEGORIZE,
    Stage.STOPWORD_REMOVE,
)

# Stages that cannot run without their lexicon table.
STAGE_LEXICON: dict[Stage, LexiconKind] = {
    Stage.EMOJI_CONVERT: LexiconKind.EMOJI,
    Stage.EMOTICON_CONVERT: LexiconKind.EMOTICON,
    Stage.DIALECT_NORMALIZE: LexiconKind.DIALECT_NOUN,
    Stage.WORD_CATEGORIZE: LexiconKind.ANIMAL_CATEGORY,
    Stage.STOPWORD_REMOVE: LexiconKind.STOPWORD,
}

_LETTER_MAP = str.maketrans({
    "آ": "ا",  # Alif madda -> Alif
    "أ": "ا",  # Alif hamza above -> Alif
    "إ": "ا",  # Alif hamza below -> Alif
    "ى": "ي",  # Alif Maqsura -> Ya
    "ة": "ه",  # Ta Marbuta -> Ha
})

_TATWEEL = "ـ"
_PLACEHOLDER_TOKENS = frozenset({"@USER", "URL", "<LF>", "USER"})
_REPEAT_RE = re.compile(r"(.)\1{2,}", re.DOTALL)
_WS_RE = re.compile(r"\s+")


def _check_kind(lex: Lexicon, kind: LexiconKind) -> None:
    if lex.kind is not kind:
        raise MissingLexiconError(f"expected a {kind.value} lexicon, got {lex.kind.value}")


def normalize_letters(text: str) -> str:
    """Collapse Alif variants to bare Alif, Alif Maqsura to Ya and Ta
    Marbuta to Ha, everywhere in the string."""
    return text.translate(_LETTER_MAP)


def reduce_repeats(text: str) -> str:
    """Truncate every run of three or more identical codepoints to two."""
    return _REPEAT_RE.sub(r"\1\1", text)


@lru_cache(maxsize=16)
def _emoji_matcher(lex: Lexicon) -> tuple[dict[str, str], int, frozenset[str]]:
    keys = lex.entries
    max_len = max((len(k) for k in keys), default=1)
    first_chars = frozenset(k[0] for k in keys)
    return dict(keys), max_len, first_chars


def convert_emoji(text: str, lex: Lexicon) -> str:
    """Replace each maximal lexicon-covered emoji sequence with a space, its
    Arabic description, and a space.  Unmapped emoji pass through (the
    miscellaneous-cleaning stage deletes them later)."""
    _check_kind(lex, LexiconKind.EMOJI)
    entries, max_len, first_chars = _emoji_matcher(lex)
    out: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in first_chars:
            for length in range(min(max_len, n - i), 0, -1):
                candidate = text[i:i + length]
                desc = entries.get(candidate)
                if desc is not None:
                    out.append(f" {desc} ")
                    i += length
                    break
            else:
                out.append(ch)
                i += 1
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def convert_emoticons(text: str, lex: Lexicon) -> str:
    """Replace whitespace-delimited tokens that exactly equal an emoticon key
    with the key's Arabic description."""
    _check_kind(lex, LexiconKind.EMOTICON)
    tokens = text.split()
    return " ".join(lex.entries.get(tok, tok) for tok in tokens)


def segment_hashtags(text: str) -> str:
    """Strip the leading '#' of hashtag tokens and turn their underscores
    into spaces; underscores outside hashtags stay."""
    out: list[str] = []
    for tok in text.split():
        if tok.startswith("#"):
            tok = tok.lstrip("#").replace("_", " ")
            if not tok.strip():
                continue
        out.append(tok)
    return " ".join(out)


def clean_misc(text: str) -> str:
    """One-pass cleanup: drop balanced ``<...>`` spans, the "@USER"/"URL"/
    "<LF>" placeholders, digits (Western and Arabic-Indic), tatweel, and
    every punctuation/symbol/format codepoint; collapse whitespace.

    Only letters, combining marks and single spaces survive.  This is a
    deliberate superset of the published symbol list, which is only
    partially legible.
    """
    # Balanced <...> spans (HTML tags and the <LF> placeholder), no regex.
    parts: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        if text[i] == "<":
            j = text.find(">", i + 1)
            if j != -1:
                parts.append(" ")
                i = j + 1
                continue
        parts.append(text[i])
        i += 1
    stripped = "".join(parts)

    tokens = [t for t in stripped.split() if t not in _PLACEHOLDER_TOKENS]
    stripped = " ".join(tokens)

    kept: list[str] = []
    for ch in stripped:
        if ch.isspace():
            kept.append(" ")
        elif ch == _TATWEEL:
            kept.append("")
        elif unicodedata.category(ch)[0] in ("L", "M"):
            kept.append(ch)
        else:
            kept.append(" ")  # symbol boundaries become token boundaries
    tokens = "".join(kept).split()
    tokens = [t for t in tokens if t not in ("USER", "URL")]
    return " ".join(tokens)


@lru_cache(maxsize=16)
def _token_index(lex: Lexicon) -> dict[str, str]:
    """Token match table: each key matches in its stored spelling and in its
    letter-normalized spelling, so entries still fire after the letter
    normalization stage has rewritten the input."""
    index: dict[str, str] = {}
    for key, repl in lex.entries.items():
        index.setdefault(key, repl)
        index.setdefault(normalize_letters(key), repl)
    return index


def normalize_dialect(text: str, lex: Lexicon) -> str:
    """Replace whole tokens that match a dialect-noun entry with the MSA
    form; partial-word matches never fire."""
    _check_kind(lex, LexiconKind.DIALECT_NOUN)
    index = _token_index(lex)
    return " ".join(index.get(tok, tok) for tok in text.split())


def categorize_words(text: str, lex: Lexicon) -> str:
    """Replace whole tokens naming an animal with the category word."""
    _check_kind(lex, LexiconKind.ANIMAL_CATEGORY)
    index = _token_index(lex)
    return " ".join(index.get(tok, tok) for tok in text.split())


def remove_stopwords(text: str, lex: Lexicon) -> str:
    """Delete whole tokens present in the stopword set."""
    _check_kind(lex, LexiconKind.STOPWORD)
    stopset = _token_index(lex).keys()
    return " ".join(tok for tok in text.split() if tok not in stopset)


@dataclass(frozen=True, eq=False)
class PipelineConfig:
    """Which stages run (order is fixed by the module) plus the loaded
    lexicon tables the enabled stages need."""

    stages: frozenset[Stage]
    lexicons: Mapping[LexiconKind, Lexicon] = field(default_factory=dict)
    name: str = ""

    @classmethod
    def full(cls, lexicons: Mapping[LexiconKind, Lexicon], name: str = "full") -> "PipelineConfig":
        return cls(stages=frozenset(STAGE_ORDER), lexicons=lexicons, name=name)

    @classmethod
    def none(cls, lexicons: Mapping[LexiconKind, Lexicon] | None = None,
             name: str = "baseline") -> "PipelineConfig":
        return cls(stages=frozenset(), lexicons=lexicons or {}, name=name)

    @classmethod
    def of(cls, stages: Iterable[Stage], lexicons: Mapping[LexiconKind, Lexicon],
           name: str = "") -> "PipelineConfig":
        stages = frozenset(stages)
        return cls(stages=stages, lexicons=lexicons,
                   name=name or "+".join(s.value for s in STAGE_ORDER if s in stages))

    def require_lexicons(self) -> None:
        for stage in self.stages:
            kind = STAGE_LEXICON.get(stage)
            if kind is not None and kind not in self.lexicons:
                raise MissingLexiconError(
                    f"stage {stage.value} enabled but no {kind.value} lexicon loaded")


@dataclass(frozen=True)
class NormalizedText:
    text: str
    applied_stages: tuple[str, ...] = ()

    def __str__(self) -> str:
        return self.text


def preprocess(text: str, config: PipelineConfig) -> NormalizedText:
    """Run the enabled stages in pipeline order over ``text``.

    The input is NFC-canonicalized first and whitespace is collapsed last,
    so even an empty stage set is not quite the identity.  Idempotent for
    every stage subset.
    """
    config.require_lexicons()
    t = unicodedata.normalize("NFC", text)
    applied: list[str] = []
    for stage in STAGE_ORDER:
        if stage not in config.stages:
            continue
        if stage is Stage.EMOJI_CONVERT:
            t = convert_emoji(t, config.lexicons[LexiconKind.EMOJI])
        elif stage is Stage.EMOTICON_CONVERT:
            t = convert_emoticons(t, config.lexicons[LexiconKind.EMOTICON])
        elif stage is Stage.HASHTAG_SEGMENT:
            t = segment_hashtags(t)
        elif stage is Stage.LETTER_NORMALIZE:
            t = normalize_letters(t)
        elif stage is Stage.REPEAT_REDUCE:
            t = reduce_repeats(t)
        elif stage is Stage.MISC_CLEAN:
            t = clean_misc(t)
        elif stage is Stage.DIALECT_NORMALIZE:
            t = normalize_dialect(t, config.lexicons[LexiconKind.DIALECT_NOUN])
        elif stage is Stage.WORD_CATEGORIZE:
            t = categorize_words(t, config.lexicons[LexiconKind.ANIMAL_CATEGORY])
        elif stage is Stage.STOPWORD_REMOVE:
            t = remove_stopwords(t, config.lexicons[LexiconKind.STOPWORD])
        applied.append(stage.value)
    t = _WS_RE.sub(" ", t).strip()
    return NormalizedText(text=t, applied_stages=tuple(applied))
