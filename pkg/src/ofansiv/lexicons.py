"""Loading, validation and lookup of the five static lexicon tables.

File format: UTF-8 text, one ``key<TAB>replacement`` entry per line,
``#``-prefixed comment lines and blank lines ignored.  Stopword files omit
the replacement column.  A header comment must carry ``kind:`` and
``version:`` fields matching the load call.
"""

from __future__ import annotations

import os
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from .errors import OfansivError

# The single Arabic word every animal-category entry maps to.
ANIMAL_REPLACEMENT = "حيوان"

_ARABIC_BLOCKS = (
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
)

# Marker comment separating hand-curated entries from generated padding.
PADDING_MARKER = "padding: generated"

ENV_LEXICON_DIR = "OFANSIV_LEXICON_DIR"


class LexiconError(OfansivError):
    pass


class ParseError(LexiconError):
    def __init__(self, path, lineno: int, reason: str):
        super().__init__(f"{path}:{lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


class DuplicateKeyError(LexiconError):
    def __init__(self, path, lineno: int, key: str):
        super().__init__(f"{path}:{lineno}: duplicate key {key!r}")
        self.key = key


class KindMismatchError(LexiconError):
    pass


class LexiconKind(str, Enum):
    EMOJI = "emoji"
    EMOTICON = "emoticon"
    DIALECT_NOUN = "dialect_noun"
    ANIMAL_CATEGORY = "animal_category"
    STOPWORD = "stopword"


def is_arabic_char(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _ARABIC_BLOCKS)


def has_arabic(text: str) -> bool:
    return any(is_arabic_char(ch) for ch in text)


@dataclass(frozen=True, eq=False)
class Lexicon:
    """An immutable, validated mapping table.

    ``entries`` preserves file order; keys and replacements are NFC
    canonically composed.  Instances hash by identity so derived match
    indexes can be cached per loaded lexicon.
    """

    kind: LexiconKind
    entries: dict[str, str]
    version: str = "0"
    source_note: str = ""
    padding_keys: frozenset[str] = field(default_factory=frozenset)

    def __len__(self) -> int:
        return len(self.entries)

    def curated_keys(self) -> set[str]:
        """Keys below the padding marker are generated filler; the rest
        are hand-curated."""
        return set(self.entries) - set(self.padding_keys)


def lookup(lexicon: Lexicon, key: str) -> str | None:
    """Exact-match lookup; the key itself is never normalized here."""
    return lexicon.entries.get(key)


def _validate_key(kind: LexiconKind, key: str, replacement: str) -> str | None:
    """Return a reason string if (key, replacement) violates the kind
    invariant, else None."""
    if kind is LexiconKind.EMOJI:
        if has_arabic(key):
            return "emoji key contains Arabic-script codepoints"
    elif kind in (LexiconKind.DIALECT_NOUN, LexiconKind.ANIMAL_CATEGORY, LexiconKind.STOPWORD):
        if not has_arabic(key):
            return "key contains no Arabic-script codepoint"
    if kind is LexiconKind.ANIMAL_CATEGORY and replacement != ANIMAL_REPLACEMENT:
        return f"animal-category replacement must be {ANIMAL_REPLACEMENT!r}"
    if not replacement and kind is not LexiconKind.STOPWORD:
        return "empty replacement only permitted for stopword lexicons"
    return None


def load_lexicon(path: str | Path, kind: LexiconKind) -> Lexicon:
    path = Path(path)
    entries: dict[str, str] = {}
    padding: set[str] = set()
    version: str | None = None
    header_kind: str | None = None
    source_note = ""
    in_padding = False

    with path.open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip():
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                if body.startswith("kind:"):
                    header_kind = body[len("kind:"):].strip()
                elif body.startswith("version:"):
                    version = body[len("version:"):].strip()
                elif body.startswith("source:"):
                    source_note = body[len("source:"):].strip()
                elif body == PADDING_MARKER:
                    in_padding = True
                continue
            cols = line.split("\t")
            if kind is LexiconKind.STOPWORD:
                if len(cols) not in (1, 2):
                    raise ParseError(path, lineno, f"expected 1 column, got {len(cols)}")
                key, replacement = cols[0], (cols[1] if len(cols) == 2 else "")
            else:
                if len(cols) != 2:
                    raise ParseError(path, lineno, f"expected 2 columns, got {len(cols)}")
                key, replacement = cols
            if not key:
                raise ParseError(path, lineno, "empty key")
            key = unicodedata.normalize("NFC", key)
            replacement = unicodedata.normalize("NFC", replacement)
            if key in entries:
                raise DuplicateKeyError(path, lineno, key)
            reason = _validate_key(kind, key, replacement)
            if reason is not None:
                raise KindMismatchError(f"{path}:{lineno}: {reason} (key {key!r})")
            entries[key] = replacement
            if in_padding:
                padding.add(key)

    if header_kind is None or version is None:
        raise ParseError(path, 0, "missing 'kind:'/'version:' header comment")
    if header_kind != kind.value:
        raise KindMismatchError(
            f"{path}: header kind {header_kind!r} does not match requested {kind.value!r}"
        )
    return Lexicon(kind=kind, entries=entries, version=version,
                   source_note=source_note, padding_keys=frozenset(padding))


def write_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    """Serialize in the canonical file layout (curated entries first, then the
    flagged padding section); ``load_lexicon`` of the result reproduces the
    lexicon's content."""
    path = Path(path)
    lines = [f"# kind: {lexicon.kind.value}", f"# version: {lexicon.version}"]
    if lexicon.source_note:
        lines.append(f"# source: {lexicon.source_note}")

    def fmt(key: str) -> str:
        repl = lexicon.entries[key]
        if lexicon.kind is LexiconKind.STOPWORD and not repl:
            return key
        return f"{key}\t{repl}"

    curated = sorted(k for k in lexicon.entries if k not in lexicon.padding_keys)
    padded = sorted(k for k in lexicon.entries if k in lexicon.padding_keys)
    lines.extend(fmt(k) for k in curated)
    if padded:
        lines.append(f"# {PADDING_MARKER}")
        lines.extend(fmt(k) for k in padded)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


_FILENAMES = {kind: f"{kind.value}.tsv" for kind in LexiconKind}


def default_lexicon_dir() -> Path:
    env = os.environ.get(ENV_LEXICON_DIR)
    if env:
        return Path(env)
    return Path(str(resources.files("ofansiv").joinpath("data")))


def load_all(directory: str | Path | None = None) -> dict[LexiconKind, Lexicon]:
    """Load the five shipped lexicons from ``directory`` (default: packaged
    data, overridable with the OFANSIV_LEXICON_DIR environment variable)."""
    directory = Path(directory) if directory is not None else default_lexicon_dir()
    return {kind: load_lexicon(directory / _FILENAMES[kind], kind) for kind in LexiconKind}
