"""Dataset reading/writing, minority upsampling, and the bundled synthetic
micro-corpus.

TSV layout: UTF-8, no header, ``text<TAB>label_a[<TAB>label_b]``; text may
contain the "@USER", "URL" and "<LF>" placeholder literals.  Labels are
hierarchical: a hate-speech tweet is necessarily offensive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import OfansivError

LABELS_A = ("OFF", "NOT_OFF")
LABELS_B = ("HS", "NOT_HS")


class CorpusError(OfansivError):
    pass


class SchemaError(CorpusError):
    pass


class LabelError(CorpusError):
    pass


class HierarchyError(CorpusError):
    pass


class Schema(Enum):
    TEXT_ONLY = "text_only"
    TASK_A = "task_a"
    TASK_B = "task_b"
    BOTH = "both"


class Task(Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class Record:
    text: str
    label_a: str | None = None
    label_b: str | None = None


@dataclass
class Dataset:
    records: list[Record]
    split_name: str = ""

    def __len__(self) -> int:
        return len(self.records)

    def label_counts(self, task: Task) -> dict[str, int]:
        counts: dict[str, int] = {}
        for rec in self.records:
            lbl = label_for(rec, task)
            counts[lbl] = counts.get(lbl, 0) + 1
        return counts


def label_for(record: Record, task: Task) -> str:
    lbl = record.label_a if task is Task.A else record.label_b
    if lbl is None:
        raise LabelError(f"record has no task-{task.value} label: {record.text[:40]!r}")
    return lbl


def positive_label(task: Task) -> str:
    return "OFF" if task is Task.A else "HS"


_COLUMNS = {
    Schema.TEXT_ONLY: 1,
    Schema.TASK_A: 2,
    Schema.TASK_B: 2,
    Schema.BOTH: 3,
}


def _check_label(value: str, allowed: tuple[str, str], path, lineno: int) -> str:
    if value not in allowed:
        raise LabelError(f"{path}:{lineno}: unknown label {value!r} (expected one of {allowed})")
    return value


def read_tsv(path: str | Path, schema: Schema) -> Dataset:
    path = Path(path)
    records: list[Record] = []
    with path.open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) != _COLUMNS[schema]:
                raise SchemaError(
                    f"{path}:{lineno}: expected {_COLUMNS[schema]} columns, got {len(cols)}")
            text = cols[0]
            label_a = label_b = None
            if schema is Schema.TASK_A:
                label_a = _check_label(cols[1], LABELS_A, path, lineno)
            elif schema is Schema.TASK_B:
                label_b = _check_label(cols[1], LABELS_B, path, lineno)
            elif schema is Schema.BOTH:
                label_a = _check_label(cols[1], LABELS_A, path, lineno)
                label_b = _check_label(cols[2], LABELS_B, path, lineno)
                if label_b == "HS" and label_a != "OFF":
                    raise HierarchyError(
                        f"{path}:{lineno}: HS tweet must be labeled OFF, got {label_a!r}")
            records.append(Record(text=text, label_a=label_a, label_b=label_b))
    return Dataset(records=records, split_name=path.stem)


def write_tsv(dataset: Dataset, path: str | Path, schema: Schema) -> None:
    lines = []
    for rec in dataset.records:
        if "\t" in rec.text or "\n" in rec.text:
            raise SchemaError(f"text contains tab/newline: {rec.text[:40]!r}")
        if schema is Schema.TEXT_ONLY:
            lines.append(rec.text)
        elif schema is Schema.TASK_A:
            lines.append(f"{rec.text}\t{rec.label_a}")
        elif schema is Schema.TASK_B:
            lines.append(f"{rec.text}\t{rec.label_b}")
        else:
            lines.append(f"{rec.text}\t{rec.label_a}\t{rec.label_b}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def upsample_minority(data: Dataset, task: Task, seed: int) -> Dataset:
    """Duplicate minority-class records (uniform sampling with replacement,
    seeded) until class counts are equal, then shuffle.  The original
    multiset of records is preserved as a sub-multiset of the output."""
    counts = data.label_counts(task)
    if len(counts) < 2:
        raise CorpusError("upsampling requires both classes to be present")
    minority = min(counts, key=lambda lbl: (counts[lbl], lbl))
    deficit = max(counts.values()) - counts[minority]
    rng = random.Random(seed)
    pool = [rec for rec in data.records if label_for(rec, task) == minority]
    extra = rng.choices(pool, k=deficit) if deficit else []
    combined = list(data.records) + extra
    rng.shuffle(combined)
    return Dataset(records=combined, split_name=f"{data.split_name}+upsampled")


# ---------------------------------------------------------------------------
# Synthetic micro-corpus
#
# 200 tweets, 80/20 NOT_OFF/OFF; each offensive tweet carries exactly one
# lexicon-covered cue (an animal name, a dialect noun, or an angry-face
# emoji).  Training and test splits draw their cues from disjoint surface
# pools whose members collapse to the same token after full preprocessing,
# so the pipeline's value is measurable while raw character n-grams cannot
# generalize across the splits.
# ---------------------------------------------------------------------------

FILLER_WORDS = (
    "صباح", "الخير", "مباراه", "مدرسه", "كتاب", "قهوه", "جميل", "طعام",
    "سياره", "عمل", "صديق", "شمس", "بحر", "مدينه", "سوق", "خبر",
    "برنامج", "لعبه", "سفر", "مطر",
)
NEUTRAL_EMOJI = ("😂", "❤️", "💙", "😄")
NEUTRAL_EMOTICONS = (":)", ":D", ";D", ":<")

# cue pools: train and test surfaces are disjoint but normalize identically
ANIMAL_CUES_TRAIN = ("كلب", "خنزير", "حية", "بسة")
ANIMAL_CUES_TEST = ("قطط", "بزونة", "كلاب", "قطوة")
DIALECT_CUES_TRAIN = ("زلمة",)
DIALECT_CUES_TEST = ("زول", "رجل")
EMOJI_CUES_TRAIN = ("😠",)
EMOJI_CUES_TEST = ("😡", "🤬")

_TRAIN_SIZES = (120, 30)   # (NOT_OFF, OFF)
_TEST_SIZES = (40, 10)


def _decorate(tokens: list[str], rng: random.Random) -> list[str]:
    if rng.random() < 0.3:
        tokens.insert(0, "@USER")
    if rng.random() < 0.2:
        tokens.append("URL")
    if rng.random() < 0.25:
        tokens.append(rng.choice(NEUTRAL_EMOJI))
    if rng.random() < 0.2:
        tokens.append(rng.choice(NEUTRAL_EMOTICONS))
    if rng.random() < 0.2:
        tokens.append("ههههه")
    if rng.random() < 0.15:
        tokens.append(str(rng.randint(2, 999)))
    if rng.random() < 0.25:
        a, b = rng.sample(FILLER_WORDS, 2)
        tokens.append(f"#{a}_{b}")
    return tokens


def _make_tweet(rng: random.Random, cue: str | None) -> str:
    tokens = rng.choices(list(FILLER_WORDS), k=rng.randint(3, 5))
    if cue is not None:
        # half the time the cue rides inside a hashtag
        if rng.random() < 0.5 and not cue.startswith(("😠", "😡", "🤬")):
            cue = f"#{cue}_{rng.choice(FILLER_WORDS)}"
        tokens.insert(rng.randrange(len(tokens) + 1), cue)
    tokens = _decorate(tokens, rng)
    return " ".join(tokens)


def _make_split(rng: random.Random, sizes: tuple[int, int],
                animal_pool, dialect_pool, emoji_pool, split_name: str) -> Dataset:
    n_neg, n_pos = sizes
    records: list[Record] = []
    for _ in range(n_neg):
        records.append(Record(text=_make_tweet(rng, None),
                              label_a="NOT_OFF", label_b="NOT_HS"))
    for k in range(n_pos):
        family = ("animal", "dialect", "emoji")[k % 3]
        if family == "animal":
            cue = rng.choice(animal_pool)
            label_b = "HS"          # animal slurs are the hate-speech analogue
        elif family == "dialect":
            cue = rng.choice(dialect_pool)
            label_b = "NOT_HS"
        else:
            cue = rng.choice(emoji_pool)
            label_b = "NOT_HS"
        records.append(Record(text=_make_tweet(rng, cue),
                              label_a="OFF", label_b=label_b))
    rng.shuffle(records)
    return Dataset(records=records, split_name=split_name)


def micro_corpus_splits(seed: int) -> tuple[Dataset, Dataset]:
    """Deterministic (train, test) pair: 150 + 50 tweets, each 80/20
    NOT_OFF/OFF, with disjoint offensive cue surfaces between splits."""
    rng = random.Random(seed)
    train = _make_split(rng, _TRAIN_SIZES, ANIMAL_CUES_TRAIN,
                        DIALECT_CUES_TRAIN, EMOJI_CUES_TRAIN, "micro-train")
    test = _make_split(rng, _TEST_SIZES, ANIMAL_CUES_TEST,
                       DIALECT_CUES_TEST, EMOJI_CUES_TEST, "micro-test")
    return train, test


def stratified_micro_corpus(seed: int) -> Dataset:
    """The full bundled 200-tweet synthetic corpus (train and test halves
    concatenated)."""
    train, test = micro_corpus_splits(seed)
    return Dataset(records=train.records + test.records, split_name="micro")
