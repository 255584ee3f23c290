"""TSV corpus I/O, label hierarchy, upsampling, and the synthetic corpus."""

import pytest

from ofansiv.corpus import (
    Dataset,
    HierarchyError,
    LabelError,
    Record,
    Schema,
    SchemaError,
    Task,
    label_for,
    micro_corpus_splits,
    positive_label,
    read_tsv,
    stratified_micro_corpus,
    upsample_minority,
    write_tsv,
)
from ofansiv.normalize import preprocess


def _both(text, a, b):
    return Record(text=text, label_a=a, label_b=b)


SAMPLE = Dataset(records=[
    _both("تغريدة عادية", "NOT_OFF", "NOT_HS"),
    _both("يا حيوان", "OFF", "HS"),
    _both("كلام سيء", "OFF", "NOT_HS"),
], split_name="sample")


def test_round_trip_all_schemas(tmp_path):
    for schema in (Schema.TASK_A, Schema.TASK_B, Schema.BOTH):
        path = tmp_path / f"{schema.name}.tsv"
        write_tsv(SAMPLE, path, schema)
        again = read_tsv(path, schema)
        assert [r.text for r in again.records] == [r.text for r in SAMPLE.records]
        if schema in (Schema.TASK_A, Schema.BOTH):
            assert [r.label_a for r in again.records] == ["NOT_OFF", "OFF", "OFF"]
        if schema in (Schema.TASK_B, Schema.BOTH):
            assert [r.label_b for r in again.records] == ["NOT_HS", "HS", "NOT_HS"]


def test_bad_label_rejected(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("نص\tMAYBE\n", encoding="utf-8")
    with pytest.raises(LabelError):
        read_tsv(path, Schema.TASK_A)


def test_column_count_rejected(tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("نص\tOFF\n", encoding="utf-8")
    with pytest.raises(SchemaError):
        read_tsv(path, Schema.BOTH)


def test_hierarchy_enforced(tmp_path):
    # hate speech is a subset of offensive: HS with NOT_OFF is inconsistent
    path = tmp_path / "bad.tsv"
    path.write_text("نص\tNOT_OFF\tHS\n", encoding="utf-8")
    with pytest.raises(HierarchyError):
        read_tsv(path, Schema.BOTH)


def test_label_helpers():
    assert positive_label(Task.A) == "OFF"
    assert positive_label(Task.B) == "HS"
    assert label_for(SAMPLE.records[1], Task.A) == "OFF"
    assert label_for(SAMPLE.records[1], Task.B) == "HS"


def test_upsample_balances_and_preserves():
    majority = [_both(f"نص {i}", "NOT_OFF", "NOT_HS") for i in range(20)]
    minority = [_both(f"سب {i}", "OFF", "NOT_HS") for i in range(6)]
    data = Dataset(records=majority + minority, split_name="dev")
    up = upsample_minority(data, Task.A, seed=42)
    counts = up.label_counts(Task.A)
    assert counts == {"NOT_OFF": 20, "OFF": 20}
    # every original record still present at least once
    originals = {(r.text, r.label_a) for r in data.records}
    upset = [(r.text, r.label_a) for r in up.records]
    assert originals <= set(upset)
    # duplicates only come from the minority class
    for text, lab in upset:
        if upset.count((text, lab)) > 1:
            assert lab == "OFF"


def test_upsample_deterministic():
    data = Dataset(records=[_both(f"ن {i}", "NOT_OFF", "NOT_HS") for i in range(9)]
                   + [_both("سب", "OFF", "HS")], split_name="d")
    a = upsample_minority(data, Task.A, seed=7)
    b = upsample_minority(data, Task.A, seed=7)
    assert [r.text for r in a.records] == [r.text for r in b.records]


def test_micro_corpus_shape_and_determinism():
    train, test = micro_corpus_splits(42)
    assert len(train) == 150 and len(test) == 50
    assert train.label_counts(Task.A) == {"NOT_OFF": 120, "OFF": 30}
    assert test.label_counts(Task.A) == {"NOT_OFF": 40, "OFF": 10}
    train2, test2 = micro_corpus_splits(42)
    assert [r.text for r in train.records] == [r.text for r in train2.records]
    assert [r.text for r in test.records] == [r.text for r in test2.records]
    full = stratified_micro_corpus(42)
    assert len(full) == 200


def test_micro_corpus_offensive_cues_survive_pipeline(full_config):
    """Self-audit: each offensive tweet, after full preprocessing, exposes
    exactly the normalized cue the splits are built on."""
    for split in micro_corpus_splits(42):
        for rec in split.records:
            norm = preprocess(rec.text, full_config).text
            has_cue = ("حيوان" in norm.split() or "ولد" in norm.split()
                       or "غاضب" in norm)
            assert has_cue == (rec.label_a == "OFF"), rec.text


def test_micro_corpus_disjoint_surface_forms():
    train, test = micro_corpus_splits(42)
    from ofansiv.corpus import (ANIMAL_CUES_TEST, ANIMAL_CUES_TRAIN,
                                DIALECT_CUES_TEST, DIALECT_CUES_TRAIN,
                                EMOJI_CUES_TEST, EMOJI_CUES_TRAIN)
    train_cues = set(ANIMAL_CUES_TRAIN) | set(DIALECT_CUES_TRAIN) | set(EMOJI_CUES_TRAIN)
    test_cues = set(ANIMAL_CUES_TEST) | set(DIALECT_CUES_TEST) | set(EMOJI_CUES_TEST)
    assert not train_cues & test_cues
    for rec in test.records:
        if rec.label_a == "OFF":
            assert not any(cue in rec.text for cue in train_cues), rec.text


def test_tab_in_text_rejected_on_write(tmp_path):
    data = Dataset(records=[_both("نص\tمشطور", "OFF", "NOT_HS")], split_name="x")
    with pytest.raises(SchemaError):
        write_tsv(data, tmp_path / "x.tsv", Schema.BOTH)
