"""End-to-end command-line interface tests (in-process via main())."""

import pytest

from ofansiv.cli import main


@pytest.fixture()
def corpora(tmp_path):
    train = tmp_path / "train.tsv"
    test = tmp_path / "test.tsv"
    assert main(["gen-corpus", "--out-train", str(train),
                 "--out-test", str(test), "--seed", "42"]) == 0
    return train, test


def test_unknown_command_exits_1(capsys):
    assert main(["frobnicate"]) == 1


def test_unknown_flag_exits_1(capsys):
    assert main(["preprocess", "--bogus"]) == 1


def test_missing_required_arg_exits_1(capsys):
    assert main(["train", "--task", "A"]) == 1


def test_missing_input_file_exits_2(tmp_path, capsys):
    assert main(["preprocess", "--in", str(tmp_path / "nope.txt"),
                 "--out", str(tmp_path / "out.txt")]) == 2


def test_malformed_tsv_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_text("نص\tNOT_OFF\tHS\n", encoding="utf-8")
    assert main(["train", "--train", str(bad), "--task", "A",
                 "--model-out", str(tmp_path / "m"),
                 "--vocab-out", str(tmp_path / "v")]) == 2


def test_preprocess_lines(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("@USER يا كلب 😠\nمرحبا #يوم_جميل\n", encoding="utf-8")
    out = tmp_path / "out.txt"
    assert main(["preprocess", "--in", str(src), "--out", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 2
    assert "حيوان" in lines[0] and "غاضب" in lines[0]
    assert lines[1] == "مرحبا يوم جميل"


def test_preprocess_stage_flags(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("يا كلب\n", encoding="utf-8")
    out = tmp_path / "out.txt"
    assert main(["preprocess", "--in", str(src), "--out", str(out),
                 "--no-category"]) == 0
    assert "كلب" in out.read_text(encoding="utf-8")
    assert main(["preprocess", "--in", str(src), "--out", str(out),
                 "--no-preprocessing"]) == 0
    assert out.read_text(encoding="utf-8") == "يا كلب\n"


def test_gen_corpus_shape(corpora, capsys):
    train, test = corpora
    assert len(train.read_text(encoding="utf-8").splitlines()) == 150
    assert len(test.read_text(encoding="utf-8").splitlines()) == 50


def test_train_predict_evaluate_round_trip(tmp_path, corpora, capsys):
    train, test = corpora
    model, vocab = tmp_path / "m.txt", tmp_path / "v.tsv"
    assert main(["train", "--train", str(train), "--task", "A",
                 "--model-out", str(model), "--vocab-out", str(vocab)]) == 0
    assert model.exists() and vocab.exists()

    preds = tmp_path / "preds.txt"
    assert main(["predict", "--in", str(test), "--out", str(preds),
                 "--model", str(model), "--vocab", str(vocab)]) == 0
    labels = preds.read_text(encoding="utf-8").splitlines()
    assert len(labels) == 50
    assert set(labels) <= {"OFF", "NOT_OFF"}

    assert main(["evaluate", "--in", str(test), "--task", "A",
                 "--model", str(model), "--vocab", str(vocab),
                 "--averaging", "positive_binary"]) == 0
    shown = capsys.readouterr().out
    assert "f1" in shown and "%" in shown


def test_train_with_upsample(tmp_path, corpora, capsys):
    train, _ = corpora
    assert main(["train", "--train", str(train), "--task", "A", "--upsample",
                 "--model-out", str(tmp_path / "m"),
                 "--vocab-out", str(tmp_path / "v")]) == 0
    assert "240 examples" in capsys.readouterr().out


def test_ablate_writes_artifacts(tmp_path, corpora, capsys):
    train, test = corpora
    report = tmp_path / "report.tsv"
    out_dir = tmp_path / "artifacts"
    assert main(["ablate", "--train", str(train), "--eval", str(test),
                 "--task", "A", "--out-report", str(report),
                 "--out-dir", str(out_dir)]) == 0
    lines = report.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("config\t")
    names = [ln.split("\t")[0] for ln in lines[1:]]
    assert names[0] == "baseline" and "full_pipeline" in names
    for name in names:
        assert (out_dir / f"{name}.vocab").exists()
        assert (out_dir / f"{name}.model").exists()
    table = capsys.readouterr().out
    assert "baseline" in table
