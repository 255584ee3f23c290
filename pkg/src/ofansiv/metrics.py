"""Evaluation measures and the per-technique ablation protocol.

Macro averaging computes precision/recall per class and averages them; the
macro F1 is the harmonic mean of the macro precision and macro recall so
every report is self-consistent (f1 == harmonic(precision, recall) under
its own averaging).  All 0/0 ratios are defined as 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

from . import svm as svm_mod
from . import vectorize
from .corpus import Dataset, Task, label_for, positive_label, upsample_minority
from .errors import OfansivError
from .normalize import PipelineConfig, preprocess


class MetricsError(OfansivError):
    pass


class LengthMismatchError(MetricsError):
    pass


class UnknownLabelError(MetricsError):
    pass


class EmptyMatrixError(MetricsError):
    pass


class Averaging(Enum):
    MACRO = "macro"
    POSITIVE_BINARY = "positive_binary"


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class MetricReport:
    precision: float
    recall: float
    f1: float
    accuracy: float
    averaging: Averaging


def _ratio(num: float, den: float) -> float:
    return num / den if den else 0.0


def _harmonic(p: float, r: float) -> float:
    return _ratio(2 * p * r, p + r)


def confusion(preds: Sequence[str], golds: Sequence[str], positive: str) -> ConfusionMatrix:
    if len(preds) != len(golds):
        raise LengthMismatchError(f"{len(preds)} predictions vs {len(golds)} golds")
    if not preds:
        raise LengthMismatchError("empty label lists")
    observed = set(golds) | set(preds)
    others = observed - {positive}
    if len(others) > 1:
        raise UnknownLabelError(f"more than one non-positive label: {sorted(others)}")
    tp = fp = fn = tn = 0
    for p, g in zip(preds, golds):
        if g == positive:
            if p == positive:
                tp += 1
            else:
                fn += 1
        else:
            if p == positive:
                fp += 1
            else:
                tn += 1
    return ConfusionMatrix(tp=tp, fp=fp, fn=fn, tn=tn)


def compute_metrics(cm: ConfusionMatrix, averaging: Averaging) -> MetricReport:
    if cm.total == 0:
        raise EmptyMatrixError("confusion matrix is empty")
    accuracy = _ratio(cm.tp + cm.tn, cm.total)
    p_pos = _ratio(cm.tp, cm.tp + cm.fp)
    r_pos = _ratio(cm.tp, cm.tp + cm.fn)
    if averaging is Averaging.POSITIVE_BINARY:
        return MetricReport(precision=p_pos, recall=r_pos,
                            f1=_harmonic(p_pos, r_pos), accuracy=accuracy,
                            averaging=averaging)
    p_neg = _ratio(cm.tn, cm.tn + cm.fn)
    r_neg = _ratio(cm.tn, cm.tn + cm.fp)
    precision = (p_pos + p_neg) / 2
    recall = (r_pos + r_neg) / 2
    return MetricReport(precision=precision, recall=recall,
                        f1=_harmonic(precision, recall), accuracy=accuracy,
                        averaging=averaging)


class AblationMode(Enum):
    INDIVIDUAL = "individual"
    CUMULATIVE = "cumulative"


@dataclass(frozen=True)
class AblationRow:
    name: str
    config: PipelineConfig
    upsample: bool = False


@dataclass
class AblationResult:
    name: str
    report: MetricReport
    cm: ConfusionMatrix
    vocab: vectorize.Vocabulary
    model: svm_mod.SvmModel


def evaluate_config(train_ds: Dataset, eval_ds: Dataset, task: Task,
                    config: PipelineConfig, *, upsample: bool = False,
                    C: float = 1.0, tol: float = 1e-4, max_iter: int = 10_000,
                    seed: int = 42, averaging: Averaging = Averaging.MACRO,
                    name: str = "") -> AblationResult:
    """Preprocess -> fit vocabulary on train -> train SVM -> score eval."""
    if upsample:
        train_ds = upsample_minority(train_ds, task, seed)
    train_texts = [preprocess(r.text, config) for r in train_ds.records]
    eval_texts = [preprocess(r.text, config) for r in eval_ds.records]
    vocab = vectorize.fit_vocabulary(train_texts)
    X_train = vectorize.transform_many(train_texts, vocab)
    X_eval = vectorize.transform_many(eval_texts, vocab)
    y_train = [label_for(r, task) for r in train_ds.records]
    golds = [label_for(r, task) for r in eval_ds.records]
    pos = positive_label(task)
    model = svm_mod.train(svm_mod.TrainingSet(X=X_train, y=y_train),
                          C=C, tol=tol, max_iter=max_iter, seed=seed,
                          positive_label=pos)
    preds = svm_mod.predict_many(model, X_eval)
    cm = confusion(preds, golds, pos)
    report = compute_metrics(cm, averaging)
    return AblationResult(name=name or config.name, report=report, cm=cm,
                          vocab=vocab, model=model)


def run_ablation(train_ds: Dataset, eval_ds: Dataset, task: Task,
                 rows: Sequence[AblationRow], mode: AblationMode = AblationMode.INDIVIDUAL,
                 *, C: float = 1.0, tol: float = 1e-4, max_iter: int = 10_000,
                 seed: int = 42, averaging: Averaging = Averaging.MACRO) -> list[AblationResult]:
    """One result per row, preceded by a no-preprocessing baseline row.

    In cumulative mode, row k runs with the union of the stage sets of rows
    1..k (the upsample flag also sticks once enabled).
    """
    lexicons = rows[0].config.lexicons if rows else {}
    baseline = AblationRow("baseline", PipelineConfig.none(lexicons))
    results = [
        evaluate_config(train_ds, eval_ds, task, baseline.config,
                        upsample=False, C=C, tol=tol, max_iter=max_iter,
                        seed=seed, averaging=averaging, name=baseline.name)
    ]
    acc_stages: frozenset = frozenset()
    acc_upsample = False
    for row in rows:
        if mode is AblationMode.CUMULATIVE:
            acc_stages = acc_stages | row.config.stages
            acc_upsample = acc_upsample or row.upsample
            cfg = PipelineConfig(stages=acc_stages, lexicons=row.config.lexicons,
                                 name=row.name)
            ups = acc_upsample
        else:
            cfg, ups = row.config, row.upsample
        results.append(
            evaluate_config(train_ds, eval_ds, task, cfg, upsample=ups,
                            C=C, tol=tol, max_iter=max_iter, seed=seed,
                            averaging=averaging, name=row.name)
        )
    return results


def render_table(results: Sequence[AblationResult]) -> str:
    """Human-readable table; percentages rounded to two decimals."""
    name_w = max(len(r.name) for r in results)
    header = f"{'config'.ljust(name_w)}  precision  recall     f1         accuracy"
    lines = [header, "-" * len(header)]
    for r in results:
        rep = r.report
        cells = "  ".join(f"{100 * v:8.2f}%" for v in
                          (rep.precision, rep.recall, rep.f1, rep.accuracy))
        lines.append(f"{r.name.ljust(name_w)}  {cells}")
    return "\n".join(lines)


def write_report_tsv(results: Sequence[AblationResult], path: str | Path) -> None:
    """Machine-readable report at full precision."""
    lines = ["config\tprecision\trecall\tf1\taccuracy"]
    for r in results:
        rep = r.report
        vals = "\t".join(format(v, ".17g") for v in
                         (rep.precision, rep.recall, rep.f1, rep.accuracy))
        lines.append(f"{r.name}\t{vals}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
