"""Linear SVM with hinge loss and an unregularized intercept.

Trains by maximizing the dual of
``J(w, b) = 0.5 ||w||^2 + C * sum_i max(0, 1 - y_i (w.x_i + b))``
with the equality constraint ``sum_i y_i alpha_i = 0`` kept exact, using
maximal-violating-pair coordinate updates.  The intercept is recovered at
every step by exact one-dimensional minimization of the primal, which makes
the duality gap computable; training stops once the gap certifies the primal
objective is within ``tol`` (relative) of the optimum.  Fully deterministic:
pair selection has no random component (the seed is recorded for provenance
only).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .errors import OfansivError
from .vectorize import SparseVector


class SvmError(OfansivError):
    pass


class SingleClassDataError(SvmError):
    pass


class DimensionMismatchError(SvmError):
    pass


@dataclass(frozen=True)
class TrainingSet:
    X: Sequence[SparseVector]
    y: Sequence[str]

    def validate(self) -> None:
        if len(self.X) == 0:
            raise SvmError("empty training set")
        if len(self.X) != len(self.y):
            raise DimensionMismatchError(
                f"{len(self.X)} vectors but {len(self.y)} labels")
        dims = {x.dim for x in self.X}
        if len(dims) != 1:
            raise DimensionMismatchError(f"inconsistent dims {sorted(dims)}")
        if len(set(self.y)) < 2:
            raise SingleClassDataError("training data contains a single class")
        if len(set(self.y)) > 2:
            raise SvmError(f"more than two labels: {sorted(set(self.y))}")


@dataclass(frozen=True)
class SvmModel:
    weights: np.ndarray
    bias: float
    positive_label: str
    negative_label: str
    C: float = 1.0
    tol: float = 1e-4
    max_iter: int = 10_000
    seed: int = 42
    converged: bool = True

    @property
    def dim(self) -> int:
        return int(self.weights.shape[0])


def to_csr(X: Sequence[SparseVector]) -> sp.csr_matrix:
    dims = {x.dim for x in X}
    if len(dims) != 1:
        raise DimensionMismatchError(f"inconsistent dims {sorted(dims)}")
    dim = dims.pop()
    indptr = [0]
    indices: list[int] = []
    data: list[float] = []
    for x in X:
        for idx, count in x.entries:
            indices.append(idx)
            data.append(float(count))
        indptr.append(len(indices))
    return sp.csr_matrix(
        (np.asarray(data), np.asarray(indices, dtype=np.int64), np.asarray(indptr, dtype=np.int64)),
        shape=(len(X), dim),
    )


def optimal_bias(scores: np.ndarray, y: np.ndarray) -> float:
    """Exact minimizer of ``sum_i max(0, 1 - y_i (scores_i + b))`` over b.

    The objective is piecewise linear and convex in b with breakpoints at
    ``y_i - scores_i``; the smallest breakpoint where the right-derivative
    turns non-negative is a minimizer (deterministic tie rule).
    """
    bp = y - scores
    order = np.argsort(bp, kind="stable")
    bp_sorted = bp[order]
    y_sorted = y[order]
    neg_cum = np.cumsum(y_sorted < 0)           # negatives with bp <= current
    pos_total = int(np.sum(y_sorted > 0))
    pos_cum = np.cumsum(y_sorted > 0)
    pos_gt = pos_total - pos_cum                # positives with bp > current
    right_deriv = neg_cum - pos_gt
    k = int(np.argmax(right_deriv >= 0))
    return float(bp_sorted[k])


def hinge_objective(w: np.ndarray, b: float, X: sp.csr_matrix, y: np.ndarray, C: float) -> float:
    margins = 1.0 - y * (X @ w + b)
    return float(0.5 * w @ w + C * np.maximum(0.0, margins).sum())


def primal_objective(model: SvmModel, data: TrainingSet) -> float:
    X = to_csr(data.X)
    y = np.array([1.0 if lbl == model.positive_label else -1.0 for lbl in data.y])
    return hinge_objective(model.weights, model.bias, X, y, model.C)


def _infer_positive(y: Sequence[str]) -> str:
    # Minority class as positive; lexicographically smaller label on ties.
    labels = sorted(set(y))
    counts = {lbl: 0 for lbl in labels}
    for lbl in y:
        counts[lbl] += 1
    return min(labels, key=lambda lbl: (counts[lbl], lbl))


def train(data: TrainingSet, C: float = 1.0, tol: float = 1e-4,
          max_iter: int = 10_000, seed: int = 42,
          positive_label: str | None = None) -> SvmModel:
    """Fit the SVM; see the module docstring for the optimization scheme.

    ``max_iter`` bounds the number of dual pair updates; if it is hit before
    the duality gap closes, the model is returned with ``converged=False``.
    """
    data.validate()
    if C <= 0 or tol <= 0 or max_iter <= 0:
        raise SvmError("C, tol and max_iter must be positive")
    if positive_label is None:
        positive_label = _infer_positive(data.y)
    labels = set(data.y)
    if positive_label not in labels:
        raise SvmError(f"positive label {positive_label!r} not present in data")
    negative_label = (labels - {positive_label}).pop()

    X = to_csr(data.X)
    n, dim = X.shape
    y = np.array([1.0 if lbl == positive_label else -1.0 for lbl in data.y])

    sq_norms = np.asarray(X.multiply(X).sum(axis=1)).ravel()
    alpha = np.zeros(n)
    w = np.zeros(dim)
    Xw = np.zeros(n)
    eps = 1e-12

    def gap_closed() -> bool:
        b = optimal_bias(Xw, y)
        primal = 0.5 * float(w @ w) + C * float(np.maximum(0.0, 1.0 - y * (Xw + b)).sum())
        dual = float(alpha.sum()) - 0.5 * float(w @ w)
        return primal - dual <= tol * max(abs(primal), 1e-12)

    converged = False
    for _ in range(max_iter):
        if gap_closed():
            converged = True
            break

        G = y * Xw - 1.0          # gradient of the minimized dual
        viol = -y * G
        up = ((y > 0) & (alpha < C - eps)) | ((y < 0) & (alpha > eps))
        low = ((y > 0) & (alpha > eps)) | ((y < 0) & (alpha < C - eps))
        if not up.any() or not low.any():
            break
        i = int(np.argmax(np.where(up, viol, -np.inf)))
        j = int(np.argmin(np.where(low, viol, np.inf)))
        if viol[i] - viol[j] <= eps:
            break

        s = y[i] * y[j]
        xi = X.getrow(i)
        xj = X.getrow(j)
        k_ij = float((xi @ xj.T).toarray()[0, 0])
        eta = sq_norms[i] + sq_norms[j] - 2.0 * k_ij
        deriv = G[i] - s * G[j]

        # feasible step range for t = delta alpha_i (alpha_j moves by -s t)
        lo = -alpha[i]
        hi = C - alpha[i]
        if s > 0:
            lo = max(lo, alpha[j] - C)
            hi = min(hi, alpha[j])
        else:
            lo = max(lo, -alpha[j])
            hi = min(hi, C - alpha[j])
        if eta > eps:
            t = np.clip(-deriv / eta, lo, hi)
        else:
            t = lo if deriv > 0 else hi
        if t == 0.0:
            break

        alpha[i] += t
        alpha[j] -= s * t
        diff = xi - xj
        w += t * y[i] * diff.toarray().ravel()
        Xw += t * y[i] * (X @ diff.T).toarray().ravel()

    converged = converged or gap_closed()
    bias = optimal_bias(Xw, y)
    return SvmModel(weights=w, bias=bias, positive_label=positive_label,
                    negative_label=negative_label, C=C, tol=tol,
                    max_iter=max_iter, seed=seed, converged=converged)


def decision_value(model: SvmModel, x: SparseVector) -> float:
    """Sparse dot product ``w.x + b``."""
    if x.dim != model.dim:
        raise DimensionMismatchError(f"vector dim {x.dim} != model dim {model.dim}")
    w = model.weights
    return float(sum(count * w[idx] for idx, count in x.entries) + model.bias)


def predict(model: SvmModel, x: SparseVector) -> str:
    """Positive label iff the decision value is strictly positive; exact
    zero goes to the negative class."""
    return model.positive_label if decision_value(model, x) > 0 else model.negative_label


def predict_many(model: SvmModel, X: Sequence[SparseVector]) -> list[str]:
    return [predict(model, x) for x in X]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def save_model(model: SvmModel, path: str | Path) -> None:
    """Text serialization; weight values use 17 significant digits so the
    round trip is exact."""
    for lbl in (model.positive_label, model.negative_label):
        if any(ch.isspace() for ch in lbl):
            raise SvmError(f"label {lbl!r} contains whitespace; cannot serialize")
    lines = [
        "linear-svm v1 "
        f"dim={model.dim} pos={model.positive_label} neg={model.negative_label} "
        f"C={_fmt(model.C)} tol={_fmt(model.tol)} seed={model.seed} "
        f"converged={'true' if model.converged else 'false'}"
    ]
    lines.append(f"bias {_fmt(model.bias)}")
    for idx in np.flatnonzero(model.weights):
        lines.append(f"{int(idx)} {_fmt(model.weights[idx])}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> SvmModel:
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split()
        if header[:2] != ["linear-svm", "v1"]:
            raise SvmError(f"{path}: bad model header")
        meta = dict(f.split("=", 1) for f in header[2:])
        dim = int(meta["dim"])
        bias_line = fh.readline().split()
        if bias_line[0] != "bias":
            raise SvmError(f"{path}: missing bias line")
        weights = np.zeros(dim)
        for line in fh:
            fields = line.split()
            if not fields:
                continue
            weights[int(fields[0])] = float(fields[1])
    return SvmModel(weights=weights, bias=float(bias_line[1]),
                    positive_label=meta["pos"], negative_label=meta["neg"],
                    C=float(meta["C"]), tol=float(meta["tol"]),
                    seed=int(meta["seed"]), converged=meta["converged"] == "true")


def flip_labels(model: SvmModel) -> SvmModel:
    """Swap which class is positive; negates the decision function."""
    return replace(model, weights=-model.weights, bias=-model.bias,
                   positive_label=model.negative_label,
                   negative_label=model.positive_label)
