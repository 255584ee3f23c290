"""Command-line interface: one executable, six subcommands.

Exit codes: 0 success, 1 usage error, 2 data/validation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import lexicons as lex_mod
from . import metrics as metrics_mod
from . import svm as svm_mod
from . import vectorize
from .corpus import (Dataset, Schema, Task, label_for, micro_corpus_splits,
                     positive_label, read_tsv, upsample_minority, write_tsv)
from .errors import OfansivError
from .normalize import STAGE_ORDER, PipelineConfig, Stage, preprocess


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


_STAGE_FLAGS = {
    "emoji": Stage.EMOJI_CONVERT,
    "emoticon": Stage.EMOTICON_CONVERT,
    "hashtag": Stage.HASHTAG_SEGMENT,
    "letters": Stage.LETTER_NORMALIZE,
    "repeats": Stage.REPEAT_REDUCE,
    "misc": Stage.MISC_CLEAN,
    "dialect": Stage.DIALECT_NORMALIZE,
    "category": Stage.WORD_CATEGORIZE,
    "stopwords": Stage.STOPWORD_REMOVE,
}


def _add_stage_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("preprocessing stages (all enabled by default)")
    g.add_argument("--all-stages", action="store_true",
                   help="enable every stage (the default; provided for explicit scripts)")
    g.add_argument("--no-preprocessing", action="store_true",
                   help="disable every stage (baseline behavior)")
    for flag, stage in _STAGE_FLAGS.items():
        g.add_argument(f"--no-{flag}", action="store_true",
                       help=f"disable the {stage.value} stage")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lexicon-dir", type=Path, default=None,
                   help="directory holding the five lexicon files "
                        f"(default: packaged data, or ${lex_mod.ENV_LEXICON_DIR})")
    p.add_argument("--seed", type=int, default=42)


def _add_hyperparams(p: argparse.ArgumentParser) -> None:
    p.add_argument("--C", type=float, default=1.0, help="SVM regularization trade-off")
    p.add_argument("--tol", type=float, default=1e-4, help="relative optimality tolerance")
    p.add_argument("--max-iter", type=int, default=10_000, help="max dual pair updates")


def _config_from_args(args: argparse.Namespace) -> PipelineConfig:
    lexicons = lex_mod.load_all(args.lexicon_dir)
    if args.no_preprocessing:
        return PipelineConfig.none(lexicons)
    stages = [s for flag, s in _STAGE_FLAGS.items()
              if not getattr(args, f"no_{flag}")]
    if len(stages) == len(_STAGE_FLAGS):
        return PipelineConfig.full(lexicons)
    return PipelineConfig.of(stages, lexicons)


def _schema(value: str) -> Schema:
    return Schema(value)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ofansiv",
                     description="Arabic offensive-language detection pipeline")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preprocess", help="normalize tweets, one per line")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--out", dest="output", type=Path, required=True)
    _add_stage_flags(p)
    _add_common(p)

    p = sub.add_parser("gen-corpus", help="emit the bundled synthetic micro-corpus")
    p.add_argument("--out-train", type=Path, required=True)
    p.add_argument("--out-test", type=Path, required=True)
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("train", help="fit vocabulary and SVM on a labeled TSV")
    p.add_argument("--train", dest="train_path", type=Path, required=True)
    p.add_argument("--task", choices=["A", "B"], required=True)
    p.add_argument("--schema", type=_schema, default=Schema.BOTH,
                   choices=list(Schema), help="TSV column layout (default: both labels)")
    p.add_argument("--model-out", type=Path, required=True)
    p.add_argument("--vocab-out", type=Path, required=True)
    p.add_argument("--upsample", action="store_true",
                   help="balance classes by seeded minority duplication")
    _add_stage_flags(p)
    _add_common(p)
    _add_hyperparams(p)

    p = sub.add_parser("predict", help="write one label per input line")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--out", dest="output", type=Path, required=True)
    p.add_argument("--model", type=Path, required=True)
    p.add_argument("--vocab", type=Path, required=True)
    _add_stage_flags(p)
    _add_common(p)

    p = sub.add_parser("evaluate", help="score a trained model on a labeled TSV")
    p.add_argument("--in", dest="input", type=Path, required=True)
    p.add_argument("--task", choices=["A", "B"], required=True)
    p.add_argument("--schema", type=_schema, default=Schema.BOTH, choices=list(Schema))
    p.add_argument("--model", type=Path, required=True)
    p.add_argument("--vocab", type=Path, required=True)
    p.add_argument("--averaging", choices=["macro", "positive_binary"], default="macro")
    _add_stage_flags(p)
    _add_common(p)

    p = sub.add_parser("ablate", help="per-technique ablation table")
    p.add_argument("--train", dest="train_path", type=Path, required=True)
    p.add_argument("--eval", dest="eval_path", type=Path, required=True)
    p.add_argument("--task", choices=["A", "B"], required=True)
    p.add_argument("--schema", type=_schema, default=Schema.BOTH, choices=list(Schema))
    p.add_argument("--mode", choices=["individual", "cumulative"], default="individual")
    p.add_argument("--averaging", choices=["macro", "positive_binary"], default="macro")
    p.add_argument("--out-report", type=Path, default=None,
                   help="write the machine-readable TSV report here")
    p.add_argument("--out-dir", type=Path, default=None,
                   help="write per-config vocabulary and model files here")
    _add_common(p)
    _add_hyperparams(p)

    return parser


def _first_column(line: str) -> tuple[str, str]:
    if "\t" in line:
        text, rest = line.split("\t", 1)
        return text, "\t" + rest
    return line, ""


def _cmd_preprocess(args) -> int:
    config = _config_from_args(args)
    out_lines = []
    for line in args.input.read_text(encoding="utf-8").splitlines():
        text, rest = _first_column(line)
        out_lines.append(preprocess(text, config).text + rest)
    args.output.write_text("\n".join(out_lines) + "\n", encoding="utf-8")
    return 0


def _cmd_gen_corpus(args) -> int:
    train, test = micro_corpus_splits(args.seed)
    write_tsv(train, args.out_train, Schema.BOTH)
    write_tsv(test, args.out_test, Schema.BOTH)
    print(f"wrote {len(train)} train tweets to {args.out_train}, "
          f"{len(test)} test tweets to {args.out_test}")
    return 0


def _load_training(args, config: PipelineConfig, task: Task, dataset: Dataset):
    texts = [preprocess(r.text, config) for r in dataset.records]
    vocab = vectorize.fit_vocabulary(texts)
    X = vectorize.transform_many(texts, vocab)
    y = [label_for(r, task) for r in dataset.records]
    return vocab, X, y


def _cmd_train(args) -> int:
    config = _config_from_args(args)
    task = Task(args.task)
    dataset = read_tsv(args.train_path, args.schema)
    if args.upsample:
        dataset = upsample_minority(dataset, task, args.seed)
    vocab, X, y = _load_training(args, config, task, dataset)
    model = svm_mod.train(svm_mod.TrainingSet(X=X, y=y), C=args.C, tol=args.tol,
                          max_iter=args.max_iter, seed=args.seed,
                          positive_label=positive_label(task))
    vectorize.save_vocabulary(vocab, args.vocab_out)
    svm_mod.save_model(model, args.model_out)
    status = "converged" if model.converged else "max_iter reached without certificate"
    print(f"trained on {len(X)} examples, vocab size {vocab.size}, {status}")
    return 0


def _cmd_predict(args) -> int:
    config = _config_from_args(args)
    vocab = vectorize.load_vocabulary(args.vocab)
    model = svm_mod.load_model(args.model)
    labels = []
    for line in args.input.read_text(encoding="utf-8").splitlines():
        text, _ = _first_column(line)
        x = vectorize.transform(preprocess(text, config), vocab)
        labels.append(svm_mod.predict(model, x))
    args.output.write_text("\n".join(labels) + "\n", encoding="utf-8")
    return 0


def _cmd_evaluate(args) -> int:
    config = _config_from_args(args)
    task = Task(args.task)
    vocab = vectorize.load_vocabulary(args.vocab)
    model = svm_mod.load_model(args.model)
    dataset = read_tsv(args.input, args.schema)
    golds = [label_for(r, task) for r in dataset.records]
    preds = [svm_mod.predict(model, vectorize.transform(preprocess(r.text, config), vocab))
             for r in dataset.records]
    cm = metrics_mod.confusion(preds, golds, positive_label(task))
    report = metrics_mod.compute_metrics(cm, metrics_mod.Averaging(args.averaging))
    for field in ("precision", "recall", "f1", "accuracy"):
        print(f"{field:9s} {100 * getattr(report, field):6.2f}%")
    return 0


def default_ablation_rows(lexicons) -> list[metrics_mod.AblationRow]:
    """The six per-technique rows of the preliminary evaluation protocol."""
    def cfg(stages, name):
        return PipelineConfig.of(stages, lexicons, name=name)

    return [
        metrics_mod.AblationRow("emoji_and_emoticon",
                                cfg([Stage.EMOJI_CONVERT, Stage.EMOTICON_CONVERT],
                                    "emoji_and_emoticon")),
        metrics_mod.AblationRow("dialect_normalization",
                                cfg([Stage.DIALECT_NORMALIZE], "dialect_normalization")),
        metrics_mod.AblationRow("word_categorization",
                                cfg([Stage.WORD_CATEGORIZE], "word_categorization")),
        metrics_mod.AblationRow("letters_normalization",
                                cfg([Stage.LETTER_NORMALIZE, Stage.REPEAT_REDUCE],
                                    "letters_normalization")),
        metrics_mod.AblationRow("misc_and_hashtags",
                                cfg([Stage.MISC_CLEAN, Stage.HASHTAG_SEGMENT,
                                     Stage.STOPWORD_REMOVE], "misc_and_hashtags")),
        metrics_mod.AblationRow("upsampling", PipelineConfig.none(lexicons, "upsampling"),
                                upsample=True),
        metrics_mod.AblationRow("full_pipeline",
                                PipelineConfig.full(lexicons, "full_pipeline")),
    ]


def _cmd_ablate(args) -> int:
    lexicons = lex_mod.load_all(args.lexicon_dir)
    task = Task(args.task)
    train_ds = read_tsv(args.train_path, args.schema)
    eval_ds = read_tsv(args.eval_path, args.schema)
    rows = default_ablation_rows(lexicons)
    results = metrics_mod.run_ablation(
        train_ds, eval_ds, task, rows,
        metrics_mod.AblationMode(args.mode),
        C=args.C, tol=args.tol, max_iter=args.max_iter, seed=args.seed,
        averaging=metrics_mod.Averaging(args.averaging))
    print(metrics_mod.render_table(results))
    if args.out_report:
        metrics_mod.write_report_tsv(results, args.out_report)
    if args.out_dir:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        for res in results:
            vectorize.save_vocabulary(res.vocab, args.out_dir / f"{res.name}.vocab")
            svm_mod.save_model(res.model, args.out_dir / f"{res.name}.model")
    return 0


_COMMANDS = {
    "preprocess": _cmd_preprocess,
    "gen-corpus": _cmd_gen_corpus,
    "train": _cmd_train,
    "predict": _cmd_predict,
    "evaluate": _cmd_evaluate,
    "ablate": _cmd_ablate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (OfansivError, OSError) as exc:
        print(f"ofansiv: error: {exc}", file=sys.stderr)
        return 2


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
