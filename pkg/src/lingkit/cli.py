"""Command-line frontend: ``lingkit extract | features | correlate``.

Exit codes: 0 success, 2 usage or input error, 1 internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import traceback
from contextlib import contextmanager
from pathlib import Path

from . import analysis
from .annotation import annotate_plaintext, iter_conllu_documents
from .catalog import GENERAL, SelectionFilter, default_registry
from .derivation import DEFAULT_READING_SPEEDS, ReadingSpeeds
from .errors import LingkitError
from .extractor import ExtractionSession
from .lexicon import LexiconSet


def _wpm_triple(value: str) -> ReadingSpeeds:
    parts = value.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated speeds: fast,average,slow")
    try:
        speeds = ReadingSpeeds(*(float(p) for p in parts))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid reading speeds {value!r}") from None
    if any(not s > 0 for s in speeds):
        raise argparse.ArgumentTypeError("reading speeds must be positive")
    return speeds


def _comma_list(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def _add_selection_args(parser: argparse.ArgumentParser, with_keys: bool = True) -> None:
    if with_keys:
        parser.add_argument(
            "--features", type=_comma_list, default=None,
            help="comma-separated feature keys to extract (default: all selected)",
        )
    parser.add_argument(
        "--family", action="append", type=_comma_list, default=None,
        help="restrict to a linguistic family (repeatable, comma-separable)",
    )
    parser.add_argument(
        "--branch", action="append", type=_comma_list, default=None,
        help="restrict to a linguistic branch (repeatable, comma-separable)",
    )
    parser.add_argument(
        "--language", choices=("general", "all"), default="all",
        help="keep only language-agnostic features, or all (default)",
    )


def _add_lexicon_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicon-kup", default=None, help="Kuperman AoA lexicon TSV")
    parser.add_argument("--lexicon-bry", default=None, help="Brysbaert AoA lexicon TSV")
    parser.add_argument("--lexicon-zipf", default=None, help="SUBTLEX-US Zipf lexicon TSV")


def _selection_from_args(args: argparse.Namespace) -> SelectionFilter:
    flatten = lambda groups: tuple(x for group in groups for x in group) if groups else None
    return SelectionFilter(
        keys=tuple(getattr(args, "features", None) or ()) or None,
        families=flatten(args.family),
        branches=flatten(args.branch),
        applicability=GENERAL if args.language == "general" else None,
    )


def _lexicons_from_args(args: argparse.Namespace) -> LexiconSet:
    return LexiconSet.from_paths(
        kuperman=args.lexicon_kup,
        brysbaert=args.lexicon_bry,
        zipf=args.lexicon_zipf,
    )


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


@contextmanager
def _open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle


def _format_value(value) -> str:
    # 6 significant digits keeps tables readable; JSON output stays lossless
    if isinstance(value, int):
        return str(value)
    return f"{value:.6g}"


# ---------------------------------------------------------------------------
# extract
# ---------------------------------------------------------------------------

def run_extract(args: argparse.Namespace) -> int:
    text = _read_text(args.input)
    if args.format == "conllu":
        docs = list(iter_conllu_documents(text))
    elif args.per_line:
        docs = [annotate_plaintext(line) for line in text.splitlines() if line.strip()]
    else:
        docs = [annotate_plaintext(text)]

    session = ExtractionSession(
        lexicons=_lexicons_from_args(args), reading_speeds=args.wpm
    )
    matrix = session.extract_corpus(docs, _selection_from_args(args))

    with _open_output(args.output) as out:
        if args.output_format == "json":
            payload = [dict(zip(matrix.keys, row)) for row in matrix.rows]
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            delimiter = "," if args.output_format == "csv" else "\t"
            writer = csv.writer(out, delimiter=delimiter, lineterminator="\n")
            writer.writerow(matrix.keys)
            for row in matrix.rows:
                writer.writerow([_format_value(v) for v in row])
    return 0


# ---------------------------------------------------------------------------
# features list
# ---------------------------------------------------------------------------

_LIST_COLUMNS = ("key", "name", "formulation", "family", "branch", "applicability")


def run_features_list(args: argparse.Namespace) -> int:
    descriptors = default_registry().search(_selection_from_args(args))
    with _open_output(args.output) as out:
        if args.format == "json":
            json.dump([d.to_dict() for d in descriptors], out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(_LIST_COLUMNS + ("depends_on",))
            for d in descriptors:
                writer.writerow(
                    [d.key, d.name, d.formulation, d.family, d.branch,
                     d.applicability, " ".join(d.depends_on)]
                )
        else:
            rows = [[getattr(d, c) for c in _LIST_COLUMNS] for d in descriptors]
            widths = [
                max([len(c)] + [len(row[i]) for row in rows])
                for i, c in enumerate(_LIST_COLUMNS)
            ]
            header = "  ".join(c.upper().ljust(w) for c, w in zip(_LIST_COLUMNS, widths))
            out.write(header.rstrip() + "\n")
            for row in rows:
                out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")
    return 0


# ---------------------------------------------------------------------------
# correlate
# ---------------------------------------------------------------------------

def _read_labeled_corpus(args: argparse.Namespace) -> tuple[list[str], list[float]]:
    path = Path(args.input)
    delimiter = "\t" if path.suffix.lower() in (".tsv", ".tab") else ","
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle, delimiter=delimiter)
        fieldnames = reader.fieldnames or []
        for column in (args.text_col, args.label_col):
            if column not in fieldnames:
                raise LingkitError(
                    f"column {column!r} not found in {path.name} (has: {', '.join(fieldnames)})"
                )
        texts, labels = [], []
        for row_number, row in enumerate(reader, start=2):
            texts.append(row[args.text_col] or "")
            try:
                labels.append(float(row[args.label_col]))
            except (TypeError, ValueError):
                raise LingkitError(
                    f"row {row_number}: label {row[args.label_col]!r} is not numeric"
                ) from None
    return texts, labels


def run_correlate(args: argparse.Namespace) -> int:
    texts, labels = _read_labeled_corpus(args)
    if len(texts) < 2:
        raise LingkitError("correlation needs at least 2 rows")
    if len(set(labels)) == 1:
        raise LingkitError("zero label variance: labels are constant")

    corpus = analysis.LabeledCorpus.from_texts(texts, labels)
    report = analysis.correlate(
        corpus,
        _selection_from_args(args),
        lexicons=_lexicons_from_args(args),
        reading_speeds=args.wpm,
    )

    with _open_output(args.output) as out:
        if args.format == "json":
            payload = {
                "ranking": [[k, r] for k, r in report.ranking],
                "undefined": list(report.undefined),
            }
            if args.top:
                payload["top"] = [[k, r] for k, r in report.top(args.top)]
                payload["bottom"] = [[k, r] for k, r in report.bottom(args.top)]
            json.dump(payload, out, indent=2)
            out.write("\n")
            return 0
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(("feature", "r"))
            rows = (
                report.top(args.top) + report.bottom(args.top) if args.top else report.ranking
            )
            for key, r in rows:
                writer.writerow((key, _format_value(r)))
            if not args.top:
                for key in report.undefined:
                    writer.writerow((key, "undefined"))
            return 0
        out.write("feature\tr\n")
        rows = report.top(args.top) + report.bottom(args.top) if args.top else report.ranking
        for key, r in rows:
            out.write(f"{key}\t{r:.3f}\n")
        if not args.top:
            for key in report.undefined:
                out.write(f"{key}\tundefined\n")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lingkit",
        description="Handcrafted linguistic feature extraction and correlation studies.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    extract_p = sub.add_parser("extract", help="compute feature values for documents")
    extract_p.add_argument("-i", "--input", default="-", help="input file, or - for stdin")
    extract_p.add_argument(
        "--format", choices=("conllu", "text"), default="conllu",
        help="input format: pre-annotated CoNLL-U (default) or raw text",
    )
    extract_p.add_argument(
        "--per-line", action="store_true",
        help="text mode: treat each nonempty line as its own document",
    )
    _add_selection_args(extract_p)
    _add_lexicon_args(extract_p)
    extract_p.add_argument(
        "--output-format", choices=("csv", "json", "tsv"), default="csv"
    )
    extract_p.add_argument("-o", "--output", default="-", help="output file, or - for stdout")
    extract_p.add_argument(
        "--wpm", type=_wpm_triple, default=DEFAULT_READING_SPEEDS,
        help="reading speeds as fast,average,slow words per minute (default 250,200,150)",
    )
    extract_p.set_defaults(func=run_extract)

    features_p = sub.add_parser("features", help="inspect the feature registry")
    features_sub = features_p.add_subparsers(dest="features_command", required=True)
    list_p = features_sub.add_parser("list", help="print matching feature descriptors")
    _add_selection_args(list_p, with_keys=False)
    list_p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    list_p.add_argument("-o", "--output", default="-")
    list_p.set_defaults(func=run_features_list)

    correlate_p = sub.add_parser(
        "correlate", help="rank features by Pearson correlation with a label column"
    )
    correlate_p.add_argument(
        "-i", "--input", required=True,
        help="labeled corpus CSV/TSV with a text column and a numeric label column",
    )
    correlate_p.add_argument("--text-col", default="text", help="text column name")
    correlate_p.add_argument("--label-col", default="label", help="label column name")
    correlate_p.add_argument(
        "--top", type=int, default=None,
        help="print only the top-N and bottom-N features",
    )
    _add_selection_args(correlate_p)
    _add_lexicon_args(correlate_p)
    correlate_p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    correlate_p.add_argument("-o", "--output", default="-")
    correlate_p.add_argument("--wpm", type=_wpm_triple, default=DEFAULT_READING_SPEEDS)
    correlate_p.set_defaults(func=run_correlate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LingkitError, OSError, UnicodeDecodeError) as exc:
        print(f"lingkit: error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
