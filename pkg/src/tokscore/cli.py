"""
Command Line Interface
----------------------
The ``tokscore`` console script. Each subcommand wraps one library entry
point: score tokenized files, train and apply tokenizers, verify the coding
bounds, and correlate predictors with performance tables.

Results are written to stdout (or an output file) with no decoration, so
they can be piped into other tools. Log records and error messages go to
stderr. Exit codes are 0 on success, 1 for input/output problems (missing,
empty, or undecodable files, characters a model does not cover), 2 for usage
errors, and 3 when ``verify-bounds`` finds a violated bound.

"""

from __future__ import annotations
from typing import Sequence

import argparse
import os
import sys

from ._core import (
    METRICS,
    CoverageError,
    EmptyInputError,
    MetricRequest,
    defaults,
    parse_extras,
    templates,
)
from ._utils import configure_logging, get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_BOUNDS = 3


def main(argv: Sequence[str] = None) -> int:
    """
    Run the command line interface.

    Parameters
    ----------
    argv : Sequence[str], optional
        Arguments without the program name. The default is None, which
        reads ``sys.argv``.

    Returns
    -------
    code : int
        Process exit code.

    """

    parser = _build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.verbose)

    try:
        return args.func(args)
    except (OSError, UnicodeDecodeError, EmptyInputError,
            CoverageError) as exc:
        _error(exc)
        return EXIT_IO
    except (ValueError, TypeError) as exc:
        _error(exc)
        return EXIT_USAGE


def cmd_score(args: argparse.Namespace) -> int:
    """Print one metric value for the pooled input files."""

    from .corpus import load_tokenized

    params = parse_extras(args.extra)
    if args.base is not None:
        params['base'] = args.base

    request = MetricRequest(args.metric, **params)
    corpus = load_tokenized(args.input)

    result = request.compute(corpus, weighting=args.weighting)
    print(repr(result.value))

    return EXIT_OK


def cmd_train_bpe(args: argparse.Namespace) -> int:
    """Train a BPE model and print its vocabulary size."""

    from .tokenizers import save_model, train_bpe

    texts = _read_lines(args.input)
    model = train_bpe(texts, args.vocab_size, args.temperature, args.seed,
                      args.min_count, bar=args.progress)

    save_model(model, args.model_out)
    print(len(model.vocabulary))

    return EXIT_OK


def cmd_train_lzw(args: argparse.Namespace) -> int:
    """Train an LZW dictionary and print its size."""

    from .tokenizers import save_model, train_lzw

    texts = _read_lines(args.input)
    model = train_lzw(texts, args.vocab_size)

    save_model(model, args.model_out)
    print(model.size)

    return EXIT_OK


def cmd_apply(args: argparse.Namespace) -> int:
    """Tokenize lines with a saved model, or restore tokenized lines."""

    from .tokenizers import (
        BpeModel,
        apply_bpe,
        apply_lzw,
        load_model,
        render_bpe,
        render_lzw,
        unrender_bpe,
        unrender_lzw,
    )

    model = load_model(args.model)
    is_bpe = isinstance(model, BpeModel)

    text = _read_raw(args.input)
    lines = text.split('\n')
    if text.endswith('\n'):
        lines.pop()

    out = []
    for n, line in enumerate(lines, start=1):
        if args.detokenize:
            out.append(unrender_bpe(line) if is_bpe else unrender_lzw(line))
        elif is_bpe:
            out.append(render_bpe(apply_bpe(model, line)))
        else:
            try:
                tokens = apply_lzw(model, line)
            except CoverageError as exc:
                raise CoverageError(exc.symbol,
                                    f"LZW dictionary (line {n})") from None
            out.append(render_lzw(tokens))

    end = '\n' if text.endswith('\n') else ''
    _write_text('\n'.join(out) + end, args.output)

    return EXIT_OK


def cmd_verify_bounds(args: argparse.Namespace) -> int:
    """Print the bound report; exit 3 if any bound fails."""

    from .coding import verify_bounds
    from .corpus import load_tokenized

    corpus = load_tokenized(args.input)
    report = verify_bounds(corpus, args.alpha, args.base)

    sys.stdout.write(report.to_text())

    if not report.passed:
        logger.error("A coding bound failed; see the report flags.")
        return EXIT_BOUNDS

    return EXIT_OK


def cmd_correlate(args: argparse.Namespace) -> int:
    """Print Pearson and Spearman results per predictor column."""

    from .analysis import ObservationTable, correlate_table, export_plot_table

    table = ObservationTable.read(args.table, args.performance)
    results = correlate_table(table, args.predictor or None)

    _write_text(export_plot_table(results), args.output)

    return EXIT_OK


def cmd_grid_search(args: argparse.Namespace) -> int:
    """Print the alpha curve or percentile triplets of a grid search."""

    from .analysis import (
        ObservationTable,
        export_plot_table,
        grid_search_alpha,
        grid_search_percentile,
    )

    table = ObservationTable.read(args.table, args.performance)

    if args.grid == 'alpha':
        result = grid_search_alpha(table, holdout=args.holdout,
                                   weighting=args.weighting,
                                   bar=args.progress)
        best = f"alpha={result.best_alpha!r}"
    else:
        result = grid_search_percentile(table, step=args.step,
                                        holdout=args.holdout,
                                        weighting=args.weighting,
                                        bar=args.progress)
        best = "gamma1={!r} gamma2={!r}".format(*result.best_interval)

    print(f"best {best} r={result.best.coefficient:.6f}"
          f" p={result.best.pvalue:.3g}", file=sys.stderr)
    if result.holdout is not None:
        print(f"holdout r={result.holdout.coefficient:.6f}"
              f" p={result.holdout.pvalue:.3g}", file=sys.stderr)

    _write_text(export_plot_table(result), args.output)

    return EXIT_OK


def cmd_templates(args: argparse.Namespace) -> int:
    """Print the packaged templates."""
    templates(args.name)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    opts = defaults('metrics')
    bpe = defaults('bpe')

    parser = argparse.ArgumentParser(
        prog='tokscore',
        description="Score tokenizations with information-theoretic metrics.",
    )
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="log INFO (-v) or DEBUG (-vv) to stderr")

    subs = parser.add_subparsers(dest='command', required=True)

    score = subs.add_parser('score', help="score tokenized files")
    score.add_argument('-i', '--input', nargs='+', required=True,
                       help="tokenized files, one text per line")
    score.add_argument('-m', '--metric', choices=METRICS,
                       default=opts['metric'], help="metric name")
    score.add_argument('-e', '--extra', nargs='*', default=[],
                       metavar='NAME=VALUE',
                       help="metric parameters, e.g. power=3")
    score.add_argument('--weighting', choices=('token', 'text'),
                       default=opts['weighting'], help="unigram estimator")
    score.add_argument('--base', type=int, default=None,
                       help="logarithm base for entropies")
    score.set_defaults(func=cmd_score)

    train_bpe = subs.add_parser('train-bpe', help="train a BPE model")
    train_bpe.add_argument('--input', nargs='+', required=True,
                           help="raw text files, one text per line")
    train_bpe.add_argument('--vocab-size', type=int, required=True)
    train_bpe.add_argument('--temperature', default='greedy',
                           help="nonzero number, greedy, or antigreedy")
    train_bpe.add_argument('--seed', type=int, default=bpe['seed'])
    train_bpe.add_argument('--min-count', type=int, default=bpe['min_count'])
    train_bpe.add_argument('--model-out', required=True)
    train_bpe.add_argument('--progress', action='store_true',
                           help="show a progress bar on stderr")
    train_bpe.set_defaults(func=cmd_train_bpe)

    train_lzw = subs.add_parser('train-lzw', help="train an LZW dictionary")
    train_lzw.add_argument('--input', nargs='+', required=True,
                           help="raw text files, one text per line")
    train_lzw.add_argument('--vocab-size', type=int, required=True)
    train_lzw.add_argument('--model-out', required=True)
    train_lzw.set_defaults(func=cmd_train_lzw)

    apply = subs.add_parser('apply', help="tokenize or detokenize a file")
    apply.add_argument('--model', required=True)
    apply.add_argument('--input', required=True)
    apply.add_argument('--output', default=None,
                       help="output file; stdout when omitted")
    apply.add_argument('--detokenize', action='store_true',
                       help="restore raw text from tokenized lines")
    apply.set_defaults(func=cmd_apply)

    verify = subs.add_parser('verify-bounds', help="check coding theorems")
    verify.add_argument('-i', '--input', nargs='+', required=True)
    verify.add_argument('--alpha', type=float, default=opts['power'])
    verify.add_argument('--base', type=int, default=opts['base'])
    verify.set_defaults(func=cmd_verify_bounds)

    correlate = subs.add_parser('correlate', help="correlate table columns")
    correlate.add_argument('--table', required=True)
    correlate.add_argument('--predictor', nargs='*', default=[],
                           help="predictor columns; all when omitted")
    correlate.add_argument('--performance', default=None,
                           help="performance column name")
    correlate.add_argument('--output', default=None)
    correlate.set_defaults(func=cmd_correlate)

    search = subs.add_parser('grid-search', help="alpha or percentile scan")
    search.add_argument('--table', required=True)
    search.add_argument('--grid', choices=('alpha', 'percentile'),
                        default='alpha')
    search.add_argument('--step', type=float, default=None,
                        help="percentile grid spacing")
    search.add_argument('--holdout', action='store_true', default=None,
                        help="select on even rows, report on odd rows")
    search.add_argument('--weighting', choices=('token', 'text'),
                        default=opts['weighting'])
    search.add_argument('--performance', default=None)
    search.add_argument('--output', default=None)
    search.add_argument('--progress', action='store_true')
    search.set_defaults(func=cmd_grid_search)

    temps = subs.add_parser('templates', help="print packaged defaults")
    temps.add_argument('name', nargs='?', default=None)
    temps.set_defaults(func=cmd_templates)

    return parser


def _read_raw(path: str) -> str:
    """Read a UTF-8 file with its line endings untouched."""

    if not os.path.exists(path):
        raise FileNotFoundError(f"No such file: '{path}'.")

    with open(path, 'r', encoding='utf-8', newline='') as f:
        return f.read()


def _read_lines(paths: Sequence[str]) -> list[str]:
    """Non-empty lines of raw text files, in argument order."""

    texts = []
    for path in paths:
        texts.extend(line for line in _read_raw(path).split('\n') if line)

    if not texts:
        raise EmptyInputError("The input files have no non-empty lines.")

    return texts


def _write_text(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return

    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)


def _error(exc: Exception) -> None:
    print(f"tokscore: error: {exc}", file=sys.stderr)
