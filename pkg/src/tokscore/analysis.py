"""
Analysis Module
---------------
Correlate intrinsic predictors with externally measured performance and scan
the Renyi order and percentile-interval parameters for the strongest linear
relationship.

Performance scores (BLEU, ChrF, ...) are not produced here. They arrive in an
``ObservationTable``, a TSV file with one row per tokenizer run. Each row may
point at the tokenized corpus of its run through an optional ``corpus``
column, which the grid searches use to recompute predictors.

"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Mapping, Sequence

import io
import os

import numpy as np
import pandas as pd

from scipy import stats

from ._core import (
    DegenerateVarianceError,
    DegenerateVocabularyError,
    defaults,
)
from ._utils import get_logger, progress, short_warn
from .corpus import (
    TokenizedCorpus,
    UnigramDistribution,
    load_tokenized,
    unigram_distribution,
)
from .mathutils import grid, t_pvalue
from .metrics import nearest_rank, renyi_efficiency

logger = get_logger(__name__)

_REQUIRED = ('run', 'group')
_RESERVED = ('run', 'group', 'corpus')


@dataclass(frozen=True)
class CorrelationResult:
    """
    Correlation coefficient with its two-sided p-value.

    Attributes
    ----------
    coefficient : float
        Pearson r or Spearman rho, in [-1, 1].
    pvalue : float
        Two-sided p-value, in [0, 1].
    n : int
        Sample size.
    method : str
        'pearson' or 'spearman'.

    """

    coefficient: float
    pvalue: float
    n: int
    method: str = 'pearson'

    @property
    def r2(self) -> float:
        """Explained variance, the squared coefficient."""
        return self.coefficient**2

    def to_dict(self) -> dict:
        return {'method': self.method, 'coefficient': self.coefficient,
                'pvalue': self.pvalue, 'r2': self.r2, 'n': self.n}


def pearson(xs: Sequence[float], ys: Sequence[float]) -> CorrelationResult:
    """
    Sample Pearson correlation with a t-test p-value.

    Parameters
    ----------
    xs : Sequence[float]
        First variable.
    ys : Sequence[float]
        Second variable, same length as 'xs'.

    Returns
    -------
    :class:`CorrelationResult`
        The coefficient and the p-value of ``t = r*sqrt((n - 2)/(1 - r**2))``
        against a Student-t with ``n - 2`` degrees of freedom.

    Raises
    ------
    ValueError
        Lengths differ, fewer than three pairs, or values are not finite.
    DegenerateVarianceError
        Either variable is constant.

    """

    x, y = _check_pairs(xs, ys)

    dx, dy = x - x.mean(), y - y.mean()
    r = float(np.sum(dx*dy) / np.sqrt(np.sum(dx**2)*np.sum(dy**2)))
    r = min(max(r, -1.), 1.)

    return CorrelationResult(r, _pvalue(r, x.size), x.size, 'pearson')


def spearman(xs: Sequence[float], ys: Sequence[float]) -> CorrelationResult:
    """
    Spearman rank correlation.

    Ranks use the average-rank rule for ties, so ``(1, 2, 2, 3)`` ranks as
    ``(1, 2.5, 2.5, 4)``. The coefficient is Pearson's r of the ranks and the
    p-value uses the same t approximation as ``pearson``.

    """

    x, y = _check_pairs(xs, ys)
    rx, ry = stats.rankdata(x), stats.rankdata(y)

    result = pearson(rx, ry)

    return CorrelationResult(result.coefficient, result.pvalue, result.n,
                             'spearman')


def permutation_pvalue(xs: Sequence[float], ys: Sequence[float],
                       method: str = 'pearson', num: int = 10000,
                       seed: int = 0) -> float:
    """
    Two-sided permutation p-value of a correlation coefficient.

    Parameters
    ----------
    xs : Sequence[float]
        First variable.
    ys : Sequence[float]
        Second variable, same length as 'xs'.
    method : {'pearson', 'spearman'}, optional
        Coefficient to test. The default is 'pearson'.
    num : int, optional
        Number of random permutations of 'ys'. The default is 10000.
    seed : int, optional
        Seed for ``np.random.default_rng``. The default is 0.

    Returns
    -------
    p : float
        ``(1 + #{|r_perm| >= |r_obs|}) / (1 + num)``.

    Raises
    ------
    ValueError
        'method' is invalid, or 'xs' and 'ys' fail the ``pearson`` checks.

    """

    if method not in ('pearson', 'spearman'):
        raise ValueError(f"{method=} is invalid; valid values are"
                         " ['pearson', 'spearman'].")

    x, y = _check_pairs(xs, ys)
    if method == 'spearman':
        x, y = stats.rankdata(x), stats.rankdata(y)

    observed = abs(pearson(x, y).coefficient)

    rng = np.random.default_rng(seed)
    dx = x - x.mean()
    dy = y - y.mean()
    scale = np.sqrt(np.sum(dx**2)*np.sum(dy**2))

    hits, done = 0, 0
    while done < num:
        batch = min(1000, num - done)
        shuffled = rng.permuted(np.tile(dy, (batch, 1)), axis=1)
        r = np.abs(shuffled @ dx) / scale
        hits += int(np.sum(r >= observed - 1e-12))
        done += batch

    return (1. + hits) / (1. + num)


class ObservationTable:
    """Per-run predictors and performance."""

    __slots__ = ('_frame', '_performance', '_root',)

    def __init__(self, frame: pd.DataFrame, performance: str = None,
                 root: str | os.PathLike = None) -> None:
        """
        A table of tokenizer runs. Required columns are 'run' (unique id),
        'group' (e.g., tokenizer scheme), and the performance column. Any
        other numeric column is a predictor. An optional 'corpus' column
        holds the path of each run's tokenized corpus.

        Parameters
        ----------
        frame : pd.DataFrame
            Table data. A copy is stored.
        performance : str, optional
            Performance column name. The default is None, which reads it
            from the packaged ``analysis`` template ('performance').
        root : str | PathLike, optional
            Directory that relative 'corpus' paths resolve against. The
            default is None, which uses the working directory.

        Raises
        ------
        ValueError
            A required column is missing, run ids repeat, or there are fewer
            than three rows.

        """

        if performance is None:
            performance = defaults('analysis')['performance']

        for column in (*_REQUIRED, performance):
            if column not in frame.columns:
                raise ValueError(f"Missing column '{column}'; found"
                                 f" {list(frame.columns)}.")

        if len(frame) < 3:
            raise ValueError(f"Need at least 3 rows, got {len(frame)}.")

        frame = frame.copy()
        frame['run'] = frame['run'].astype(str)
        frame['group'] = frame['group'].astype(str)

        if frame['run'].duplicated().any():
            raise ValueError("Column 'run' has repeated ids.")

        self._frame = frame.reset_index(drop=True)
        self._performance = performance
        self._root = os.fspath(root) if root is not None else None

    def __repr__(self) -> str:  # pragma: no cover
        return f"ObservationTable(rows={len(self)}, {self.predictors=})"

    def __len__(self) -> int:
        return len(self._frame)

    @classmethod
    def read(cls, path: str | os.PathLike,
             performance: str = None) -> ObservationTable:
        """
        Read a UTF-8 TSV table with a header row.

        Relative 'corpus' paths resolve against the table's directory.

        Raises
        ------
        FileNotFoundError
            'path' does not exist.

        """

        if not os.path.exists(path):
            raise FileNotFoundError(f"No such file: '{path}'.")

        dtype = {'run': str, 'group': str, 'corpus': str}
        frame = pd.read_csv(path, sep='\t', dtype=dtype, encoding='utf-8')

        root = os.path.dirname(os.path.abspath(path))

        return cls(frame, performance, root)

    def write(self, path: str | os.PathLike) -> None:
        """Write the table as TSV with 10 significant digits."""
        self._frame.to_csv(path, sep='\t', index=False, float_format='%.10g',
                           lineterminator='\n')

    @property
    def frame(self) -> pd.DataFrame:
        """A copy of the underlying data."""
        return self._frame.copy()

    @property
    def runs(self) -> tuple[str]:
        """Run ids in row order."""
        return tuple(self._frame['run'])

    @property
    def groups(self) -> tuple[str]:
        """Group labels in row order."""
        return tuple(self._frame['group'])

    @property
    def performance_name(self) -> str:
        return self._performance

    @property
    def performance(self) -> np.ndarray:
        """Performance values, checked for missing entries."""
        return self.column(self._performance)

    @property
    def predictors(self) -> tuple[str]:
        """Numeric columns other than the reserved and performance ones."""
        skip = (*_RESERVED, self._performance)
        return tuple(c for c in self._frame.columns if c not in skip
                     and pd.api.types.is_numeric_dtype(self._frame[c]))

    def column(self, name: str) -> np.ndarray:
        """
        Return one numeric column as floats.

        Raises
        ------
        ValueError
            The column is missing or has missing values.

        """

        if name not in self._frame.columns:
            raise ValueError(f"Missing column '{name}'; found"
                             f" {list(self._frame.columns)}.")

        values = pd.to_numeric(self._frame[name], errors='coerce')
        if values.isna().any():
            raise ValueError(f"Column '{name}' has missing or non-numeric"
                             " values.")

        return values.to_numpy(dtype=float)

    def corpus_paths(self) -> list[str]:
        """
        Return the corpus path of every row, resolved against the table's
        directory.

        Raises
        ------
        ValueError
            The 'corpus' column is missing or has empty entries.

        """

        if 'corpus' not in self._frame.columns:
            raise ValueError("Missing column 'corpus'; pass corpora"
                             " explicitly or add a 'corpus' column.")

        paths = self._frame['corpus']
        if paths.isna().any():
            raise ValueError("Column 'corpus' has missing entries.")

        root = self._root or os.getcwd()

        return [os.path.join(root, p) for p in paths]

    def split_halves(self) -> tuple[np.ndarray, np.ndarray]:
        """
        Deterministic holdout split. Rows are ordered by run id, then even
        positions go to the selection half and odd positions to the report
        half.

        Returns
        -------
        select, report : np.array[int]
            Row indices of each half.

        """

        order = np.argsort(np.array(self.runs, dtype=object), kind='stable')
        return np.sort(order[0::2]), np.sort(order[1::2])


def correlate_table(table: ObservationTable,
                    predictors: Sequence[str] = None) -> pd.DataFrame:
    """
    Correlate predictor columns with performance.

    Parameters
    ----------
    table : ObservationTable
        Observations.
    predictors : Sequence[str], optional
        Columns to correlate. The default is None, which uses every numeric
        predictor column.

    Returns
    -------
    results : pd.DataFrame
        One row per predictor and method with columns 'predictor', 'method',
        'coefficient', 'pvalue', 'r2', and 'n'.

    Raises
    ------
    ValueError
        A named column is missing, or no predictors exist.
    DegenerateVarianceError
        A predictor or the performance column is constant.

    """

    if predictors is None:
        predictors = table.predictors

    if not predictors:
        raise ValueError("The table has no numeric predictor columns.")

    y = table.performance

    rows = []
    for name in predictors:
        x = table.column(name)
        for func in (pearson, spearman):
            rows.append({'predictor': name, **func(x, y).to_dict()})

    return pd.DataFrame(rows, columns=['predictor', 'method', 'coefficient',
                                       'pvalue', 'r2', 'n'])


@dataclass(frozen=True)
class AlphaSearch:
    """
    Result of ``grid_search_alpha``.

    Attributes
    ----------
    best_alpha : float
        Order with the largest absolute Pearson r on the selection rows.
    best : CorrelationResult
        Pearson result at 'best_alpha' on the selection rows.
    curve : pd.DataFrame
        One row per grid point with columns 'alpha', 'pearson', 'pearson_p',
        'spearman', 'spearman_p', and 'n'. Degenerate points hold nan.
    holdout : CorrelationResult | None
        Pearson result at 'best_alpha' on the report rows, when a holdout
        split was requested.

    """

    best_alpha: float
    best: CorrelationResult
    curve: pd.DataFrame
    holdout: CorrelationResult | None = None

    def to_frame(self) -> pd.DataFrame:
        return self.curve.copy()


@dataclass(frozen=True)
class PercentileSearch:
    """
    Result of ``grid_search_percentile``.

    Attributes
    ----------
    best_interval : tuple[float, float]
        ``(gamma1, gamma2)`` with the largest absolute Pearson r.
    best : CorrelationResult
        Pearson result at 'best_interval'.
    points : np.array
        Percentile grid shared by both axes.
    matrix : np.array, shape(K, K)
        Pearson r with ``gamma1 = points[i]`` and ``gamma2 = points[j]``.
        Entries with ``i > j`` and degenerate cells are nan.
    holdout : CorrelationResult | None
        Pearson result at 'best_interval' on the report rows.

    """

    best_interval: tuple[float, float]
    best: CorrelationResult
    points: np.ndarray
    matrix: np.ndarray
    holdout: CorrelationResult | None = None

    def to_frame(self) -> pd.DataFrame:
        """Upper-triangular cells as ``(gamma1, gamma2, pearson)`` rows."""

        i, j = np.triu_indices(self.points.size)

        return pd.DataFrame({'gamma1': self.points[i],
                             'gamma2': self.points[j],
                             'pearson': self.matrix[i, j]})


def alpha_grid() -> np.ndarray:
    """
    Return the default Renyi order grid from the ``analysis`` template.

    Returns
    -------
    alphas : np.array
        Sorted, unique points of ``0.1, 0.2, ..., 5.0`` merged with 0, 1,
        and inf.

    """

    opts = defaults('analysis')['alpha_grid']

    points = grid(opts['start'], opts['stop'], opts['step'])
    special = np.array(opts['special'], dtype=float)

    return np.unique(np.hstack([points, special]))


def grid_search_alpha(table: ObservationTable,
                      corpora: Sequence | Mapping = None,
                      alphas: Sequence[float] = None, holdout: bool = None,
                      weighting: str = 'token',
                      bar: bool = False) -> AlphaSearch:
    """
    Scan Renyi orders for the efficiency that best tracks performance.

    Parameters
    ----------
    table : ObservationTable
        Observations with performance values.
    corpora : Sequence | Mapping, optional
        Per-run data, either aligned with the table rows or keyed by run id.
        Items can be a ``TokenizedCorpus``, a ``UnigramDistribution``, or a
        file path. The default is None, which loads the table's 'corpus'
        column.
    alphas : Sequence[float], optional
        Orders to scan. The default is None, which uses ``alpha_grid()``.
    holdout : bool, optional
        Select on one half of the rows and report on the other, see
        ``ObservationTable.split_halves``. The default is None, which reads
        the ``analysis`` template (off).
    weighting : {'token', 'text'}, optional
        Unigram estimator for corpora. The default is 'token'.
    bar : bool, optional
        Show a progress bar over the grid. The default is False.

    Returns
    -------
    :class:`AlphaSearch`
        Best order, its correlation, and the full curve.

    Raises
    ------
    ValueError
        The grid is empty, or a half has fewer than three rows.
    DegenerateVarianceError
        Every grid point has a constant predictor.
    DegenerateVocabularyError
        A run has a single token type; the message names the run.

    Notes
    -----
    Grid points where all runs share one efficiency (e.g., ``alpha = 0``
    always gives one) cannot be correlated. They are reported as nan and
    skipped with a warning. Ties in ``|r|`` resolve to the earliest point.

    """

    alphas = alpha_grid() if alphas is None else np.asarray(alphas, float)
    if alphas.size == 0:
        raise ValueError("'alphas' cannot be empty.")

    dists = _distributions(table, corpora, weighting)
    select, report = _halves(table, holdout)

    y = table.performance

    for run, dist in zip(table.runs, dists):
        if dist.size < 2:
            raise DegenerateVocabularyError(f"Run {run!r} has a single token"
                                            " type, so its efficiency is"
                                            " undefined.")

    predictors = np.empty((alphas.size, len(dists)))
    for k, alpha in enumerate(progress(alphas, bar, desc='alpha grid')):
        predictors[k] = [renyi_efficiency(d, alpha) for d in dists]

    columns = {name: np.full(alphas.size, np.nan) for name in
               ('pearson', 'pearson_p', 'spearman', 'spearman_p')}

    skipped = []
    for k, x in enumerate(predictors):
        try:
            r = pearson(x[select], y[select])
            rho = spearman(x[select], y[select])
        except DegenerateVarianceError:
            skipped.append(float(alphas[k]))
            continue

        columns['pearson'][k] = r.coefficient
        columns['pearson_p'][k] = r.pvalue
        columns['spearman'][k] = rho.coefficient
        columns['spearman_p'][k] = rho.pvalue

    if len(skipped) == alphas.size:
        raise DegenerateVarianceError("Every grid point gives a constant"
                                      " predictor.")
    elif skipped:
        short_warn(f"Skipped degenerate alpha grid points {skipped}.")

    curve = pd.DataFrame({'alpha': alphas, **columns, 'n': select.size})

    k = int(np.nanargmax(np.abs(columns['pearson'])))
    best = pearson(predictors[k, select], y[select])

    checked = None
    if report is not None:
        checked = pearson(predictors[k, report], y[report])

    logger.info("Best alpha %s with r=%.4f.", alphas[k], best.coefficient)

    return AlphaSearch(float(alphas[k]), best, curve, checked)


def grid_search_percentile(table: ObservationTable,
                           corpora: Sequence | Mapping = None,
                           step: float = None, holdout: bool = None,
                           weighting: str = 'token',
                           bar: bool = False) -> PercentileSearch:
    """
    Scan percentile intervals for the frequency mass that best tracks
    performance.

    Every interval ``0 <= gamma1 <= gamma2 <= 1`` on the grid is scored with
    ``tokscore.metrics.percentile_freq``. Per-run prefix sums over the grid
    make each cell a difference of two sums, and the Pearson coefficients of
    all cells are computed in one vectorized pass.

    Parameters
    ----------
    table : ObservationTable
        Observations with performance values.
    corpora : Sequence | Mapping, optional
        Per-run data, as in ``grid_search_alpha``.
    step : float, optional
        Grid spacing. The default is None, which reads the ``analysis``
        template (0.01).
    holdout : bool, optional
        Select on one half of the rows and report on the other. The default
        is None, which reads the ``analysis`` template (off).
    weighting : {'token', 'text'}, optional
        Unigram estimator for corpora. The default is 'token'.
    bar : bool, optional
        Show a progress bar while building frequency profiles. The default
        is False.

    Returns
    -------
    :class:`PercentileSearch`
        Best interval, its correlation, and the full matrix.

    Raises
    ------
    DegenerateVarianceError
        Every cell has a constant predictor, or performance is constant.

    """

    if step is None:
        step = defaults('analysis')['percentile_grid']['step']

    points = grid(0., 1., step)
    K = points.size

    dists = _distributions(table, corpora, weighting)
    select, report = _halves(table, holdout)

    profiles = np.empty((len(dists), K))
    for n, dist in enumerate(progress(dists, bar, desc='profiles')):
        ranked = np.sort(dist.probs)
        profiles[n] = ranked[nearest_rank(points, ranked.size) - 1]

    cumsum = np.hstack([np.zeros((len(dists), 1)),
                        np.cumsum(profiles, axis=1)])

    i, j = np.triu_indices(K)
    cells = cumsum[:, j + 1] - cumsum[:, i]

    y = table.performance
    r = _pearson_columns(cells[select], y[select])

    if np.all(np.isnan(r)):
        raise DegenerateVarianceError("Every percentile interval gives a"
                                      " constant predictor.")

    matrix = np.full((K, K), np.nan)
    matrix[i, j] = r

    c = int(np.nanargmax(np.abs(r)))
    best = pearson(cells[select, c], y[select])

    checked = None
    if report is not None:
        checked = pearson(cells[report, c], y[report])

    interval = (float(points[i[c]]), float(points[j[c]]))
    logger.info("Best percentile interval %s with r=%.4f.", interval,
                best.coefficient)

    return PercentileSearch(interval, best, points, matrix, checked)


def export_plot_table(results: pd.DataFrame | AlphaSearch | PercentileSearch
                      | ObservationTable,
                      path: str | os.PathLike = None) -> str:
    """
    Export results as a plot-ready TSV.

    Parameters
    ----------
    results : pd.DataFrame | AlphaSearch | PercentileSearch | ObservationTable
        Data to export. Search results export their ``to_frame()`` rows,
        so a percentile search gives ``(gamma1, gamma2, pearson)`` triplets.
    path : str | PathLike, optional
        Output file. The default is None, which only returns the text.

    Returns
    -------
    text : str
        Header row plus one row per grid point or observation. Floats use 10
        significant digits.

    Raises
    ------
    ValueError
        'results' has no rows.
    OSError
        'path' cannot be written.

    """

    if isinstance(results, ObservationTable):
        frame = results.frame
    elif isinstance(results, (AlphaSearch, PercentileSearch)):
        frame = results.to_frame()
    else:
        frame = pd.DataFrame(results)

    if frame.empty:
        raise ValueError("'results' has no rows to export.")

    buffer = io.StringIO()
    frame.to_csv(buffer, sep='\t', index=False, float_format='%.10g',
                 lineterminator='\n')

    text = buffer.getvalue()
    if path is not None:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)

    return text


def read_plot_table(source: str | os.PathLike) -> pd.DataFrame:
    """
    Parse a table written by ``export_plot_table``.

    Parameters
    ----------
    source : str | PathLike
        A file path, or the exported text itself (any string containing a
        newline is treated as text).

    Returns
    -------
    frame : pd.DataFrame
        Parsed table.

    """

    if isinstance(source, str) and '\n' in source:
        return pd.read_csv(io.StringIO(source), sep='\t')

    return pd.read_csv(source, sep='\t', encoding='utf-8')


def _check_pairs(xs: Sequence[float],
                 ys: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """
    Check paired samples for a correlation.

    Parameters
    ----------
    xs : Sequence[float]
        First variable.
    ys : Sequence[float]
        Second variable.

    Returns
    -------
    x, y : np.array
        Float copies.

    Raises
    ------
    ValueError
        Lengths differ, fewer than three pairs, or values are not finite.
    DegenerateVarianceError
        Either variable is constant.

    """

    x = np.asarray(xs, dtype=float).ravel()
    y = np.asarray(ys, dtype=float).ravel()

    if x.size != y.size:
        raise ValueError(f"Lengths differ: {x.size} and {y.size}.")
    elif x.size < 3:
        raise ValueError(f"Need at least 3 pairs, got {x.size}.")
    elif not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("Values must be finite.")
    elif np.ptp(x) == 0. or np.ptp(y) == 0.:
        raise DegenerateVarianceError("Correlation is undefined for a"
                                      " constant variable.")

    return x, y


def _pvalue(r: float, n: int) -> float:
    """Two-sided t-test p-value of a correlation coefficient."""

    if abs(r) >= 1.:
        return 0.

    t = r*np.sqrt((n - 2) / (1. - r**2))

    return float(t_pvalue(t, n - 2))


def _pearson_columns(X: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Pearson r of every column of 'X' against 'y'; constant columns nan."""

    if y.size < 3:
        raise ValueError(f"Need at least 3 rows, got {y.size}.")
    elif np.ptp(y) == 0.:
        raise DegenerateVarianceError("Performance values are constant.")

    Xc = X - X.mean(axis=0)
    yc = y - y.mean()

    sxx = np.sum(Xc**2, axis=0)
    constant = np.ptp(X, axis=0) == 0.

    with np.errstate(divide='ignore', invalid='ignore'):
        r = (yc @ Xc) / np.sqrt(sxx*np.sum(yc**2))

    r[constant] = np.nan

    return np.clip(r, -1., 1.)


def _halves(table: ObservationTable,
            holdout: bool | None) -> tuple[np.ndarray, np.ndarray | None]:
    """Selection and report row indices; report is None without holdout."""

    if holdout is None:
        holdout = defaults('analysis')['holdout']

    if not holdout:
        return np.arange(len(table)), None

    select, report = table.split_halves()
    if report.size < 3:
        raise ValueError(f"Holdout needs at least 6 rows, got {len(table)}.")

    return select, report


def _distributions(table: ObservationTable, corpora: Sequence | Mapping,
                   weighting: str) -> list[UnigramDistribution]:
    """Resolve per-run corpora, paths, or distributions in row order."""

    if corpora is None:
        items = table.corpus_paths()
    elif isinstance(corpora, Mapping):
        missing = [run for run in table.runs if run not in corpora]
        if missing:
            raise ValueError(f"No corpus given for runs {missing}.")
        items = [corpora[run] for run in table.runs]
    else:
        items = list(corpora)
        if len(items) != len(table):
            raise ValueError(f"Got {len(items)} corpora for {len(table)}"
                             " rows.")

    dists = []
    for item in items:
        if isinstance(item, (str, os.PathLike)):
            item = load_tokenized(item)

        if isinstance(item, TokenizedCorpus):
            item = unigram_distribution(item, weighting)
        elif not isinstance(item, UnigramDistribution):
            raise TypeError("Corpora must be TokenizedCorpus,"
                            " UnigramDistribution, or path items, not"
                            f" {type(item).__name__}.")

        dists.append(item)

    return dists
