"""
Metrics Module
--------------
Scalar predictors of tokenization quality: Shannon and Renyi entropy, their
efficiencies (entropy normalized by ``log V``), relative redundancy,
percentile frequency, mean sequence length, and total bits.

Efficiencies drop the covariance and ceiling terms of the coding-theorem
bounds and are base-free ratios. The exact bound checks live in
``tokscore.coding``.

"""

from __future__ import annotations
from typing import Sequence

import math

import numpy as np

from scipy import special, stats

from ._core import DegenerateVocabularyError, MetricRequest, MetricValue
from .corpus import (
    TokenizedCorpus,
    UnigramDistribution,
    expected_length,
    from_texts,
    unigram_distribution,
)
from .mathutils import grid, log_b


def shannon_entropy(dist: UnigramDistribution, b: int = 2) -> float:
    """
    Return the Shannon entropy ``H = -sum(p log_b p)``.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution.
    b : int, optional
        Logarithm base. The default is 2.

    Returns
    -------
    H : float
        Entropy in ``[0, log_b V]``.

    """
    return float(stats.entropy(dist.probs, base=b))


def renyi_entropy(dist: UnigramDistribution, alpha: float = 2.5,
                  b: int = 2) -> float:
    """
    Return the Renyi entropy of order 'alpha'.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution.
    alpha : float, optional
        Order, >= 0 or ``np.inf``. The default is 2.5.
    b : int, optional
        Logarithm base. The default is 2.

    Returns
    -------
    H_alpha : float
        ``log_b(sum(p**alpha)) / (1 - alpha)``, with the limits ``log_b V``
        at ``alpha = 0``, Shannon entropy at ``alpha = 1``, and
        ``-log_b max(p)`` at ``alpha = inf``.

    Raises
    ------
    ValueError
        'alpha' is negative or nan.

    Notes
    -----
    The power sum is evaluated as ``logsumexp(alpha * log p)``, which stays
    finite for large orders and tiny probabilities.

    """

    _check_alpha(alpha)

    p = dist.probs

    if alpha == 0.:
        return float(log_b(p.size, b))
    elif alpha == 1.:
        return shannon_entropy(dist, b)
    elif math.isinf(alpha):
        return float(-log_b(p.max(), b))

    log_sum = special.logsumexp(alpha*np.log(p))

    return float(log_sum / (1. - alpha) / np.log(b))


def shannon_efficiency(dist: UnigramDistribution) -> float:
    """
    Return the Shannon efficiency ``H(p) / log V``.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution with at least two types.

    Returns
    -------
    eff : float
        Efficiency in ``[0, 1]``; one iff 'dist' is uniform.

    Raises
    ------
    DegenerateVocabularyError
        'dist' has a single type, so ``log V = 0``.

    """
    return renyi_efficiency(dist, 1.)


def renyi_efficiency(dist: UnigramDistribution, alpha: float = 2.5) -> float:
    """
    Return the Renyi efficiency ``H_alpha(p) / log V``.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution with at least two types.
    alpha : float, optional
        Order, >= 0 or ``np.inf``. The default is 2.5.

    Returns
    -------
    eff : float
        Efficiency in ``[0, 1]``; one iff 'dist' is uniform. The ratio does
        not depend on the logarithm base.

    Raises
    ------
    ValueError
        'alpha' is negative or nan.
    DegenerateVocabularyError
        'dist' has a single type, so ``log V = 0``.

    """

    _check_alpha(alpha)

    V = dist.size
    if V < 2:
        raise DegenerateVocabularyError("Efficiency needs at least two token"
                                        f" types, got V={V}.")
    elif alpha == 0.:
        return 1.

    eff = renyi_entropy(dist, alpha, math.e) / math.log(V)

    return float(min(max(eff, 0.), 1.))


def relative_redundancy(dist: UnigramDistribution,
                        alpha: float = None) -> float:
    """
    Return ``1 - efficiency``, the largest relative size reduction available
    over the uniform code.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution with at least two types.
    alpha : float, optional
        Renyi order. The default is None, which uses Shannon efficiency.

    Returns
    -------
    redundancy : float
        Value in ``[0, 1]``.

    """

    if alpha is None:
        return 1. - shannon_efficiency(dist)

    return 1. - renyi_efficiency(dist, alpha)


def percentile_freq(dist: UnigramDistribution, gamma1: float = 0.03,
                    gamma2: float = 0.83, step: float = 0.01) -> float:
    """
    Return the summed type probabilities between two percentiles.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution.
    gamma1 : float, optional
        Lower percentile in [0, 1]. The default is 0.03.
    gamma2 : float, optional
        Upper percentile in [0, 1]. The default is 0.83.
    step : float, optional
        Percentile grid spacing. The default is 0.01.

    Returns
    -------
    F : float
        ``sum(f_n)`` over ``n = gamma1, gamma1 + step, ...`` up to 'gamma2'
        inclusive, where ``f_n`` is the ascending-sorted probability at the
        nearest rank ``ceil(n*V)`` (clamped to ``[1, V]``).

    Raises
    ------
    ValueError
        'gamma1' and 'gamma2' are outside ``0 <= gamma1 <= gamma2 <= 1``.

    """

    if not 0. <= gamma1 <= gamma2 <= 1.:
        raise ValueError(f"Need 0 <= gamma1 <= gamma2 <= 1, got {gamma1=}"
                         f" and {gamma2=}.")

    ranked = np.sort(dist.probs)
    points = grid(gamma1, gamma2, step)

    return float(ranked[nearest_rank(points, ranked.size) - 1].sum())


def nearest_rank(points: float | np.ndarray, V: int) -> np.ndarray:
    """
    Return 1-based nearest ranks ``ceil(n*V)`` clamped to ``[1, V]``.

    Parameters
    ----------
    points : float | 1D np.array
        Percentiles in [0, 1].
    V : int
        Number of ranked items.

    Returns
    -------
    ranks : np.array[int]
        Ranks. Products within 1e-9 above an integer round down to it, so
        that grid noise like ``0.5000000001 * 4`` maps to rank 2.

    """

    ranks = np.ceil(np.asarray(points)*V - 1e-9).astype(np.int64)

    return np.clip(ranks, 1, V)


def sequence_len(corpus: TokenizedCorpus) -> float:
    """
    Return the mean number of tokens per text.

    Parameters
    ----------
    corpus : TokenizedCorpus
        Tokenized corpus.

    Returns
    -------
    mean_length : float
        Same value as ``tokscore.corpus.expected_length``.

    """
    return expected_length(corpus)


def bits(corpus: TokenizedCorpus) -> float:
    """
    Return the corpus size in bits under an ideal per-token Shannon code.

    Parameters
    ----------
    corpus : TokenizedCorpus
        Tokenized corpus.

    Returns
    -------
    total_bits : float
        ``N * H(p)`` with the pooled unigram distribution and base 2.

    """

    dist = unigram_distribution(corpus)

    return corpus.num_tokens * shannon_entropy(dist, 2)


def score(texts: str | Sequence[str] | TokenizedCorpus,
          metric: str = None, weighting: str = 'token',
          **params) -> float:
    """
    Score tokenized text with one metric.

    Parameters
    ----------
    texts : str | Sequence[str] | TokenizedCorpus
        A single whitespace-tokenized string (one text), a sequence of them,
        or a corpus.
    metric : str, optional
        Metric name, see ``tokscore.METRICS``. The default is None, which
        uses 'renyi_efficiency'.
    weighting : {'token', 'text'}, optional
        Unigram estimator. The default is 'token'.
    **params : dict, optional
        Metric parameters 'power', 'perc_start', 'perc_end', 'perc_step',
        and 'base'. Missing values come from the packaged ``metrics`` template.

    Returns
    -------
    value : float
        The metric value.

    Examples
    --------
    >>> import tokscore as ts
    >>> round(ts.score("pick @@ed pick @@l @@ed pick @@les", power=3), 10)
    0.8031528501

    """
    return evaluate(texts, metric, weighting, **params).value


def evaluate(texts: str | Sequence[str] | TokenizedCorpus,
             metric: str = None, weighting: str = 'token',
             **params) -> MetricValue:
    """
    Like ``score`` but returns the full :class:`MetricValue` record.

    """

    if isinstance(texts, str):
        corpus = from_texts([texts])
    elif isinstance(texts, TokenizedCorpus):
        corpus = texts
    else:
        corpus = from_texts(texts)

    request = MetricRequest(metric, **params)

    return request.compute(corpus, weighting=weighting)


def _check_alpha(alpha: float) -> None:
    """
    Check a Renyi order.

    Parameters
    ----------
    alpha : float
        Renyi order.

    Returns
    -------
    None.

    Raises
    ------
    ValueError
        'alpha' is negative or nan.

    """

    if math.isnan(alpha) or alpha < 0.:
        raise ValueError(f"'alpha' must be >= 0 or inf, got {alpha}.")
