"""
Coding Module
-------------
Token-level prefix-free codes and the coding theorems that relate them to
entropy. Codes are built over a unigram distribution (Huffman, uniform, and
Campbell's Renyi-ideal lengths) and evaluated with expected, discounted, and
corpus-level code lengths. ``verify_bounds`` checks the source coding
sandwich, the covariance identity that lifts token-level codes to whole
texts, and Campbell's bound on the discounted length.

Codewords are strings over the digit characters ``'0'`` to ``'9'`` followed
by ``'a'`` to ``'z'``, i.e., symbol ``k`` of a b-ary alphabet is the k-th of
these characters. Codewords are only materialized for ``b <= 36``.

"""

from __future__ import annotations
from typing import Sequence

import heapq
import math

from dataclasses import dataclass, fields

import numpy as np

from scipy import special

from ._core import Constants, CoverageError
from .corpus import (
    TokenizedCorpus,
    UnigramDistribution,
    expected_length,
    unigram_distribution,
)
from .mathutils import ceil_log
from .metrics import renyi_entropy, shannon_entropy

_SYMBOLS = '0123456789abcdefghijklmnopqrstuvwxyz'


class CodeBook:
    """Per-token codeword lengths over a b-ary alphabet."""

    __slots__ = ('_base', '_tokens', '_lengths', '_codewords', '_index',)

    def __init__(self, lengths: Sequence[int], base: int = 2,
                 tokens: Sequence[str] = None,
                 codewords: Sequence[str] = None) -> None:
        """
        An immutable token-level code. When 'codewords' is not given and
        ``base <= 36``, canonical codewords are assigned from the lengths.

        Parameters
        ----------
        lengths : Sequence[int]
            Codeword length per token, in symbols. Each must be >= 1.
        base : int, optional
            Alphabet size ``b >= 2``. The default is 2.
        tokens : Sequence[str], optional
            Token per entry. The default is None, which names entries by
            their position ('0', '1', ...).
        codewords : Sequence[str], optional
            Explicit codewords. They must match 'lengths', use only the first
            'base' symbols, and be prefix-free. The default is None.

        Raises
        ------
        ValueError
            'base' is not an integer >= 2.
        ValueError
            'lengths' is empty or has entries < 1.
        ValueError
            The lengths violate the Kraft-McMillan inequality.
        ValueError
            'tokens' or 'codewords' do not match 'lengths'.
        ValueError
            'codewords' are not prefix-free or use invalid symbols.

        """

        if int(base) != base or base < 2:
            raise ValueError(f"'base' must be an integer >= 2, got {base}.")

        lengths = np.asarray(lengths)
        if lengths.ndim != 1 or lengths.size == 0:
            raise ValueError("'lengths' must be a non-empty 1D sequence.")
        elif np.any(lengths != np.round(lengths)) or lengths.min() < 1:
            raise ValueError("'lengths' must be integers >= 1.")

        lengths = lengths.astype(np.int64)
        lengths.flags.writeable = False

        if not _kraft_feasible(lengths, int(base)):
            raise ValueError("'lengths' violate the Kraft-McMillan"
                             " inequality.")

        if tokens is None:
            tokens = [str(i) for i in range(lengths.size)]
        elif len(tokens) != lengths.size:
            raise ValueError("'tokens' and 'lengths' sizes differ.")

        if codewords is not None:
            codewords = tuple(codewords)
            _check_codewords(codewords, lengths, int(base))
        elif base <= len(_SYMBOLS):
            codewords = _canonical_codewords(lengths, int(base))

        self._base = int(base)
        self._tokens = tuple(tokens)
        self._lengths = lengths
        self._codewords = codewords
        self._index = {t: i for i, t in enumerate(self._tokens)}

    def __repr__(self) -> str:  # pragma: no cover
        return (f"CodeBook(size={self.size}, base={self._base},"
                f" max_length={int(self._lengths.max())})")

    def __len__(self) -> int:
        return self._lengths.size

    @property
    def base(self) -> int:
        """Alphabet size ``b``."""
        return self._base

    @property
    def tokens(self) -> tuple[str]:
        """Token per entry."""
        return self._tokens

    @property
    def lengths(self) -> np.ndarray:
        """Read-only codeword lengths, aligned with ``tokens``."""
        return self._lengths

    @property
    def codewords(self) -> tuple[str] | None:
        """Codewords aligned with ``tokens``, or None if not materialized."""
        return self._codewords

    @property
    def size(self) -> int:
        """Number of coded tokens."""
        return self._lengths.size

    def length_of(self, token: str) -> int:
        """Return the codeword length of 'token'."""
        return int(self.lengths_for([token])[0])

    def lengths_for(self, tokens: Sequence[str]) -> np.ndarray:
        """
        Return codeword lengths for 'tokens', in the given order.

        Parameters
        ----------
        tokens : Sequence[str]
            Tokens to look up.

        Returns
        -------
        lengths : 1D np.array[int]
            Length per token.

        Raises
        ------
        CoverageError
            A token has no codeword.

        """

        try:
            idx = [self._index[t] for t in tokens]
        except KeyError as err:
            raise CoverageError(err.args[0], 'code') from None

        return self._lengths[idx]


@dataclass(frozen=True)
class BoundReport:
    """Outcome of ``verify_bounds``."""

    alpha: float
    base: int
    entropy: float
    ceil_entropy: int
    expected_length: float
    corpus_code_length: float
    covariance: float
    expected_code_length: float
    lemma_residual: float
    lower: float
    middle: float
    upper: float
    renyi_entropy: float
    discount: float
    discounted_length: float
    renyi_upper: float
    lemma_holds: bool
    source_coding_holds: bool
    campbell_holds: bool
    within_ceil_entropy: bool

    @property
    def passed(self) -> bool:
        """True iff the identity and both sandwiches hold."""
        return self.lemma_holds and self.source_coding_holds \
            and self.campbell_holds

    def to_text(self) -> str:
        """
        Return one ``name<TAB>value`` line per field, followed by 'passed'.
        Floats use ``repr`` and booleans are written as 'true' or 'false'.

        """

        lines = []
        for f in fields(self):
            lines.append(f"{f.name}\t{_format(getattr(self, f.name))}")

        lines.append(f"passed\t{_format(self.passed)}")

        return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class EfficiencyBounds:
    """Code-based efficiency with its covariance-corrected bounds."""

    lower: float
    value: float
    upper: float


def huffman_code(dist: UnigramDistribution, b: int = 2) -> CodeBook:
    """
    Build a b-ary Huffman code.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution.
    b : int, optional
        Alphabet size. The default is 2.

    Returns
    -------
    :class:`CodeBook`
        Optimal prefix-free code. A single-type distribution gets one
        codeword of length 1.

    Notes
    -----
    For ``b > 2`` the leaves are padded with zero-probability placeholders so
    that ``(V - 1) mod (b - 1) = 0``; placeholders never receive tokens. The
    ``b`` least probable nodes are merged at each step, ties broken by the
    smallest contained token id and then by creation order, so codebooks are
    reproducible bit for bit.

    """

    b = _check_base(b)

    V = dist.size
    if V == 1:
        return CodeBook([1], b, dist.tokens)

    pad = (b - 1 - (V - 1) % (b - 1)) % (b - 1)

    heap = [(float(p), i, i, [i]) for i, p in enumerate(dist.probs)]
    heap += [(0., V + j, V + j, []) for j in range(pad)]
    heapq.heapify(heap)

    depth = np.zeros(V, dtype=np.int64)
    created = V + pad

    while len(heap) > 1:
        children = [heapq.heappop(heap) for _ in range(b)]

        leaves = [leaf for child in children for leaf in child[3]]
        depth[leaves] += 1

        prob = sum(child[0] for child in children)
        first = min(child[1] for child in children)

        heapq.heappush(heap, (prob, first, created, leaves))
        created += 1

    return CodeBook(depth, b, dist.tokens)


def uniform_code(V: int, b: int = 2, tokens: Sequence[str] = None) -> CodeBook:
    """
    Build the equal-length code for ``V`` tokens.

    Parameters
    ----------
    V : int
        Vocabulary size, >= 1.
    b : int, optional
        Alphabet size. The default is 2.
    tokens : Sequence[str], optional
        Token per entry. The default is None.

    Returns
    -------
    :class:`CodeBook`
        Every length equals ``max(1, ceil(log_b V))``.

    Raises
    ------
    ValueError
        'V' is smaller than one.

    """

    b = _check_base(b)

    if V < 1:
        raise ValueError(f"'V' must be >= 1, got {V}.")

    length = max(1, ceil_log(V, b))

    return CodeBook(np.full(V, length), b, tokens)


def campbell_lengths(dist: UnigramDistribution, alpha: float,
                     b: int = 2) -> CodeBook:
    """
    Build a code from Campbell's ideal lengths for order 'alpha'.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution.
    alpha : float
        Renyi order, ``0 < alpha < inf``.
    b : int, optional
        Alphabet size. The default is 2.

    Returns
    -------
    :class:`CodeBook`
        Lengths ``ceil(-alpha log_b p + log_b sum(p**alpha))``, at least 1.
        Their discounted length at ``s = 1/alpha - 1`` lies within one symbol
        above the Renyi entropy of order 'alpha'.

    Raises
    ------
    ValueError
        'alpha' is not finite and positive.

    Notes
    -----
    Ideal lengths that sit within 1e-12 above an integer are rounded down to
    it, unless doing so would break the Kraft-McMillan inequality.

    """

    b = _check_base(b)

    if not 0. < alpha < math.inf:
        raise ValueError(f"'alpha' must be finite and positive, got {alpha};"
                         " use uniform_code or huffman_code for the limits.")

    logp = np.log(dist.probs)
    log_sum = special.logsumexp(alpha*logp)

    ideal = (log_sum - alpha*logp) / math.log(b)

    lengths = np.maximum(1, np.ceil(ideal - 1e-12)).astype(np.int64)
    if not _kraft_feasible(lengths, b):
        lengths = np.maximum(1, np.ceil(ideal)).astype(np.int64)

    return CodeBook(lengths, b, dist.tokens)


def expected_code_length(dist: UnigramDistribution, code: CodeBook) -> float:
    """
    Return ``sum(p * l)``, the expected codeword length.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution.
    code : CodeBook
        Code covering every token of 'dist'.

    Returns
    -------
    length : float
        Expected length in symbols.

    Raises
    ------
    CoverageError
        A token of 'dist' has no codeword.

    """

    lengths = code.lengths_for(dist.tokens)

    return float(np.dot(dist.probs, lengths))


def discounted_code_length(dist: UnigramDistribution, code: CodeBook,
                           s: float) -> float:
    """
    Return Campbell's discounted expected code length.

    Parameters
    ----------
    dist : UnigramDistribution
        Token distribution.
    code : CodeBook
        Code covering every token of 'dist'.
    s : float
        Discount exponent, ``s > -1``. ``np.inf`` is allowed.

    Returns
    -------
    length : float
        ``log_b(sum(p * b**(s*l))) / s``. The limit ``s = 0`` is the expected
        code length and ``s = inf`` gives the longest codeword. The value is
        non-decreasing in 's'.

    Raises
    ------
    ValueError
        's' is <= -1 or nan.
    CoverageError
        A token of 'dist' has no codeword.

    """

    if math.isnan(s) or s <= -1.:
        raise ValueError(f"'s' must be > -1, got {s}.")

    lengths = code.lengths_for(dist.tokens)

    if s == 0.:
        return float(np.dot(dist.probs, lengths))
    elif math.isinf(s):
        return float(lengths.max())

    log_b = math.log(code.base)
    log_sum = special.logsumexp(np.log(dist.probs) + s*log_b*lengths)

    return float(log_sum / (s*log_b))


def kraft_sum(code: CodeBook) -> float:
    """
    Return the Kraft sum ``sum(b**-l)``; at most one for prefix-free codes.

    Parameters
    ----------
    code : CodeBook
        Any code.

    Returns
    -------
    total : float
        The Kraft sum.

    """
    return float(np.sum(np.power(float(code.base), -code.lengths)))


def is_prefix_free(codewords: Sequence[str]) -> bool:
    """
    Check that no codeword is a prefix of another.

    Parameters
    ----------
    codewords : Sequence[str]
        Codewords. Duplicates count as a violation.

    Returns
    -------
    prefix_free : bool
        True if the set is prefix-free.

    """

    ordered = sorted(codewords)

    return all(not b.startswith(a) for a, b in zip(ordered, ordered[1:]))


def corpus_code_length(corpus: TokenizedCorpus, code: CodeBook) -> float:
    """
    Return the mean encoded length of a text when tokens are concatenated.

    Parameters
    ----------
    corpus : TokenizedCorpus
        Tokenized corpus.
    code : CodeBook
        Code covering the corpus vocabulary.

    Returns
    -------
    length : float
        Mean over texts of the summed codeword lengths.

    Raises
    ------
    CoverageError
        A corpus token has no codeword.

    """
    return float(np.mean(_text_code_lengths(corpus, code)))


def covariance_term(corpus: TokenizedCorpus, code: CodeBook) -> float:
    """
    Return the covariance between per-token code length and text length.

    Parameters
    ----------
    corpus : TokenizedCorpus
        Tokenized corpus.
    code : CodeBook
        Code covering the corpus vocabulary.

    Returns
    -------
    cov : float
        Population covariance (divided by ``M``) over texts between the mean
        codeword length per token of a text and its token count.

    Raises
    ------
    CoverageError
        A corpus token has no codeword.

    """

    L = corpus.lengths.astype(float)
    L_bar = _text_code_lengths(corpus, code) / L

    return float(np.mean((L_bar - L_bar.mean()) * (L - L.mean())))


def verify_bounds(corpus: TokenizedCorpus, alpha: float = 2.5,
                  b: int = 2) -> BoundReport:
    """
    Check the coding theorems on a corpus.

    Codes are built over the text-averaged unigram distribution (uniform
    weight per text), the distribution under which the covariance identity
    is exact.

    Parameters
    ----------
    corpus : TokenizedCorpus
        Tokenized corpus.
    alpha : float, optional
        Renyi order for Campbell's bound, finite and positive. The default
        is 2.5.
    b : int, optional
        Alphabet size. The default is 2.

    Returns
    -------
    :class:`BoundReport`
        Quantities and pass flags:

        * ``lemma_holds``: the corpus code length equals
          ``E[L] * expected_code_length + covariance`` for the Huffman code.
        * ``source_coding_holds``: ``H <= (L_enc - Cov) / E[L] <= H + 1``.
        * ``campbell_holds``: ``H_alpha <= L^(s) <= H_alpha + 1`` for
          Campbell lengths at ``s = 1/alpha - 1`` (the Huffman code when
          ``alpha = 1``).
        * ``within_ceil_entropy``: the middle term is at most ``ceil(H)``.
          This is reported only; it can fail for very skewed distributions.

        All checks use the tolerance ``Constants().BOUND_TOL``.

    Raises
    ------
    ValueError
        'alpha' is not finite and positive.

    """

    if not 0. < alpha < math.inf:
        raise ValueError(f"'alpha' must be finite and positive, got {alpha}.")

    tol = Constants().BOUND_TOL

    dist = unigram_distribution(corpus, weighting='text')
    huffman = huffman_code(dist, b)

    E_L = expected_length(corpus)
    L_enc = corpus_code_length(corpus, huffman)
    cov = covariance_term(corpus, huffman)
    mean_length = expected_code_length(dist, huffman)

    residual = L_enc - (E_L*mean_length + cov)

    H = shannon_entropy(dist, b)
    middle = (L_enc - cov) / E_L

    if alpha == 1.:
        code, s = huffman, 0.
    else:
        code, s = campbell_lengths(dist, alpha, b), 1. / alpha - 1.

    H_alpha = renyi_entropy(dist, alpha, b)
    L_s = discounted_code_length(dist, code, s)

    ceil_H = math.ceil(H - 1e-12)

    return BoundReport(
        alpha=float(alpha),
        base=int(b),
        entropy=H,
        ceil_entropy=ceil_H,
        expected_length=E_L,
        corpus_code_length=L_enc,
        covariance=cov,
        expected_code_length=mean_length,
        lemma_residual=residual,
        lower=H,
        middle=middle,
        upper=H + 1.,
        renyi_entropy=H_alpha,
        discount=s,
        discounted_length=L_s,
        renyi_upper=H_alpha + 1.,
        lemma_holds=abs(residual) <= tol,
        source_coding_holds=H - tol <= middle <= H + 1. + tol,
        campbell_holds=H_alpha - tol <= L_s <= H_alpha + 1. + tol,
        within_ceil_entropy=middle <= ceil_H + tol,
    )


def efficiency_bounds(corpus: TokenizedCorpus, b: int = 2) -> EfficiencyBounds:
    """
    Return the code-based efficiency of a corpus and its bounds.

    Parameters
    ----------
    corpus : TokenizedCorpus
        Tokenized corpus.
    b : int, optional
        Alphabet size. The default is 2.

    Returns
    -------
    :class:`EfficiencyBounds`
        ``value`` is the corpus code length under a Huffman code divided by
        that under the uniform code. With ``c = Cov / E[L]`` for the Huffman
        code and ``u`` the uniform codeword length, ``lower = (H + c) / u``
        and ``upper = (H + 1 + c) / u``.

    """

    dist = unigram_distribution(corpus, weighting='text')

    huffman = huffman_code(dist, b)
    uniform = uniform_code(dist.size, b, dist.tokens)

    u = float(uniform.lengths[0])
    c = covariance_term(corpus, huffman) / expected_length(corpus)
    H = shannon_entropy(dist, b)

    value = corpus_code_length(corpus, huffman) \
        / corpus_code_length(corpus, uniform)

    return EfficiencyBounds((H + c) / u, value, (H + 1. + c) / u)


def _text_code_lengths(corpus: TokenizedCorpus, code: CodeBook) -> np.ndarray:
    lengths = code.lengths_for(corpus.vocabulary.types)
    return corpus.text_sums(lengths)


def _kraft_feasible(lengths: np.ndarray, b: int) -> bool:
    """Exact integer check of ``sum(b**-l) <= 1``."""
    top = int(lengths.max())
    return sum(b**(top - int(n)) for n in lengths) <= b**top


def _canonical_codewords(lengths: np.ndarray, b: int) -> tuple[str]:
    """Assign canonical codewords, shortest lengths first."""

    order = sorted(range(lengths.size), key=lambda i: (lengths[i], i))

    words = [''] * lengths.size
    code, prev = 0, int(lengths[order[0]])

    for i in order:
        n = int(lengths[i])
        code *= b**(n - prev)
        prev = n

        digits, value = [], code
        for _ in range(n):
            value, k = divmod(value, b)
            digits.append(_SYMBOLS[k])

        words[i] = ''.join(reversed(digits))
        code += 1

    return tuple(words)


def _check_codewords(codewords: tuple[str], lengths: np.ndarray,
                     b: int) -> None:
    """
    Check explicit codewords against lengths and the alphabet.

    Raises
    ------
    ValueError
        Sizes or lengths differ, a symbol is outside the alphabet, or the
        set is not prefix-free.

    """

    if len(codewords) != lengths.size:
        raise ValueError("'codewords' and 'lengths' sizes differ.")

    alphabet = set(_SYMBOLS[:b])
    for word, n in zip(codewords, lengths):
        if len(word) != n:
            raise ValueError(f"Codeword {word!r} does not have length {n}.")
        elif not set(word) <= alphabet:
            raise ValueError(f"Codeword {word!r} uses symbols outside the"
                             f" {b}-ary alphabet.")

    if not is_prefix_free(codewords):
        raise ValueError("'codewords' are not prefix-free.")


def _check_base(b: int) -> int:
    if int(b) != b or b < 2:
        raise ValueError(f"'b' must be an integer >= 2, got {b}.")
    return int(b)


def _format(value: object) -> str:
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    elif isinstance(value, float):
        return repr(value)

    return str(value)
