"""
Corpus Module
-------------
Ingest pre-tokenized text, build vocabularies, and compute the empirical
unigram distribution and sequence-length statistics that the metric, coding,
and analysis modules consume.

Input files are plain UTF-8 text with one text per line and tokens separated
by runs of spaces or tabs. Tokens are taken verbatim, so continuation markers
such as ``@@`` are part of the token type.

"""

from __future__ import annotations
from typing import Iterable, Sequence

import os

import numpy as np

from scipy import sparse

from ._core import EmptyInputError
from ._utils import get_logger

logger = get_logger(__name__)


class Vocabulary:
    """Ordered token types."""

    __slots__ = ('_types', '_index',)

    def __init__(self, types: Iterable[str]) -> None:
        """
        An insertion-ordered set of token types. Duplicates keep their first
        position.

        Parameters
        ----------
        types : Iterable[str]
            Token surfaces. Each must be non-empty and free of whitespace.

        Raises
        ------
        ValueError
            A token is empty or contains whitespace.
        EmptyInputError
            No types were given.

        """

        index = {}
        for token in types:
            if token not in index:
                _check_token(token)
                index[token] = len(index)

        if not index:
            raise EmptyInputError("A vocabulary needs at least one type.")

        self._index = index
        self._types = tuple(index)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Vocabulary(size={self.size})"

    def __len__(self) -> int:
        return len(self._types)

    def __iter__(self):
        return iter(self._types)

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vocabulary):
            return NotImplemented
        return self._types == other._types

    @property
    def types(self) -> tuple[str]:
        """Token types in first-occurrence order."""
        return self._types

    @property
    def size(self) -> int:
        """Number of types, ``V``."""
        return len(self._types)

    def index(self, token: str) -> int:
        """Return the id of 'token'; raises KeyError if absent."""
        return self._index[token]


class TokenizedCorpus:
    """A list of token-id sequences over one vocabulary."""

    __slots__ = ('_texts', '_lengths', '_vocab', '_counts',)

    def __init__(self, texts: Sequence[Sequence[int]],
                 vocabulary: Vocabulary) -> None:
        """
        Immutable tokenized corpus. Most users build one with
        ``from_texts`` or ``load_tokenized`` instead of calling this directly.

        Parameters
        ----------
        texts : Sequence[Sequence[int]]
            Token ids per text. Every text must be non-empty and every id
            must be smaller than the vocabulary size.
        vocabulary : Vocabulary
            The id-to-token mapping.

        Raises
        ------
        EmptyInputError
            'texts' is empty.
        ValueError
            A text is empty.
        ValueError
            A token id is out of range.

        """

        if len(texts) == 0:
            raise EmptyInputError("A corpus needs at least one text.")

        V = vocabulary.size

        arrays = []
        for i, text in enumerate(texts):
            ids = np.array(text, dtype=np.int64)
            ids.flags.writeable = False

            if ids.size == 0:
                raise ValueError(f"Text {i} is empty.")
            elif ids.min() < 0 or ids.max() >= V:
                raise ValueError(f"Text {i} has token ids outside [0, {V}).")

            arrays.append(ids)

        lengths = np.array([ids.size for ids in arrays], dtype=np.int64)
        lengths.flags.writeable = False

        counts = np.bincount(np.concatenate(arrays), minlength=V)
        counts.flags.writeable = False

        self._texts = tuple(arrays)
        self._lengths = lengths
        self._vocab = vocabulary
        self._counts = counts

    def __repr__(self) -> str:  # pragma: no cover
        return (f"TokenizedCorpus(num_texts={self.num_texts},"
                f" num_tokens={self.num_tokens}, V={self._vocab.size})")

    def __len__(self) -> int:
        return len(self._texts)

    @property
    def texts(self) -> tuple[np.ndarray]:
        """Read-only token-id arrays, one per text."""
        return self._texts

    @property
    def lengths(self) -> np.ndarray:
        """Read-only token count per text, ``L``."""
        return self._lengths

    @property
    def vocabulary(self) -> Vocabulary:
        """Corpus vocabulary."""
        return self._vocab

    @property
    def num_texts(self) -> int:
        """Number of texts, ``M``."""
        return len(self._texts)

    @property
    def num_tokens(self) -> int:
        """Total token count, ``N``."""
        return int(self._lengths.sum())

    @property
    def counts(self) -> np.ndarray:
        """Read-only pooled count per type, in vocabulary order."""
        return self._counts

    def tokens(self, index: int) -> list[str]:
        """Return the token surfaces of text 'index'."""
        types = self._vocab.types
        return [types[i] for i in self._texts[index]]

    def count_matrix(self) -> sparse.csr_matrix:
        """
        Return per-text type counts.

        Returns
        -------
        counts : sparse.csr_matrix, shape(M, V)
            ``counts[i, j]`` is the number of times type ``j`` occurs in
            text ``i``. Only occurring pairs are stored.

        """

        M, V = self.num_texts, self._vocab.size

        rows = np.repeat(np.arange(M), self._lengths)
        cols = np.concatenate(self._texts)
        ones = np.ones(cols.size, dtype=np.int64)

        return sparse.csr_matrix((ones, (rows, cols)), shape=(M, V))

    def text_sums(self, values: Sequence[float]) -> np.ndarray:
        """
        Sum a per-type quantity over the tokens of every text.

        Parameters
        ----------
        values : Sequence[float]
            One value per type, in vocabulary order.

        Returns
        -------
        sums : 1D np.array, shape(M,)
            ``sums[i]`` adds ``values[t]`` for every token ``t`` of text
            ``i``, repeats included.

        Raises
        ------
        ValueError
            'values' does not have one entry per type.

        """

        values = np.asarray(values, dtype=float)
        if values.shape != (self._vocab.size,):
            raise ValueError(f"Expected {self._vocab.size} values, one per"
                             f" type, got shape {values.shape}.")

        offsets = np.concatenate(([0], np.cumsum(self._lengths)[:-1]))

        return np.add.reduceat(values[np.concatenate(self._texts)], offsets)


class UnigramDistribution:
    """Empirical unigram distribution over token types."""

    __slots__ = ('_tokens', '_probs', '_counts', '_total', '_base_corpus',)

    def __init__(self, probs: Sequence[float], tokens: Sequence[str] = None,
                 counts: Sequence[int] = None,
                 base_corpus: TokenizedCorpus = None) -> None:
        """
        A distribution with strictly positive probabilities. Entries with zero
        probability are dropped, along with their tokens and counts.

        Parameters
        ----------
        probs : Sequence[float]
            Non-negative probabilities. They must sum to one within 1e-9 and
            are renormalized to remove rounding noise.
        tokens : Sequence[str], optional
            Token per entry. The default is None, which names entries by
            their position ('0', '1', ...).
        counts : Sequence[int], optional
            Occurrence count per entry. The default is None, for
            distributions that were not estimated from a corpus.
        base_corpus : TokenizedCorpus, optional
            The corpus the distribution was estimated from. The default is
            None.

        Raises
        ------
        ValueError
            'probs' is not one-dimensional, is empty, has negative or
            non-finite entries, or does not sum to one.
        ValueError
            'tokens' or 'counts' length differs from 'probs'.
        ValueError
            'counts' has a zero for a positive-probability entry.

        """

        probs = np.asarray(probs, dtype=float)

        if probs.ndim != 1 or probs.size == 0:
            raise ValueError("'probs' must be a non-empty 1D sequence.")
        elif not np.all(np.isfinite(probs)) or probs.min() < 0.:
            raise ValueError("'probs' must be finite and non-negative.")
        elif abs(probs.sum() - 1.) > 1e-9:
            raise ValueError(f"'probs' must sum to 1, got {probs.sum()!r}.")

        if tokens is None:
            tokens = [str(i) for i in range(probs.size)]
        elif len(tokens) != probs.size:
            raise ValueError("'tokens' and 'probs' lengths differ.")

        if counts is not None:
            counts = np.asarray(counts, dtype=np.int64)
            if counts.shape != probs.shape:
                raise ValueError("'counts' and 'probs' lengths differ.")

        keep = probs > 0.
        probs = probs[keep] / probs[keep].sum()
        probs.flags.writeable = False

        if counts is not None:
            counts = counts[keep]
            if counts.min() <= 0:
                raise ValueError("'counts' must be positive wherever 'probs'"
                                 " is.")
            counts.flags.writeable = False

        self._tokens = tuple(t for t, k in zip(tokens, keep) if k)
        self._probs = probs
        self._counts = counts
        self._total = None if counts is None else int(counts.sum())
        self._base_corpus = base_corpus

    def __repr__(self) -> str:  # pragma: no cover
        return f"UnigramDistribution(V={self.size}, total={self._total})"

    def __len__(self) -> int:
        return self._probs.size

    @classmethod
    def from_counts(cls, counts: Sequence[int],
                    tokens: Sequence[str] = None) -> UnigramDistribution:
        """
        Build the distribution ``counts / sum(counts)``.

        Parameters
        ----------
        counts : Sequence[int]
            Non-negative counts. Zero-count entries are dropped.
        tokens : Sequence[str], optional
            Token per entry. The default is None.

        Returns
        -------
        :class:`UnigramDistribution`
            The normalized distribution.

        """

        counts = np.asarray(counts, dtype=np.int64)
        if counts.sum() <= 0:
            raise EmptyInputError("'counts' must have a positive total.")

        return cls(counts / counts.sum(), tokens=tokens, counts=counts)

    @property
    def tokens(self) -> tuple[str]:
        """Token per entry, aligned with ``probs``."""
        return self._tokens

    @property
    def probs(self) -> np.ndarray:
        """Read-only probabilities, ``p(delta)``."""
        return self._probs

    @property
    def counts(self) -> np.ndarray | None:
        """Read-only counts, or None if not estimated from a corpus."""
        return self._counts

    @property
    def total(self) -> int | None:
        """Total count ``N``, or None if not estimated from a corpus."""
        return self._total

    @property
    def size(self) -> int:
        """Number of types with positive probability, ``V``."""
        return self._probs.size

    @property
    def base_corpus(self) -> TokenizedCorpus | None:
        """The corpus the distribution was estimated from, if any."""
        return self._base_corpus

    def prob(self, token: str) -> float:
        """Return ``p(token)``; zero for tokens outside the support."""
        try:
            return float(self._probs[self._tokens.index(token)])
        except ValueError:
            return 0.


def from_texts(texts: Iterable[str | Sequence[str]]) -> TokenizedCorpus:
    """
    Build a corpus from in-memory texts.

    Parameters
    ----------
    texts : Iterable[str | Sequence[str]]
        Either whitespace-separated strings or pre-split token lists. Texts
        without tokens are skipped.

    Returns
    -------
    :class:`TokenizedCorpus`
        The corpus, with a vocabulary in first-occurrence order.

    Raises
    ------
    EmptyInputError
        No text has any tokens.

    """

    split = []
    for text in texts:
        tokens = text.split() if isinstance(text, str) else list(text)
        if tokens:
            split.append(tokens)

    if not split:
        raise EmptyInputError("No non-empty texts were given.")

    vocab = Vocabulary(token for tokens in split for token in tokens)
    ids = [[vocab.index(t) for t in tokens] for tokens in split]

    return TokenizedCorpus(ids, vocab)


def load_tokenized(paths: str | os.PathLike | Sequence[str | os.PathLike],
                   encoding: str = 'utf-8') -> TokenizedCorpus:
    """
    Load pre-tokenized files into one corpus.

    Parameters
    ----------
    paths : str | PathLike | Sequence[str | PathLike]
        One or more files. Files are concatenated in argument order, one text
        per line, tokens separated by runs of spaces or tabs. Empty lines are
        skipped.
    encoding : str, optional
        Text encoding. The default is 'utf-8'.

    Returns
    -------
    :class:`TokenizedCorpus`
        The pooled corpus.

    Raises
    ------
    FileNotFoundError
        A path does not exist.
    EmptyInputError
        A file has no non-empty lines.

    """

    if isinstance(paths, (str, os.PathLike)):
        paths = [paths]

    texts = []
    for path in paths:
        if not os.path.exists(path):
            raise FileNotFoundError(f"No such file: '{path}'.")

        with open(path, 'r', encoding=encoding) as f:
            lines = [line.split() for line in f]

        lines = [tokens for tokens in lines if tokens]
        if not lines:
            raise EmptyInputError(f"'{path}' has no non-empty lines.")

        logger.debug("Loaded %d texts from '%s'.", len(lines), path)
        texts.extend(lines)

    return from_texts(texts)


def unigram_distribution(corpus: TokenizedCorpus,
                         weighting: str = 'token') -> UnigramDistribution:
    """
    Estimate the unigram distribution of a corpus.

    Parameters
    ----------
    corpus : TokenizedCorpus
        The tokenized corpus.
    weighting : {'token', 'text'}, optional
        'token' (default) pools all counts, ``p = counts / N``. 'text'
        averages the per-text proportions ``X_delta`` with uniform weight per
        text. The two agree whenever all texts have the same length.

    Returns
    -------
    :class:`UnigramDistribution`
        Distribution in vocabulary order, with pooled counts attached.

    Raises
    ------
    ValueError
        'weighting' is invalid.

    """

    counts = corpus.counts

    if weighting == 'token':
        probs = counts / counts.sum()
    elif weighting == 'text':
        ids = np.concatenate(corpus.texts)
        weights = np.repeat(1. / corpus.lengths, corpus.lengths)

        probs = np.bincount(ids, weights=weights,
                            minlength=corpus.vocabulary.size)
        probs = probs / corpus.num_texts
    else:
        raise ValueError(f"{weighting=} is invalid; valid values are"
                         " ['token', 'text'].")

    return UnigramDistribution(probs, tokens=corpus.vocabulary.types,
                               counts=counts, base_corpus=corpus)


def expected_length(corpus: TokenizedCorpus) -> float:
    """
    Return the mean number of tokens per text, ``E[L]``.

    Parameters
    ----------
    corpus : TokenizedCorpus
        The tokenized corpus.

    Returns
    -------
    mean_length : float
        Average text length under uniform weights over texts.

    """
    return float(np.mean(corpus.lengths))


def per_text_unigram_proportions(corpus: TokenizedCorpus,
                                 index: int) -> np.ndarray:
    """
    Return the unigram proportions ``X_delta`` of one text.

    Parameters
    ----------
    corpus : TokenizedCorpus
        The tokenized corpus.
    index : int
        Text index in ``[0, M)``. Negative indices are not accepted.

    Returns
    -------
    proportions : 1D np.array, shape(V,)
        ``count(delta, text) / len(text)`` in vocabulary order. Sums to one.

    Raises
    ------
    IndexError
        'index' is out of range.

    """

    if not isinstance(index, (int, np.integer)) or \
            not 0 <= index < corpus.num_texts:
        raise IndexError(f"{index=} is out of range for"
                         f" {corpus.num_texts} texts.")

    ids = corpus.texts[index]
    counts = np.bincount(ids, minlength=corpus.vocabulary.size)

    return counts / ids.size


def _check_token(token: str) -> None:
    """
    Check a token surface.

    Parameters
    ----------
    token : str
        Token surface.

    Returns
    -------
    None.

    Raises
    ------
    ValueError
        'token' is empty or contains whitespace.

    """

    if not isinstance(token, str) or not token:
        raise ValueError(f"Tokens must be non-empty strings, got {token!r}.")
    elif len(token.split()) != 1 or token.split()[0] != token:
        raise ValueError(f"Token {token!r} contains whitespace.")


