from __future__ import annotations
from typing import Iterable, Sequence

import math
import re

from collections import Counter

import numpy as np

from scipy import special

from .._core import Constants, EmptyInputError, RoundTripError
from .._utils import ProgressBar, get_logger, progress, short_warn
from ._spaces import escape_spaces, is_space_piece, unescape_spaces

GREEDY = 'greedy'
ANTIGREEDY = 'antigreedy'

# word states while detokenizing
_START, _INSIDE, _AFTER = range(3)

_WHITESPACE = re.compile(r"(\s+)")

logger = get_logger(__name__)


class BpeModel:
    """Ordered BPE merges with their training settings."""

    __slots__ = ('_merges', '_ranks', '_vocab_size', '_temperature', '_seed',
                 '_alphabet',)

    def __init__(self, merges: Sequence[tuple[str, str]], vocab_size: int,
                 temperature: float | str = GREEDY, seed: int = 42,
                 alphabet: Sequence[str] = None) -> None:
        """
        An immutable, trained BPE model. Use ``train_bpe`` to make one or
        ``load_model`` to read one from disk.

        Parameters
        ----------
        merges : Sequence[tuple[str, str]]
            Merge pairs in training order. The merged token is the
            concatenation of the pair.
        vocab_size : int
            The vocabulary size targeted in training.
        temperature : float | str, optional
            Training temperature, a nonzero float or one of 'greedy' and
            'antigreedy'. The default is 'greedy'.
        seed : int, optional
            Seed of the merge-sampling generator. The default is 42.
        alphabet : Sequence[str], optional
            Initial symbol inventory (characters plus the end-of-word
            marker). The default is None, e.g., for models loaded from disk.

        """

        self._merges = tuple((str(a), str(b)) for a, b in merges)
        self._ranks = {}
        for i, pair in enumerate(self._merges):
            self._ranks.setdefault(pair, []).append(i)
        self._vocab_size = int(vocab_size)
        self._temperature = _check_temperature(temperature)
        self._seed = int(seed)
        self._alphabet = None if alphabet is None else tuple(alphabet)

    def __repr__(self) -> str:  # pragma: no cover
        return (f"BpeModel(num_merges={len(self._merges)},"
                f" vocab_size={self._vocab_size},"
                f" temperature={self._temperature!r}, seed={self._seed})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BpeModel):
            return NotImplemented
        return (self._merges, self._vocab_size, self._temperature,
                self._seed) == (other._merges, other._vocab_size,
                                other._temperature, other._seed)

    @property
    def merges(self) -> tuple[tuple[str, str]]:
        """Merge pairs in training order."""
        return self._merges

    @property
    def vocab_size(self) -> int:
        """Targeted vocabulary size."""
        return self._vocab_size

    @property
    def temperature(self) -> float | str:
        """Training temperature."""
        return self._temperature

    @property
    def seed(self) -> int:
        """Merge-sampling seed."""
        return self._seed

    @property
    def alphabet(self) -> tuple[str] | None:
        """Initial symbol inventory, if known."""
        return self._alphabet

    @property
    def vocabulary(self) -> tuple[str] | None:
        """
        Distinct symbols the model can emit on training characters: the
        alphabet plus every merge product, or None if the alphabet is unknown.

        """

        if self._alphabet is None:
            return None

        products = (a + b for a, b in self._merges)
        return tuple(dict.fromkeys((*self._alphabet, *products)))

    def encode_word(self, word: str) -> list[str]:
        """
        Segment one whitespace-free word.

        Parameters
        ----------
        word : str
            The word, without the end-of-word marker.

        Returns
        -------
        tokens : list[str]
            Pieces whose concatenation is ``word`` plus the end-of-word
            marker. Merges are replayed in training order, leftmost
            occurrence first.

        """

        symbols = list(word) + [Constants().EOW]

        last = -1
        while len(symbols) > 1:
            rank = min((r for pair in zip(symbols, symbols[1:])
                        for r in self._ranks.get(pair, ()) if r > last),
                       default=None)

            if rank is None:
                break

            symbols = _merge(symbols, self._merges[rank])
            last = rank

        return symbols


def train_bpe(texts: Iterable[str], vocab_size: int,
              temperature: float | str = GREEDY, seed: int = 42,
              min_count: int = 2, bar: bool = False) -> BpeModel:
    """
    Train BPE, sampling each merge from annealed pair frequencies.

    Parameters
    ----------
    texts : Iterable[str]
        Raw texts. Words are whitespace-separated and each word ends with the
        end-of-word marker symbol. Merges never cross words.
    vocab_size : int
        Target number of distinct symbols, counting the initial characters
        and the end-of-word marker.
    temperature : float | str, optional
        Nonzero temperature, or 'greedy' (most frequent pair, the limit
        tau -> 0+) or 'antigreedy' (least frequent pair, tau -> 0-). The
        default is 'greedy'.
    seed : int, optional
        Seed for merge sampling. The default is 42.
    min_count : int, optional
        Only pairs occurring at least this often can merge. The default is 2.
    bar : bool, optional
        Show a progress bar over merges. The default is False.

    Returns
    -------
    :class:`BpeModel`
        The trained model.

    Raises
    ------
    ValueError
        'temperature' is zero or invalid.
    ValueError
        A text contains the end-of-word marker character.
    ValueError
        'vocab_size' is smaller than the initial symbol inventory.
    EmptyInputError
        No words were given.

    Notes
    -----
    With pair counts ``c`` and ``c_max = max(c)``, a finite temperature
    samples the next merge from ``softmax(c / (tau * c_max))``. Candidates
    are sorted lexicographically first, so greedy and antigreedy ties go to
    the smallest pair and sampling is reproducible for a fixed seed.

    Training stops early when no pair reaches 'min_count'; a warning is
    shown if the target vocabulary was not reached.

    """

    temperature = _check_temperature(temperature)
    eow = Constants().EOW

    words = Counter()
    for text in texts:
        _check_raw(text)
        words.update(tuple(word) + (eow,) for word in text.split())

    if not words:
        raise EmptyInputError("BPE training needs at least one word.")

    alphabet = sorted({s for word in words for s in word})
    if vocab_size < len(alphabet):
        raise ValueError(f"{vocab_size=} is smaller than the"
                         f" {len(alphabet)} initial symbols.")

    segmented = [list(word) for word in words]
    freqs = list(words.values())

    rng = np.random.default_rng(seed)
    symbols = set(alphabet)
    merges = []

    pbar = ProgressBar(total=vocab_size - len(alphabet), desc='BPE merges',
                       disable=not bar)

    while len(symbols) < vocab_size:
        pairs = Counter()
        for word, freq in zip(segmented, freqs):
            for pair in zip(word, word[1:]):
                pairs[pair] += freq

        candidates = sorted(p for p, c in pairs.items() if c >= min_count)
        if not candidates:
            break

        counts = np.array([pairs[p] for p in candidates], dtype=float)
        pair = candidates[_select(counts, temperature, rng)]

        merges.append(pair)
        segmented = [_merge(word, pair) if pair[0] in word else word
                     for word in segmented]

        size = len(symbols)
        symbols.add(pair[0] + pair[1])
        pbar.update(len(symbols) - size)

    pbar.close()

    if len(symbols) < vocab_size:
        short_warn(f"BPE stopped at {len(symbols)} symbols, below"
                   f" {vocab_size=}; no pair occurs {min_count}+ times.")

    logger.info("Trained BPE with %d merges (temperature=%s, seed=%d).",
                len(merges), temperature, seed)

    return BpeModel(merges, vocab_size, temperature, seed, alphabet)


def bpe_sweep(texts: Sequence[str], vocab_sizes: Sequence[int],
              temperatures: Sequence[float | str] = None, seed: int = 42,
              bar: bool = False) -> list[tuple[dict, BpeModel]]:
    """
    Train one BPE model per vocabulary size and temperature pair.

    Parameters
    ----------
    texts : Sequence[str]
        Raw training texts.
    vocab_sizes : Sequence[int]
        Vocabulary sizes to train.
    temperatures : Sequence[float | str], optional
        Temperatures to train. The default is None, which uses the ladder in
        the packaged ``bpe`` template.
    seed : int, optional
        Seed shared by all runs. The default is 42.
    bar : bool, optional
        Show a progress bar over runs. The default is False.

    Returns
    -------
    runs : list[tuple[dict, BpeModel]]
        ``({'vocab_size': V, 'temperature': tau}, model)`` per combination,
        vocabulary size varying slowest.

    """

    from .._core import defaults
    from ..mathutils import param_combinations

    if temperatures is None:
        temperatures = defaults('bpe')['temperatures']

    combos = param_combinations(['vocab_size', 'temperature'],
                                [list(vocab_sizes), list(temperatures)])

    runs = []
    for combo in progress(combos, bar, 'BPE sweep'):
        model = train_bpe(texts, combo['vocab_size'], combo['temperature'],
                          seed)
        runs.append((combo, model))

    return runs


def apply_bpe(model: BpeModel, text: str) -> list[str]:
    """
    Segment a text with a trained model.

    Parameters
    ----------
    model : BpeModel
        Trained model.
    text : str
        Raw text. Whitespace runs separate words.

    Returns
    -------
    tokens : list[str]
        Pieces of every word in order. Each word's last piece ends with the
        end-of-word marker. Characters unseen in training pass through as
        single-character pieces. A single space between two words is implied
        by the marker; every other whitespace run (leading, trailing,
        repeated, tabs, ...) is kept verbatim as one whitespace token.

    Raises
    ------
    ValueError
        'text' contains the end-of-word marker character.

    """

    _check_raw(text)

    parts = _WHITESPACE.split(text)

    cache = {}
    tokens = []
    for i, part in enumerate(parts):
        if i % 2:
            if part != ' ' or not parts[i - 1] or not parts[i + 1]:
                tokens.append(part)
        elif part:
            if part not in cache:
                cache[part] = model.encode_word(part)
            tokens.extend(cache[part])

    return tokens


def detokenize_bpe(tokens: Sequence[str]) -> str:
    """
    Invert ``apply_bpe``.

    Parameters
    ----------
    tokens : Sequence[str]
        Pieces produced by ``apply_bpe``.

    Returns
    -------
    text : str
        The raw text. Consecutive words without a whitespace token between
        them are joined by one space.

    Raises
    ------
    RoundTripError
        The end-of-word markers are misplaced (missing at the end, leading,
        doubled, or inside a piece), a whitespace token splits a word, or a
        word piece holds whitespace.

    """

    eow = Constants().EOW

    chunks, state = [], _START
    for token in tokens:
        if token and token.isspace():
            if state == _INSIDE:
                raise RoundTripError(f"Whitespace token {token!r} splits a"
                                     " word.")
            chunks.append(token)
            state = _START
            continue

        surface = token.removesuffix(eow)
        if eow in surface or (not surface and state != _INSIDE):
            raise RoundTripError("End-of-word markers are misplaced in the"
                                 " token sequence.")
        elif surface and surface.split() != [surface]:
            raise RoundTripError(f"Word piece {token!r} holds whitespace.")

        if surface and state == _AFTER:
            chunks.append(' ')

        chunks.append(surface)
        state = _AFTER if token.endswith(eow) else _INSIDE

    if state == _INSIDE:
        raise RoundTripError("The last word has no end-of-word marker.")

    return ''.join(chunks)


def render_bpe(tokens: Sequence[str]) -> str:
    """
    Render pieces in the "@@" convention: one space between pieces, and
    every piece after the first of its word prefixed with "@@". End-of-word
    markers are dropped. Whitespace tokens are written with visible
    stand-ins (U+2581 for spaces, control pictures for tabs and the like).

    Parameters
    ----------
    tokens : Sequence[str]
        Pieces produced by ``apply_bpe``.

    Returns
    -------
    line : str
        Rendered tokens.

    Raises
    ------
    ValueError
        A word-initial piece starts with "@@", or a piece holds a stand-in
        character, so the rendering would not be invertible.

    """

    C = Constants()

    pieces, first = [], True
    for token in tokens:
        if token and token.isspace():
            pieces.append(escape_spaces(token))
            first = True
            continue

        surface = escape_spaces(token.replace(C.EOW, ''))

        if surface:
            if first and surface.startswith(C.CONT):
                raise ValueError(f"Word-initial piece {surface!r} starts with"
                                 f" {C.CONT!r}; rendering is ambiguous.")

            pieces.append(surface if first else C.CONT + surface)
            first = False

        if token.endswith(C.EOW):
            first = True

    return ' '.join(pieces)


def unrender_bpe(line: str) -> str:
    """
    Invert ``render_bpe``, returning the raw text.

    Parameters
    ----------
    line : str
        Rendered tokens.

    Returns
    -------
    text : str
        The raw text.

    Raises
    ------
    RoundTripError
        A continuation piece does not follow a piece of the same word.

    """

    cont = Constants().CONT

    chunks, in_word = [], False
    for piece in line.split():
        if is_space_piece(piece):
            chunks.append(unescape_spaces(piece))
            in_word = False
        elif piece.startswith(cont):
            if not in_word:
                raise RoundTripError(f"Continuation piece {piece!r} does not"
                                     " follow a word piece.")
            chunks.append(piece[len(cont):])
        else:
            if in_word:
                chunks.append(' ')
            chunks.append(piece)
            in_word = True

    return ''.join(chunks)


def _merge(symbols: list[str], pair: tuple[str, str]) -> list[str]:
    """Merge non-overlapping occurrences of 'pair', left to right."""

    a, b = pair

    merged, i = [], 0
    while i < len(symbols):
        if i < len(symbols) - 1 and symbols[i] == a and symbols[i + 1] == b:
            merged.append(a + b)
            i += 2
        else:
            merged.append(symbols[i])
            i += 1

    return merged


def _select(counts: np.ndarray, temperature: float | str,
            rng: np.random.Generator) -> int:
    """Pick a candidate index from pair counts at 'temperature'."""

    if temperature == GREEDY:
        return int(np.argmax(counts))
    elif temperature == ANTIGREEDY:
        return int(np.argmin(counts))

    probs = special.softmax(counts / (temperature*counts.max()))

    return int(rng.choice(counts.size, p=probs))


def _check_temperature(temperature: float | str) -> float | str:
    """
    Check and normalize a BPE temperature.

    Parameters
    ----------
    temperature : float | str
        Nonzero number, a numeric string, or 'greedy' / 'antigreedy'
        (aliases '0+' / '0-').

    Returns
    -------
    temperature : float | str
        A nonzero float, 'greedy', or 'antigreedy'.

    Raises
    ------
    ValueError
        'temperature' is zero, nan, or not understood.

    """

    aliases = {GREEDY: GREEDY, '0+': GREEDY, ANTIGREEDY: ANTIGREEDY,
               '0-': ANTIGREEDY}

    if isinstance(temperature, str):
        if temperature.lower() in aliases:
            return aliases[temperature.lower()]

        try:
            temperature = float(temperature)
        except ValueError:
            raise ValueError(f"{temperature=} is invalid; use a nonzero"
                             " number, 'greedy', or 'antigreedy'.")

    temperature = float(temperature)
    if temperature == 0. or math.isnan(temperature):
        raise ValueError(f"{temperature=} is invalid; use 'greedy' or"
                         " 'antigreedy' for the limits at zero.")

    return temperature


def _check_raw(text: str) -> None:
    """Reject raw text that already contains the end-of-word marker."""

    if Constants().EOW in text:
        raise ValueError("Raw text cannot contain the end-of-word marker"
                         " character (U+E000).")
