from __future__ import annotations
from typing import Iterable, Sequence

from .._core import CoverageError, EmptyInputError
from .._utils import get_logger
from ._spaces import escape_spaces, unescape_spaces

logger = get_logger(__name__)


class LzwModel:
    """LZW substring dictionary."""

    __slots__ = ('_entries', '_vocab_size', '_max_len',)

    def __init__(self, entries: Sequence[str], vocab_size: int) -> None:
        """
        An immutable, trained LZW dictionary. Use ``train_lzw`` to make one or
        ``load_model`` to read one from disk.

        Parameters
        ----------
        entries : Sequence[str]
            Dictionary entries in insertion order. Duplicates keep their first
            position.
        vocab_size : int
            Dictionary size cap used in training.

        Raises
        ------
        ValueError
            An entry is empty, or there are more entries than 'vocab_size'.

        """

        entries = dict.fromkeys(entries)
        if '' in entries:
            raise ValueError("Dictionary entries cannot be empty.")
        elif len(entries) > vocab_size:
            raise ValueError(f"{len(entries)} entries exceed {vocab_size=}.")

        self._entries = entries
        self._vocab_size = int(vocab_size)
        self._max_len = max((len(e) for e in entries), default=0)

    def __repr__(self) -> str:  # pragma: no cover
        return f"LzwModel(size={self.size}, vocab_size={self._vocab_size})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LzwModel):
            return NotImplemented
        return (self.entries, self._vocab_size) \
            == (other.entries, other._vocab_size)

    def __contains__(self, entry: str) -> bool:
        return entry in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> tuple[str]:
        """Dictionary entries in insertion order."""
        return tuple(self._entries)

    @property
    def vocab_size(self) -> int:
        """Dictionary size cap."""
        return self._vocab_size

    @property
    def size(self) -> int:
        """Number of entries."""
        return len(self._entries)


def train_lzw(texts: Iterable[str], vocab_size: int) -> LzwModel:
    """
    Build an LZW dictionary in one pass over the corpus.

    Parameters
    ----------
    texts : Iterable[str]
        Raw texts, joined with newline characters before the pass. Newlines
        and spaces are ordinary dictionary characters.
    vocab_size : int
        Dictionary size cap, counting the single characters.

    Returns
    -------
    :class:`LzwModel`
        Single characters in first-occurrence order, then the phrases added
        by the standard LZW pass until the cap is reached.

    Raises
    ------
    EmptyInputError
        The corpus has no characters.
    ValueError
        'vocab_size' is smaller than the character inventory.

    """

    data = '\n'.join(texts)
    if not data:
        raise EmptyInputError("LZW training needs at least one character.")

    entries = dict.fromkeys(data)
    if vocab_size < len(entries):
        raise ValueError(f"{vocab_size=} is smaller than the"
                         f" {len(entries)} distinct characters.")

    phrase = ''
    for char in data:
        if len(entries) >= vocab_size:
            break

        extended = phrase + char
        if extended in entries:
            phrase = extended
        else:
            entries[extended] = None
            phrase = char

    logger.info("Trained LZW with %d entries (cap %d).", len(entries),
                vocab_size)

    return LzwModel(entries, vocab_size)


def apply_lzw(model: LzwModel, text: str) -> list[str]:
    """
    Segment a text by greedy longest match against the dictionary.

    Parameters
    ----------
    model : LzwModel
        Trained dictionary.
    text : str
        Raw text. Every character must be in the dictionary.

    Returns
    -------
    tokens : list[str]
        Dictionary entries whose concatenation is 'text'.

    Raises
    ------
    CoverageError
        A character of 'text' is not in the dictionary.

    """

    tokens, i = [], 0
    while i < len(text):
        if text[i] not in model:
            raise CoverageError(text[i], 'LZW dictionary')

        for n in range(min(model._max_len, len(text) - i), 0, -1):
            if text[i:i + n] in model:
                break

        tokens.append(text[i:i + n])
        i += n

    return tokens


def detokenize_lzw(tokens: Sequence[str]) -> str:
    """Invert ``apply_lzw`` by concatenation."""
    return ''.join(tokens)


def render_lzw(tokens: Sequence[str]) -> str:
    """
    Render LZW tokens on one line, separated by spaces. Whitespace inside
    tokens is written with visible stand-ins: U+2581 for spaces and control
    pictures for tabs, carriage returns and the like.

    Raises
    ------
    ValueError
        A token holds a stand-in character, or whitespace without one.

    """
    return ' '.join(escape_spaces(token) for token in tokens)


def unrender_lzw(line: str) -> str:
    """Invert ``render_lzw``, returning the raw text."""
    return unescape_spaces(''.join(line.split()))
