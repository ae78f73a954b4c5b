"""
Visible stand-ins for whitespace in rendered token files. Spaces become
U+2581 and the ASCII control whitespace (tab, newline, carriage return, ...)
becomes its Unicode control picture, e.g., U+2409 for a tab. Rendered
pieces therefore never hold whitespace, and raw text may not hold the
stand-ins themselves.

"""

from __future__ import annotations

from .._core import Constants

_PICTURES = 0x2400


def escape_spaces(token: str) -> str:
    """
    Replace every whitespace character of 'token' with its stand-in.

    Parameters
    ----------
    token : str
        Token surface.

    Returns
    -------
    piece : str
        Whitespace-free rendering of 'token'.

    Raises
    ------
    ValueError
        'token' holds a stand-in character, or whitespace that has no
        stand-in (e.g., U+00A0 or U+3000).

    """

    space = Constants().SPACE

    chars = []
    for char in token:
        if is_stand_in(char):
            raise ValueError(f"Token {token!r} cannot be rendered; it holds"
                             f" the stand-in character {char!r}.")
        elif char == ' ':
            chars.append(space)
        elif char.isspace():
            if ord(char) >= 0x20:
                raise ValueError(f"Token {token!r} cannot be rendered;"
                                 f" {char!r} has no visible stand-in.")
            chars.append(chr(_PICTURES + ord(char)))
        else:
            chars.append(char)

    return ''.join(chars)


def unescape_spaces(piece: str) -> str:
    """Invert ``escape_spaces``."""

    space = Constants().SPACE

    chars = []
    for char in piece:
        if char == space:
            chars.append(' ')
        elif is_stand_in(char):
            chars.append(chr(ord(char) - _PICTURES))
        else:
            chars.append(char)

    return ''.join(chars)


def is_stand_in(char: str) -> bool:
    """Return True if 'char' is U+2581 or an ASCII control picture."""
    return char == Constants().SPACE or 0 <= ord(char) - _PICTURES < 0x20


def is_space_piece(piece: str) -> bool:
    """Return True for a non-empty piece made only of stand-ins."""
    return bool(piece) and all(is_stand_in(c) for c in piece)
