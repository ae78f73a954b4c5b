from __future__ import annotations

import os
import re

from ._bpe import BpeModel
from ._lzw import LzwModel

_BPE_HEADER = re.compile(r'^bpe v1 vocab=(\d+) tau=(\S+) seed=(-?\d+)$')
_LZW_HEADER = re.compile(r'^lzw v1 vocab=(\d+)$')

_ESCAPES = {'\\': '\\\\', '\t': '\\t', '\n': '\\n', '\r': '\\r'}
_UNESCAPES = {v: k for k, v in _ESCAPES.items()}


def save_model(model: BpeModel | LzwModel, path: str | os.PathLike) -> None:
    """
    Write a model file.

    BPE files start with ``bpe v1 vocab=<V> tau=<tau> seed=<seed>`` followed
    by one ``<left><TAB><right>`` merge per line in training order. LZW files
    start with ``lzw v1 vocab=<V>`` followed by one entry per line in
    insertion order, with backslash, TAB, CR, and newline escaped as ``\\\\``,
    ``\\t``, ``\\r``, and ``\\n``.

    Parameters
    ----------
    model : BpeModel | LzwModel
        Trained model.
    path : str | PathLike
        Output file. Existing files are overwritten.

    Returns
    -------
    None.

    Raises
    ------
    TypeError
        'model' is not a BPE or LZW model.

    """

    if isinstance(model, BpeModel):
        tau = model.temperature
        tau = tau if isinstance(tau, str) else repr(tau)

        lines = [f"bpe v1 vocab={model.vocab_size} tau={tau}"
                 f" seed={model.seed}"]
        lines += [f"{a}\t{b}" for a, b in model.merges]

    elif isinstance(model, LzwModel):
        lines = [f"lzw v1 vocab={model.vocab_size}"]
        lines += [_escape(entry) for entry in model.entries]

    else:
        raise TypeError(f"Cannot save a model of type {type(model).__name__}.")

    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write('\n'.join(lines) + '\n')


def load_model(path: str | os.PathLike) -> BpeModel | LzwModel:
    """
    Read a model file, detecting BPE or LZW from its header.

    Parameters
    ----------
    path : str | PathLike
        Model file written by ``save_model``.

    Returns
    -------
    model : BpeModel | LzwModel
        The model. BPE models loaded from disk have no ``alphabet``.

    Raises
    ------
    FileNotFoundError
        'path' does not exist.
    ValueError
        The header is not recognized or a merge line is malformed.

    """

    if not os.path.exists(path):
        raise FileNotFoundError(f"No such file: '{path}'.")

    with open(path, 'r', encoding='utf-8', newline='') as f:
        lines = f.read().split('\n')

    if lines and lines[-1] == '':
        lines.pop()

    header, body = (lines[0], lines[1:]) if lines else ('', [])

    if (match := _BPE_HEADER.match(header)):
        vocab, tau, seed = match.groups()

        merges = []
        for i, line in enumerate(body, start=2):
            pair = line.split('\t')
            if len(pair) != 2 or not all(pair):
                raise ValueError(f"'{path}' line {i} is not a merge pair.")
            merges.append(tuple(pair))

        return BpeModel(merges, int(vocab), tau, int(seed))

    elif (match := _LZW_HEADER.match(header)):
        entries = [_unescape(line) for line in body]
        return LzwModel(entries, int(match.group(1)))

    raise ValueError(f"'{path}' is not a BPE or LZW model file.")


def _escape(entry: str) -> str:
    return ''.join(_ESCAPES.get(c, c) for c in entry)


def _unescape(line: str) -> str:
    return re.sub(r'\\[\\tnr]', lambda m: _UNESCAPES[m.group(0)], line)
