"""
Tokenizers Package
------------------
Invertible tokenizers whose compression rate can be controlled. BPE merges
are sampled from temperature-annealed pair frequencies, from greedy (most
frequent pair) through near-uniform to antigreedy (least frequent pair). LZW
builds a substring dictionary in a single pass and applies it by greedy
longest match. Both detokenize exactly, whitespace included.

Models are saved as small UTF-8 text files with ``save_model`` and read back
with ``load_model``, which detects the model type from the header line.

"""

from ._bpe import (
    ANTIGREEDY,
    GREEDY,
    BpeModel,
    apply_bpe,
    bpe_sweep,
    detokenize_bpe,
    render_bpe,
    train_bpe,
    unrender_bpe,
)
from ._lzw import (
    LzwModel,
    apply_lzw,
    detokenize_lzw,
    render_lzw,
    train_lzw,
    unrender_lzw,
)
from ._io import load_model, save_model

__all__ = [
    'ANTIGREEDY',
    'GREEDY',
    'BpeModel',
    'apply_bpe',
    'bpe_sweep',
    'detokenize_bpe',
    'render_bpe',
    'train_bpe',
    'unrender_bpe',
    'LzwModel',
    'apply_lzw',
    'detokenize_lzw',
    'render_lzw',
    'train_lzw',
    'unrender_lzw',
    'load_model',
    'save_model',
]
