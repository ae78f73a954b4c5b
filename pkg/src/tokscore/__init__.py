"""
tokscore
========
Information-theoretic scoring of tokenizations. A tokenizer is judged by how
efficiently its unigram distribution can be coded: Renyi efficiency (entropy
of order alpha normalized by ``log V``) is the headline predictor, alongside
Shannon efficiency, percentile frequency, sequence length, and total bits.
tokscore includes the following:

1) Metrics for pre-tokenized corpora (``score`` and ``tokscore.metrics``)
2) Prefix-free codes and coding-theorem checks (``tokscore.coding``)
3) Temperature-annealed BPE and LZW tokenizers (``tokscore.tokenizers``)
4) Correlation analysis and grid searches (``tokscore.analysis``)
5) A ``tokscore`` command line tool wrapping all of the above

How to use the documentation
----------------------------
Documentation is accessible via Python's ``help()`` function which prints
docstrings from the specified package, module, function, class, etc. (e.g.,
``help(tokscore.metrics)``).

Viewing documentation using IPython
-----------------------------------
Start IPython and import ``tokscore`` under the alias ``ts``. To see what's
available in ``tokscore``, type ``ts.<TAB>`` (where ``<TAB>`` refers to the
TAB key). To view the type hints and brief descriptions, type an open
parenthesis ``(`` after any function, method, class, etc. (e.g.,
``ts.score(``).

"""

# Core package
from ._core import (
    METRICS,
    Constants,
    CoverageError,
    DegenerateVarianceError,
    DegenerateVocabularyError,
    EmptyInputError,
    MetricRequest,
    MetricValue,
    RoundTripError,
    defaults,
    templates,
)

# Submodules/subpackages
from . import analysis
from . import coding
from . import corpus
from . import mathutils
from . import metrics
from . import tokenizers

from .metrics import score

__version__ = '0.1.0.dev0'

__all__ = [
    'METRICS',
    'Constants',
    'CoverageError',
    'DegenerateVarianceError',
    'DegenerateVocabularyError',
    'EmptyInputError',
    'MetricRequest',
    'MetricValue',
    'RoundTripError',
    'defaults',
    'templates',
    'analysis',
    'coding',
    'corpus',
    'mathutils',
    'metrics',
    'tokenizers',
    'score',
]
