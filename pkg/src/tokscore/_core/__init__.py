"""
Core Subpackage
---------------
This subpackage hosts all of the functions, classes, etc. that should be made
available at the base-level of the package.

"""

from ._constants import Constants
from ._errors import (
    CoverageError,
    DegenerateVarianceError,
    DegenerateVocabularyError,
    EmptyInputError,
    RoundTripError,
)
from ._request import METRICS, MetricRequest, MetricValue, parse_extras
from ._templates import defaults, templates

__all__ = [
    'Constants',
    'CoverageError',
    'DegenerateVarianceError',
    'DegenerateVocabularyError',
    'EmptyInputError',
    'RoundTripError',
    'METRICS',
    'MetricRequest',
    'MetricValue',
    'parse_extras',
    'defaults',
    'templates',
]
