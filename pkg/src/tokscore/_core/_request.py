from __future__ import annotations
from typing import TYPE_CHECKING

import math
from dataclasses import dataclass, field

if TYPE_CHECKING:  # pragma: no cover
    from tokscore.corpus import TokenizedCorpus

METRICS = (
    'renyi_efficiency',
    'renyi_entropy',
    'shannon_efficiency',
    'shannon_entropy',
    'percentile_freq',
    'bits',
    'sequence_len',
)

_USES = {
    'renyi_efficiency': ('power',),
    'renyi_entropy': ('power', 'base'),
    'shannon_efficiency': (),
    'shannon_entropy': ('base',),
    'percentile_freq': ('perc_start', 'perc_end', 'perc_step'),
    'bits': (),
    'sequence_len': (),
}


@dataclass(frozen=True)
class MetricValue:
    """A computed metric with the parameters that produced it."""

    value: float
    metric: str
    params: dict = field(default_factory=dict)


class MetricRequest:
    """Metric request builder."""

    __slots__ = ('_metric', '_params',)

    def __init__(self, metric: str = None, **params) -> None:
        """
        A validated request for one of the scalar tokenization metrics.
        Missing parameters are filled from the packaged ``metrics`` template.

        Parameters
        ----------
        metric : str, optional
            Metric name, see ``tokscore.METRICS``. The default is None, which
            uses the packaged default ('renyi_efficiency').
        **params : dict, optional
            Metric parameters: 'power' (Renyi order, >= 0 or inf),
            'perc_start' and 'perc_end' (percentile interval in [0, 1]),
            'perc_step' (percentile grid spacing in (0, 1]), and 'base'
            (integer logarithm base >= 2).

        Raises
        ------
        ValueError
            'metric' is invalid.
        ValueError
            A parameter name is invalid or its value is out of range.

        """

        from ._templates import defaults
        from .._utils import short_warn

        config = defaults('metrics')
        metric = config['metric'] if metric is None else metric

        _check_metric(metric)
        _check_params(params)

        for name in params:
            if name not in _USES[metric]:
                short_warn(f"Parameter '{name}' is ignored by {metric=}.")

        merged = {k: config[k] for k in ('power', 'perc_start', 'perc_end',
                                          'perc_step', 'base')}
        merged.update(params)
        _check_params(merged)

        self._metric = metric
        self._params = {k: merged[k] for k in _USES[metric]}

    def __repr__(self) -> str:  # pragma: no cover
        args = ", ".join(f"{k}={v!r}" for k, v in self._params.items())
        return f"MetricRequest({self._metric!r}, {args})".replace(', )', ')')

    @property
    def metric(self) -> str:
        """Metric name."""
        return self._metric

    @property
    def params(self) -> dict:
        """Parameters used by the metric (copy)."""
        return dict(self._params)

    def compute(self, corpus: TokenizedCorpus,
                weighting: str = 'token') -> MetricValue:
        """
        Evaluate the requested metric on a corpus.

        Parameters
        ----------
        corpus : TokenizedCorpus
            Tokenized corpus to score.
        weighting : {'token', 'text'}, optional
            Unigram estimator passed to ``unigram_distribution``. The default
            is 'token' (pooled counts).

        Returns
        -------
        :class:`MetricValue`
            The metric value, name, and parameters.

        """

        from tokscore import metrics
        from tokscore.corpus import unigram_distribution

        p = self._params
        name = self._metric

        if name == 'bits':
            value = metrics.bits(corpus)
        elif name == 'sequence_len':
            value = metrics.sequence_len(corpus)
        else:
            dist = unigram_distribution(corpus, weighting=weighting)

            if name == 'renyi_efficiency':
                value = metrics.renyi_efficiency(dist, p['power'])
            elif name == 'renyi_entropy':
                value = metrics.renyi_entropy(dist, p['power'], p['base'])
            elif name == 'shannon_efficiency':
                value = metrics.shannon_efficiency(dist)
            elif name == 'shannon_entropy':
                value = metrics.shannon_entropy(dist, p['base'])
            else:
                value = metrics.percentile_freq(dist, p['perc_start'],
                                                p['perc_end'], p['perc_step'])

        return MetricValue(float(value), name, self.params)


def parse_extras(extras: list[str] | None) -> dict:
    """
    Parse ``name=number`` strings into a parameter dictionary.

    Parameters
    ----------
    extras : list[str] | None
        Items like ``'power=2.5'``. The literal values 'inf' and 'infinity'
        are accepted for 'power'. Integer-valued 'base' stays an int.

    Returns
    -------
    params : dict
        Parsed parameters.

    Raises
    ------
    ValueError
        An item is not of the form ``name=number``.

    """

    params = {}
    for item in extras or []:
        name, sep, text = item.partition('=')
        if not sep or not name:
            raise ValueError(f"Extra '{item}' must look like name=number.")

        try:
            value = float(text)
        except ValueError:
            raise ValueError(f"Extra '{item}' must look like name=number.")

        if name == 'base' and value.is_integer():
            value = int(value)

        params[name] = value

    return params


def _check_metric(metric: str) -> None:
    """
    Check the metric name.

    Parameters
    ----------
    metric : str
        Metric name.

    Returns
    -------
    None.

    Raises
    ------
    ValueError
        'metric' is invalid.

    """

    if metric not in METRICS:
        raise ValueError(f"{metric=} is invalid; valid values are"
                         f" {list(METRICS)}.")


def _check_params(params: dict) -> None:
    """
    Check metric parameter names and ranges.

    Parameters
    ----------
    params : dict
        Parameter names and values. Only present keys are checked.

    Returns
    -------
    None.

    Raises
    ------
    ValueError
        A parameter name is invalid.
    ValueError
        'power' is negative or nan.
    ValueError
        'perc_start' and 'perc_end' are outside 0 <= start <= end <= 1.
    ValueError
        'perc_step' is outside (0, 1].
    ValueError
        'base' is not an integer >= 2.

    """

    valid = ['power', 'perc_start', 'perc_end', 'perc_step', 'base']

    for name in params:
        if name not in valid:
            raise ValueError(f"The parameter name '{name}' is invalid; valid"
                             f" values are {valid}.")

    if 'power' in params:
        power = params['power']
        if math.isnan(power) or power < 0.:
            raise ValueError(f"'power' must be >= 0 or inf, got {power}.")

    start = params.get('perc_start', 0.)
    end = params.get('perc_end', 1.)
    if not 0. <= start <= 1. or not 0. <= end <= 1.:
        raise ValueError("'perc_start' and 'perc_end' must be in [0, 1].")
    elif 'perc_start' in params and 'perc_end' in params and start > end:
        raise ValueError(f"'perc_start' ({start}) cannot exceed 'perc_end'"
                         f" ({end}).")

    if 'perc_step' in params:
        step = params['perc_step']
        if not 0. < step <= 1.:
            raise ValueError(f"'perc_step' must be in (0, 1], got {step}.")

    if 'base' in params:
        base = params['base']
        if int(base) != base or base < 2:
            raise ValueError(f"'base' must be an integer >= 2, got {base}.")
