import pytest
import numpy as np
import tokscore as ts


@pytest.fixture(scope='module')
def c():
    c = ts.Constants()
    return c


def test_constants_read_only(c):
    with pytest.raises(AttributeError):
        c.EOW = 'x'

    with pytest.raises(AttributeError):
        c.TOL = 1.

    with pytest.raises(AttributeError):
        c.a = 1


def test_constants_empty_slots(c):
    assert len(c.__slots__) == 0


def test_constants_values(c):
    assert c.EOW == '\ue000'
    assert c.CONT == '@@'
    assert c.SPACE == '\u2581'
    assert c.TOL == 1e-12
    assert c.BOUND_TOL == 1e-9


def test_templates(capsys):
    with pytest.raises(FileNotFoundError):
        ts.templates('fake')

    ts.templates()
    listing = capsys.readouterr().out
    for name in ('analysis', 'bpe', 'metrics'):
        assert name in listing

    ts.templates(0)
    ts.templates('metrics')
    ts.templates('metrics.yaml')
    assert 'renyi_efficiency' in capsys.readouterr().out


def test_defaults():
    metrics = ts.defaults('metrics')
    assert metrics['metric'] == 'renyi_efficiency'
    assert metrics['power'] == 2.5
    assert metrics['perc_start'] == 0.03
    assert metrics['perc_end'] == 0.83

    analysis = ts.defaults('analysis.yaml')
    assert np.isinf(analysis['alpha_grid']['special'][-1])

    bpe = ts.defaults('bpe')
    assert bpe['temperatures'][0] == 'greedy'
    assert bpe['temperatures'][-1] == 'antigreedy'
    assert len(bpe['temperatures']) == 10

    # edits do not leak into later calls
    metrics['power'] = 99.
    assert ts.defaults('metrics')['power'] == 2.5

    with pytest.raises(FileNotFoundError):
        ts.defaults('fake')


def test_request_defaults():
    request = ts.MetricRequest()
    assert request.metric == 'renyi_efficiency'
    assert request.params == {'power': 2.5}

    request = ts.MetricRequest('percentile_freq')
    assert request.params == {'perc_start': 0.03, 'perc_end': 0.83,
                              'perc_step': 0.01}

    request = ts.MetricRequest('renyi_entropy', power=3., base=10)
    assert request.params == {'power': 3., 'base': 10}

    assert ts.MetricRequest('bits').params == {}


def test_request_errors():
    with pytest.raises(ValueError, match='renyi_efficiency'):
        ts.MetricRequest('fake')

    with pytest.raises(ValueError, match='invalid'):
        ts.MetricRequest(alpha=2.)

    with pytest.raises(ValueError):
        ts.MetricRequest(power=-1.)

    with pytest.raises(ValueError):
        ts.MetricRequest('percentile_freq', perc_start=0.9, perc_end=0.1)

    with pytest.raises(ValueError):
        ts.MetricRequest('percentile_freq', perc_end=1.5)

    # start above the packaged end
    with pytest.raises(ValueError):
        ts.MetricRequest('percentile_freq', perc_start=0.9)

    with pytest.raises(ValueError):
        ts.MetricRequest('shannon_entropy', base=1)

    with pytest.raises(ValueError):
        ts.MetricRequest('shannon_entropy', base=2.5)

    with pytest.raises(ValueError):
        ts.MetricRequest('percentile_freq', perc_step=0.)


def test_request_percentile_step():
    corpus = ts.corpus.from_texts(["a b a c d a b e", "f a b g"])
    dist = ts.corpus.unigram_distribution(corpus)

    coarse = ts.MetricRequest('percentile_freq', perc_step=0.1)
    assert coarse.params['perc_step'] == 0.1

    expected = ts.metrics.percentile_freq(dist, 0.03, 0.83, step=0.1)
    assert coarse.compute(corpus).value == pytest.approx(expected)

    fine = ts.MetricRequest('percentile_freq').compute(corpus).value
    assert fine == pytest.approx(
        ts.metrics.percentile_freq(dist, 0.03, 0.83, step=0.01))
    assert fine != pytest.approx(coarse.compute(corpus).value)


def test_request_ignored_param_warns():
    with pytest.warns(UserWarning, match='ignored'):
        request = ts.MetricRequest('shannon_efficiency', power=3.)

    assert request.params == {}


def test_request_compute():
    corpus = ts.corpus.from_texts(["a b a c", "b a"])

    value = ts.MetricRequest('sequence_len').compute(corpus)
    assert isinstance(value, ts.MetricValue)
    assert value.metric == 'sequence_len'
    assert value.value == 3.

    value = ts.MetricRequest('shannon_entropy').compute(corpus)
    p = np.array([3, 2, 1]) / 6
    assert value.value == pytest.approx(-np.sum(p*np.log2(p)))


def test_parse_extras():
    from tokscore._core import parse_extras

    assert parse_extras(None) == {}
    assert parse_extras(['power=3']) == {'power': 3.}
    assert parse_extras(['power=inf'])['power'] == np.inf

    params = parse_extras(['base=10', 'perc_start=0.1'])
    assert params == {'base': 10, 'perc_start': 0.1}
    assert isinstance(params['base'], int)

    with pytest.raises(ValueError):
        parse_extras(['power'])

    with pytest.raises(ValueError):
        parse_extras(['power=abc'])

    with pytest.raises(ValueError):
        parse_extras(['=3'])


def test_coverage_error_message():
    err = ts.CoverageError('x', 'LZW dictionary')

    assert isinstance(err, ValueError)
    assert err.symbol == 'x'
    assert str(err) == "'x' is not covered by the LZW dictionary."
