import itertools

import pytest
import numpy as np
import tokscore as ts

from tokscore.coding import CodeBook
from tokscore.corpus import UnigramDistribution


def random_dist(rng, max_V=50):
    V = int(rng.integers(2, max_V + 1))
    probs = rng.dirichlet(np.full(V, rng.uniform(0.2, 2.)))
    probs = np.maximum(probs, 1e-12)
    return UnigramDistribution(probs / probs.sum())


def random_corpus(rng, max_V=50, max_M=100, max_len=40):
    V = int(rng.integers(1, max_V + 1))
    M = int(rng.integers(1, max_M + 1))
    weights = rng.dirichlet(np.full(V, 0.5)) + 1e-9
    weights /= weights.sum()

    texts = []
    for _ in range(M):
        length = int(rng.integers(1, max_len + 1))
        ids = rng.choice(V, size=length, p=weights)
        texts.append([f"t{i}" for i in ids])

    return ts.corpus.from_texts(texts)


def test_codebook_validation():
    code = CodeBook([1, 2, 2], tokens=['x', 'y', 'z'])

    assert code.base == 2
    assert code.size == len(code) == 3
    assert code.length_of('y') == 2
    assert np.array_equal(code.lengths_for(['z', 'x']), [2, 1])
    assert code.codewords == ('0', '10', '11')

    with pytest.raises(ts.CoverageError, match="'w'"):
        code.length_of('w')

    with pytest.raises(ValueError, match='Kraft'):
        CodeBook([1, 1, 2])

    with pytest.raises(ValueError):
        CodeBook([0, 1])

    with pytest.raises(ValueError):
        CodeBook([1, 1], base=1)

    with pytest.raises(ValueError):
        CodeBook([1, 2], tokens=['x'])

    with pytest.raises(ValueError, match='prefix-free'):
        CodeBook([1, 2], codewords=['0', '01'])

    with pytest.raises(ValueError):
        CodeBook([1, 2], codewords=['0', '12'])

    explicit = CodeBook([1, 2], codewords=['1', '01'])
    assert explicit.codewords == ('1', '01')


def test_float_bases_are_accepted():
    dist = UnigramDistribution([0.4, 0.3, 0.2, 0.1])

    code = ts.coding.huffman_code(dist, 3.)
    assert code.base == 3
    assert np.array_equal(code.lengths, [1, 1, 2, 2])

    assert np.array_equal(ts.coding.uniform_code(5, 2.).lengths, [3]*5)
    assert np.array_equal(ts.coding.campbell_lengths(dist, 2., 2.).lengths,
                          ts.coding.campbell_lengths(dist, 2., 2).lengths)

    with pytest.raises(ValueError):
        ts.coding.huffman_code(dist, 2.5)


def test_huffman_examples():
    dyadic = UnigramDistribution([0.5, 0.25, 0.25])
    code = ts.coding.huffman_code(dyadic)

    assert np.array_equal(code.lengths, [1, 2, 2])
    assert ts.coding.expected_code_length(dyadic, code) == 1.5
    assert ts.coding.is_prefix_free(code.codewords)

    single = UnigramDistribution([1.])
    assert np.array_equal(ts.coding.huffman_code(single).lengths, [1])

    uniform = UnigramDistribution(np.full(4, 0.25))
    assert np.array_equal(ts.coding.huffman_code(uniform).lengths,
                          [2, 2, 2, 2])


def test_huffman_ternary_padding():
    dist = UnigramDistribution([0.4, 0.3, 0.2, 0.1])
    code = ts.coding.huffman_code(dist, 3)

    assert np.array_equal(code.lengths, [1, 1, 2, 2])
    assert ts.coding.kraft_sum(code) <= 1.
    assert ts.coding.is_prefix_free(code.codewords)
    assert set(''.join(code.codewords)) <= set('012')

    uniform = UnigramDistribution(np.full(3, 1/3))
    assert np.array_equal(ts.coding.huffman_code(uniform, 3).lengths,
                          [1, 1, 1])


def test_huffman_deterministic_ties():
    dist = UnigramDistribution(np.full(5, 0.2))

    first = ts.coding.huffman_code(dist)
    second = ts.coding.huffman_code(dist)

    assert np.array_equal(first.lengths, second.lengths)
    assert first.codewords == second.codewords
    assert sorted(first.lengths) == [2, 2, 2, 3, 3]


def test_huffman_source_coding_bounds():
    rng = np.random.default_rng(0)

    for _ in range(300):
        dist = random_dist(rng)
        for b in (2, 3, 4):
            code = ts.coding.huffman_code(dist, b)
            H = ts.metrics.shannon_entropy(dist, b)
            E = ts.coding.expected_code_length(dist, code)

            assert H - 1e-9 <= E <= H + 1. + 1e-9
            assert ts.coding.kraft_sum(code) <= 1. + 1e-12
            assert ts.coding.is_prefix_free(code.codewords)


@pytest.mark.parametrize('V', [2, 3, 4, 5, 6, 7])
def test_huffman_matches_brute_force(V):
    rng = np.random.default_rng(V)

    candidates = np.array(list(itertools.product(range(1, V), repeat=V)),
                          dtype=np.int64)
    feasible = np.sum(2.**-candidates, axis=1) <= 1. + 1e-12
    candidates = candidates[feasible]

    for _ in range(80):
        probs = rng.dirichlet(np.ones(V))
        dist = UnigramDistribution(probs / probs.sum())

        E = ts.coding.expected_code_length(dist, ts.coding.huffman_code(dist))
        best = np.min(candidates @ dist.probs)

        assert E <= best + 1e-12


def test_huffman_dyadic_equality():
    for lengths in ([1, 2, 3, 3], [2, 2, 2, 3, 4, 4], [1, 3, 3, 3, 4, 4]):
        probs = 2.**-np.array(lengths)
        dist = UnigramDistribution(probs)

        code = ts.coding.huffman_code(dist)
        E = ts.coding.expected_code_length(dist, code)

        assert E == pytest.approx(ts.metrics.shannon_entropy(dist), abs=1e-12)


def test_uniform_code():
    assert np.all(ts.coding.uniform_code(6).lengths == 3)
    assert np.all(ts.coding.uniform_code(4).lengths == 2)
    assert np.all(ts.coding.uniform_code(5, 3).lengths == 2)
    assert np.all(ts.coding.uniform_code(1).lengths == 1)

    assert ts.coding.kraft_sum(ts.coding.uniform_code(6)) == 0.75
    assert ts.coding.is_prefix_free(ts.coding.uniform_code(6).codewords)

    code = ts.coding.uniform_code(2, tokens=['x', 'y'])
    assert code.tokens == ('x', 'y')

    with pytest.raises(ValueError):
        ts.coding.uniform_code(0)


def test_campbell_examples():
    uniform = UnigramDistribution(np.full(4, 0.25))
    for alpha in (0.5, 1., 2., 3.):
        code = ts.coding.campbell_lengths(uniform, alpha)
        assert np.array_equal(code.lengths, [2, 2, 2, 2])

    dyadic = UnigramDistribution([0.5, 0.25, 0.25])
    code = ts.coding.campbell_lengths(dyadic, 1.)
    assert np.array_equal(code.lengths, [1, 2, 2])

    dist = UnigramDistribution([0.75, 0.25])
    code = ts.coding.campbell_lengths(dist, 2.)
    assert np.array_equal(code.lengths, [1, 4])

    for alpha in (0., np.inf, -1.):
        with pytest.raises(ValueError):
            ts.coding.campbell_lengths(dist, alpha)


def test_campbell_bounds():
    rng = np.random.default_rng(1)

    for _ in range(300):
        dist = random_dist(rng)
        for alpha in (0.5, 1., 2., 3.):
            code = ts.coding.campbell_lengths(dist, alpha)
            s = 1. / alpha - 1.

            H_alpha = ts.metrics.renyi_entropy(dist, alpha)
            L_s = ts.coding.discounted_code_length(dist, code, s)

            assert ts.coding.kraft_sum(code) <= 1. + 1e-12
            assert H_alpha - 1e-9 <= L_s < H_alpha + 1. + 1e-9


def test_expected_code_length():
    uniform = UnigramDistribution(np.full(4, 0.25))
    code = ts.coding.uniform_code(4)
    assert ts.coding.expected_code_length(uniform, code) == 2.

    dist = UnigramDistribution([0.2, 0.3, 0.5])
    constant = CodeBook([3, 3, 3])
    assert ts.coding.expected_code_length(dist, constant) \
        == pytest.approx(3.)

    named = UnigramDistribution([0.5, 0.5], tokens=['a', 'q'])
    with pytest.raises(ts.CoverageError, match="'q'"):
        ts.coding.expected_code_length(named, CodeBook([1, 1], tokens=['a',
                                                                       'b']))


def test_discounted_code_length():
    dist = UnigramDistribution([0.5, 0.5])
    code = CodeBook([1, 3])

    assert ts.coding.discounted_code_length(dist, code, 1.) \
        == pytest.approx(np.log2(5.))
    assert ts.coding.discounted_code_length(dist, code, 1.) \
        == pytest.approx(2.321928, abs=1e-6)

    assert ts.coding.discounted_code_length(dist, code, 0.) == 2.
    assert ts.coding.discounted_code_length(dist, code, np.inf) == 3.

    for s in (-1., -2., np.nan):
        with pytest.raises(ValueError):
            ts.coding.discounted_code_length(dist, code, s)


def test_discounted_length_monotone_in_s():
    rng = np.random.default_rng(2)
    grid = [-0.9, -0.5, -0.1, 0., 0.1, 0.5, 1., 3., 10., np.inf]

    for _ in range(200):
        dist = random_dist(rng, max_V=20)
        code = ts.coding.huffman_code(dist)

        values = [ts.coding.discounted_code_length(dist, code, s)
                  for s in grid]

        assert np.all(np.diff(values) >= -1e-9)


def test_kraft_sum():
    assert ts.coding.kraft_sum(CodeBook([1, 2, 2])) == 1.
    assert ts.coding.kraft_sum(CodeBook([2, 2])) == 0.5
    assert ts.coding.kraft_sum(CodeBook([1, 1, 1], base=3)) == \
        pytest.approx(1.)


def test_is_prefix_free():
    assert ts.coding.is_prefix_free(['0', '10', '11'])
    assert not ts.coding.is_prefix_free(['0', '01'])
    assert not ts.coding.is_prefix_free(['1', '1'])
    assert ts.coding.is_prefix_free([])


def test_corpus_code_length_and_covariance():
    corpus = ts.corpus.from_texts(["a b", "a"])
    code = CodeBook([1, 3], tokens=['a', 'b'])
    assert ts.coding.corpus_code_length(corpus, code) == 2.5

    corpus = ts.corpus.from_texts(["a b c d e f g"])
    code = ts.coding.uniform_code(4, tokens=list('abcd'))
    with pytest.raises(ts.CoverageError):
        ts.coding.corpus_code_length(corpus, code)

    code = ts.coding.uniform_code(7, tokens=list('abcdefg'))
    assert ts.coding.corpus_code_length(corpus, code) == 21.
    assert ts.coding.covariance_term(corpus, code) == 0.

    corpus = ts.corpus.from_texts(["a", "b b"])
    code = CodeBook([1, 2], tokens=['a', 'b'])
    assert ts.coding.covariance_term(corpus, code) == pytest.approx(0.25)

    corpus = ts.corpus.from_texts(["a b", "b b", "a a"])
    code = CodeBook([1, 2], tokens=['a', 'b'])
    assert ts.coding.covariance_term(corpus, code) == 0.

    corpus = ts.corpus.from_texts(["a", "b b b", "a b"])
    code = CodeBook([2, 2], tokens=['a', 'b'])
    assert ts.coding.covariance_term(corpus, code) == 0.


def test_verify_bounds_random_corpora():
    rng = np.random.default_rng(3)

    for _ in range(200):
        corpus = random_corpus(rng)
        for alpha in (0.5, 1., 2., 3.):
            report = ts.coding.verify_bounds(corpus, alpha)

            assert report.lemma_holds
            assert abs(report.lemma_residual) < 1e-9
            assert report.source_coding_holds
            assert report.campbell_holds
            assert report.passed


def test_verify_bounds_dyadic_and_single():
    corpus = ts.corpus.from_texts(["a a a a b b c d"])
    report = ts.coding.verify_bounds(corpus)

    assert report.entropy == pytest.approx(1.75)
    assert report.middle == pytest.approx(report.entropy, abs=1e-9)
    assert report.covariance == 0.
    assert report.passed

    corpus = ts.corpus.from_texts(["x x", "x"])
    report = ts.coding.verify_bounds(corpus)

    assert report.entropy == 0.
    assert 0. <= report.middle <= 1.
    assert report.passed

    with pytest.raises(ValueError):
        ts.coding.verify_bounds(corpus, alpha=0.)

    with pytest.raises(ValueError):
        ts.coding.verify_bounds(corpus, alpha=np.inf)


def test_verify_bounds_shannon_limit():
    rng = np.random.default_rng(4)
    corpus = random_corpus(rng)

    report = ts.coding.verify_bounds(corpus, alpha=1.)

    assert report.discount == 0.
    assert report.renyi_entropy == pytest.approx(report.entropy, abs=1e-9)
    assert report.discounted_length \
        == pytest.approx(report.expected_code_length, abs=1e-9)


def test_skewed_source_exceeds_ceiling():
    counts = {'a': 1998, 'b': 1, 'c': 1}
    text = ' '.join(t for t, n in counts.items() for _ in range(n))
    corpus = ts.corpus.from_texts([text])

    report = ts.coding.verify_bounds(corpus)

    assert report.ceil_entropy == 1
    assert report.middle > 1.
    assert not report.within_ceil_entropy
    assert report.passed


def test_bound_report_text():
    corpus = ts.corpus.from_texts(["a b a", "c"])
    text = ts.coding.verify_bounds(corpus, 2.).to_text()

    lines = text.splitlines()
    fields = dict(line.split('\t') for line in lines)

    assert text.endswith('\n')
    assert lines[-1] == 'passed\ttrue'
    assert fields['alpha'] == '2.0'
    assert fields['base'] == '2'
    assert fields['lemma_holds'] == 'true'
    assert float(fields['lower']) <= float(fields['middle'])


def test_efficiency_bounds():
    rng = np.random.default_rng(5)

    for _ in range(50):
        corpus = random_corpus(rng)
        bounds = ts.coding.efficiency_bounds(corpus)

        assert bounds.lower - 1e-9 <= bounds.value <= bounds.upper + 1e-9

    corpus = ts.corpus.from_texts(["a b c d", "d c b a"])
    bounds = ts.coding.efficiency_bounds(corpus)
    assert bounds.value == pytest.approx(1.)
