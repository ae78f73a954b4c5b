import dataclasses

import pytest
import pandas as pd
import tokscore as ts

from tokscore.cli import main

TEXT1 = "pick @@ed pick @@l @@ed pick @@les"
TEXT2 = "pick @@e @@d pick @@e @@l @@s pick @@e @@d @@l"

RAW = [
    "the cat sat on the mat",
    "the cat ate the rat",
    "a bat and a cat sat at the hat stand",
    "that rat ran past the fat cat",
]


@pytest.fixture
def raw_file(tmp_path):
    path = tmp_path / 'raw.txt'
    path.write_text('\n'.join(RAW) + '\n', encoding='utf-8')
    return path


def write(path, text):
    path.write_text(text, encoding='utf-8')
    return str(path)


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(['score']) == 2
    assert main(['score', '-i', 'x.txt', '-m', 'fake']) == 2

    assert main(['--help']) == 0
    assert 'score' in capsys.readouterr().out


def test_score_anchors(tmp_path, capsys):
    first = write(tmp_path / 'one.txt', TEXT1 + '\n')
    second = write(tmp_path / 'two.txt', TEXT2 + '\n')

    assert main(['score', '-i', first, '-e', 'power=3']) == 0
    value = float(capsys.readouterr().out)
    assert value == pytest.approx(0.8031528501359657, abs=1e-12)

    assert main(['score', '-i', second, '-m', 'renyi_efficiency',
                 '-e', 'power=3']) == 0
    value = float(capsys.readouterr().out)
    assert value == pytest.approx(0.9105681923824472, abs=1e-12)

    assert main(['score', '-i', first, '-m', 'sequence_len']) == 0
    assert capsys.readouterr().out.strip() == '7.0'


def test_score_matches_library(tmp_path, capsys):
    path = write(tmp_path / 'corpus.txt', "a b a\n\nb c\na a a a c\n")
    corpus = ts.corpus.load_tokenized(path)

    for weighting in ('token', 'text'):
        assert main(['score', '-i', path, '-m', 'shannon_entropy',
                     '--weighting', weighting, '--base', '10']) == 0

        expected = ts.score(corpus, 'shannon_entropy', base=10,
                            weighting=weighting)
        assert float(capsys.readouterr().out) == expected


def test_score_errors(tmp_path, capsys):
    missing = str(tmp_path / 'missing.txt')
    assert main(['score', '-i', missing]) == 1
    assert 'tokscore: error:' in capsys.readouterr().err

    empty = write(tmp_path / 'empty.txt', '\n\n')
    assert main(['score', '-i', empty]) == 1

    single = write(tmp_path / 'single.txt', 'x x x\n')
    assert main(['score', '-i', single]) == 2
    capsys.readouterr()

    path = write(tmp_path / 'ok.txt', TEXT1 + '\n')
    assert main(['score', '-i', path, '-e', 'power=abc']) == 2
    assert main(['score', '-i', path, '-e', 'alpha=2']) == 2


def test_train_bpe_deterministic(tmp_path, raw_file, capsys):
    first = tmp_path / 'first.model'
    second = tmp_path / 'second.model'

    args = ['train-bpe', '--input', str(raw_file), '--vocab-size', '30',
            '--temperature', '0.5', '--seed', '3']

    assert main(args + ['--model-out', str(first)]) == 0
    size = int(capsys.readouterr().out)
    assert main(args + ['--model-out', str(second)]) == 0

    assert first.read_bytes() == second.read_bytes()

    model = ts.tokenizers.load_model(first)
    assert model.temperature == 0.5
    assert model.seed == 3
    assert size <= 30

    assert main(['train-bpe', '--input', str(raw_file), '--vocab-size', '30',
                 '--temperature', '0', '--model-out', str(first)]) == 2


def test_apply_bpe_round_trip(tmp_path, raw_file, capsys):
    model = str(tmp_path / 'bpe.model')
    tokens = tmp_path / 'tokens.txt'
    restored = tmp_path / 'restored.txt'

    assert main(['train-bpe', '--input', str(raw_file), '--vocab-size', '30',
                 '--model-out', model]) == 0

    assert main(['apply', '--model', model, '--input', str(raw_file),
                 '--output', str(tokens)]) == 0
    assert main(['apply', '--model', model, '--input', str(tokens),
                 '--output', str(restored), '--detokenize']) == 0

    assert restored.read_text(encoding='utf-8').splitlines() == RAW

    # tokenized output is itself scoreable
    capsys.readouterr()
    assert main(['score', '-i', str(tokens), '-m', 'sequence_len']) == 0
    assert float(capsys.readouterr().out) >= 4.


def test_apply_lzw(tmp_path, raw_file, capsys):
    model = str(tmp_path / 'lzw.model')

    assert main(['train-lzw', '--input', str(raw_file), '--vocab-size', '60',
                 '--model-out', model]) == 0
    assert int(capsys.readouterr().out) <= 60

    assert main(['apply', '--model', model, '--input', str(raw_file)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == len(RAW)

    tokens = write(tmp_path / 'tokens.txt', '\n'.join(lines) + '\n')
    assert main(['apply', '--model', model, '--input', tokens,
                 '--detokenize']) == 0
    assert capsys.readouterr().out.splitlines() == RAW

    uncovered = write(tmp_path / 'new.txt', "the cat\nthe dog\n")
    assert main(['apply', '--model', model, '--input', uncovered]) == 1

    err = capsys.readouterr().err
    assert "'g' is not covered" in err
    assert 'line 2' in err


def test_apply_errors(tmp_path, capsys):
    bad = write(tmp_path / 'bad.model', "not a model\n")
    raw = write(tmp_path / 'raw.txt', "abc\n")

    assert main(['apply', '--model', bad, '--input', raw]) == 2
    assert main(['apply', '--model', str(tmp_path / 'none.model'),
                 '--input', raw]) == 1


def test_verify_bounds(tmp_path, capsys):
    path = write(tmp_path / 'corpus.txt', f"{TEXT1}\n{TEXT2}\n")

    assert main(['verify-bounds', '-i', path]) == 0

    fields = dict(line.split('\t')
                  for line in capsys.readouterr().out.splitlines())
    assert fields['passed'] == 'true'
    assert fields['alpha'] == '2.5'

    assert main(['verify-bounds', '-i', path, '--alpha', '1',
                 '--base', '3']) == 0
    assert 'base\t3' in capsys.readouterr().out

    assert main(['verify-bounds', '-i', path, '--alpha', '0']) == 2


def test_verify_bounds_failure(tmp_path, capsys, monkeypatch):
    real = ts.coding.verify_bounds

    def broken(*args, **kwargs):
        return dataclasses.replace(real(*args, **kwargs), lemma_holds=False)

    monkeypatch.setattr(ts.coding, 'verify_bounds', broken)

    path = write(tmp_path / 'corpus.txt', TEXT1 + '\n')
    assert main(['verify-bounds', '-i', path]) == 3
    assert 'passed\tfalse' in capsys.readouterr().out


@pytest.fixture
def table_file(tmp_path):
    texts = ["a b c d", "a a b c", "a a a b", "a a a a b c d e",
             "a b b c c d", "a a b b c c"]

    rows = []
    for i, text in enumerate(texts):
        corpus = tmp_path / f"run{i}.txt"
        corpus.write_text(text + '\n', encoding='utf-8')

        dist = ts.corpus.unigram_distribution(ts.corpus.from_texts([text]))
        rows.append({'run': f"run{i}", 'group': 'bpe', 'corpus': corpus.name,
                     'size': len(set(text.split())),
                     'performance': ts.metrics.percentile_freq(dist)
                     + 0.1*i})

    path = tmp_path / 'table.tsv'
    pd.DataFrame(rows).to_csv(path, sep='\t', index=False)

    return path


def test_correlate(table_file, tmp_path, capsys):
    assert main(['correlate', '--table', str(table_file)]) == 0

    out = capsys.readouterr().out
    lines = out.splitlines()

    assert lines[0] == 'predictor\tmethod\tcoefficient\tpvalue\tr2\tn'
    assert len(lines) == 3

    frame = ts.analysis.read_plot_table(out)
    assert set(frame['method']) == {'pearson', 'spearman'}

    output = tmp_path / 'correlations.tsv'
    assert main(['correlate', '--table', str(table_file), '--predictor',
                 'size', '--output', str(output)]) == 0
    assert output.read_text(encoding='utf-8') == out

    assert main(['correlate', '--table', str(table_file), '--predictor',
                 'fake']) == 2
    assert main(['correlate', '--table', str(tmp_path / 'none.tsv')]) == 1


def test_grid_search(table_file, capsys):
    assert main(['grid-search', '--table', str(table_file)]) == 0

    captured = capsys.readouterr()
    frame = ts.analysis.read_plot_table(captured.out)

    assert len(frame) == 52
    assert 'best alpha=' in captured.err

    assert main(['grid-search', '--table', str(table_file), '--grid',
                 'percentile', '--step', '0.25', '--weighting', 'text']) == 0

    captured = capsys.readouterr()
    frame = ts.analysis.read_plot_table(captured.out)

    assert list(frame.columns) == ['gamma1', 'gamma2', 'pearson']
    assert len(frame) == 15
    assert 'best gamma1=' in captured.err

    assert main(['grid-search', '--table', str(table_file),
                 '--holdout']) == 0
    assert 'holdout r=' in capsys.readouterr().err


def test_templates_command(capsys):
    assert main(['templates']) == 0
    assert 'metrics' in capsys.readouterr().out

    assert main(['templates', 'bpe']) == 0
    assert 'antigreedy' in capsys.readouterr().out

    assert main(['templates', 'fake']) == 1


def test_cli_worked_examples(tmp_path, capsys):
    uniform = write(tmp_path / 'uniform.txt', "a b c d\nd c b a\n")
    assert main(['score', '-i', uniform, '-m', 'shannon_efficiency']) == 0
    assert float(capsys.readouterr().out) == pytest.approx(1.)

    raw = write(tmp_path / 'abab.txt', "abab abab\n")
    model = tmp_path / 'abab.model'

    assert main(['train-bpe', '--input', raw, '--vocab-size', '6',
                 '--temperature', 'greedy', '--model-out', str(model)]) == 0
    assert capsys.readouterr().out.strip() == '6'
    assert model.read_text(encoding='utf-8').splitlines()[1] == 'a\tb'

    table = tmp_path / 'linear.tsv'
    pd.DataFrame({'run': ['a', 'b', 'c', 'd', 'e'], 'group': ['g']*5,
                  'x': [1., 2., 3., 4., 5.],
                  'performance': [2., 4., 6., 8., 10.]}).to_csv(
                      table, sep='\t', index=False)

    assert main(['correlate', '--table', str(table)]) == 0
    frame = ts.analysis.read_plot_table(capsys.readouterr().out)

    pearson = frame[frame['method'] == 'pearson'].iloc[0]
    assert pearson['coefficient'] == pytest.approx(1.)
    assert pearson['pvalue'] < 0.001


@pytest.mark.parametrize('kind', ['bpe', 'lzw'])
def test_apply_keeps_whitespace(tmp_path, kind):
    raw = b"the  cat sat\n the dog\t\nthe rat \r\n\n"
    source = tmp_path / 'source.txt'
    source.write_bytes(raw)

    model = str(tmp_path / f'{kind}.model')
    tokens = tmp_path / 'tokens.txt'
    restored = tmp_path / 'restored.txt'

    assert main([f'train-{kind}', '--input', str(source), '--vocab-size',
                 '40', '--model-out', model]) == 0

    assert main(['apply', '--model', model, '--input', str(source),
                 '--output', str(tokens)]) == 0
    assert main(['apply', '--model', model, '--input', str(tokens),
                 '--output', str(restored), '--detokenize']) == 0

    assert restored.read_bytes() == raw
    assert b'\t' not in tokens.read_bytes()
    assert len(tokens.read_bytes().split(b'\n')) == 5


def test_invalid_utf8_is_an_io_error(tmp_path, capsys):
    bad = tmp_path / 'bad.txt'
    bad.write_bytes(b"a \xff b\n")

    assert main(['score', '-i', str(bad)]) == 1
    assert 'utf-8' in capsys.readouterr().err

    assert main(['train-bpe', '--input', str(bad), '--vocab-size', '10',
                 '--model-out', str(tmp_path / 'm.model')]) == 1
