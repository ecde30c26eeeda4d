#
#   Test the cross-component subdivision construction
#
import pandas as pd
import pytest
import flagsphere as fs


@pytest.fixture
def example():
    return fs.example_start()


def test_start():
    s = fs.start([2, 1])
    assert s.expected_alpha == 3
    assert '0:a_1' in s.current and '1:b_1' in s.current
    assert s.original == frozenset(s.current.labels)
    assert s.component_of('1:a_1') == 1
    assert s.steps == ()

    with pytest.raises(fs.InputError):
        fs.start([3])
    with pytest.raises(fs.InputError):
        fs.start([2, 2], labeling='roman')


def test_example_start(example):
    assert example.current.labels == tuple(str(i) for i in range(1, 16))
    assert example.next_label == 21
    assert [sorted(c, key=int) for c in fs.connected_components(example.current)] == [
        [str(i) for i in range(1, 6)],
        [str(i) for i in range(6, 11)],
        [str(i) for i in range(11, 16)],
    ]
    for a, b in [('1', '2'), ('2', '3'), ('3', '4'), ('4', '5'), ('5', '1')]:
        assert example.current.has_edge(a, b)


def test_step(example):
    s = fs.step(example, '1', '6')
    assert '21' in s.current
    assert s.next_label == 22
    assert s.current.has_edge('1', '6')
    assert s.current.neighbors('21') == {'2', '5', '7', '10'}
    assert s.steps[0].degrees == (2, 2)
    assert s.w_edges == ((0, 1),)
    assert s.component_of('21') == 0
    assert '21' not in example.current


def test_step_preconditions(example):
    with pytest.raises(fs.PreconditionError):
        fs.step(example, '1', '3')

    s = fs.step(example, '1', '6')
    with pytest.raises(fs.PreconditionError):
        fs.step(s, '21', '11')
    assert '22' in fs.step(s, '21', '11', mode='component').current

    with pytest.raises(fs.InputError):
        fs.step(s, '1', '99')
    with pytest.raises(fs.InputError):
        fs.step(s, '1', '11', fresh='2')
    with pytest.raises(fs.InputError):
        fs.step(s, '1', '11', mode='anywhere')


def test_explicit_fresh_label(example):
    s = fs.step(example, '1', '6', fresh='40')
    assert s.next_label == 41
    s = fs.step(s, '7', '11')
    assert '41' in s.current


def test_deg_two_step_stays_in_family(example):
    s = fs.step(example, '1', '6')
    report = fs.classify(s, gorenstein=False)
    assert report['planar'] and report['ternary']
    assert report['alpha'] == 6 and report['alpha_preserved']
    assert not report['nonplanarity_predicted']
    assert report['predictor_agrees']
    assert not report['w_is_tree']
    assert report['gorenstein'] == 'skipped: guard'

    components = fs.connected_components(s.current)
    merged = fs.induced_subgraph(s.current, next(c for c in components if '1' in c))
    assert fs.is_isomorphic(merged, fs.build_gm(4))


def test_classify_ignored_coeff(example):
    with pytest.warns(UserWarning):
        report = fs.classify(example, coeff='F3', gorenstein=False)
    assert report['homology_sphere_dim'] == 'skipped: guard'


def test_w_graph_and_predictor(example):
    s = fs.step(fs.step(example, '1', '6'), '7', '11')
    w = fs.w_graph(s)
    assert sorted(w.edges) == [(0, 1), (1, 2)]
    assert s.steps[1].degrees == (3, 2)
    assert fs.nonplanarity_predictor(s)


@pytest.mark.slow
def test_example_classification(example):
    s = fs.step(fs.step(example, '1', '6'), '7', '11')
    report = fs.classify(s)
    assert report['vertices'] == 17
    assert report['alpha'] == 6
    assert report['ternary']
    assert not report['planar']
    assert report['kuratowski']['kind'] in ('K5', 'K3,3')
    assert report['gorenstein'] is True
    assert report['homology_sphere_dim'] == 5
    assert report['dimension_ok'] is True
    assert report['w_is_tree']
    assert report['predictor_agrees']


def test_example_kuratowski_subgraph(example):
    s = fs.step(fs.step(example, '1', '6'), '7', '11')
    local = fs.is_planar(fs.induced_subgraph(s.current, ['6', '7', '8', '9', '10', '21', '22']))
    assert not local
    assert local.kuratowski.kind == 'K3,3'
    assert fs.verify_kuratowski(s.current, local.kuratowski)


def test_namespaced_steps():
    s = fs.start([1, 1, 1])
    s = fs.step(s, '0:a_1', '1:a_1')
    assert s.steps[0].fresh == '1'
    s = fs.step(s, '1:b_1', '2:a_1')
    report = fs.classify(s)
    assert report['alpha'] == 3
    assert report['w_is_tree']
    assert report['gorenstein'] is True
    assert report['homology_sphere_dim'] == 2


def test_random_corpus_is_deterministic():
    first = fs.random_corpus(runs=6, seed=3, max_n=4, gorenstein=False)
    second = fs.random_corpus(runs=6, seed=3, max_n=4, gorenstein=False)
    pd.testing.assert_frame_equal(first.frame, second.frame)
    assert len(first.frame) == 6
    assert first.frame['alpha_preserved'].all()
    assert int(first.contingency.to_numpy().sum()) == 6


def test_random_corpus_modes():
    corpus = fs.random_corpus(runs=4, seed=0, max_n=4, mode='mixed', gorenstein=False)
    assert set(corpus.frame['mode']) <= {'origin', 'component'}
    with pytest.raises(fs.InputError):
        fs.random_corpus(runs=1, mode='sideways')
    with pytest.raises(fs.InputError):
        fs.random_corpus(runs=1, max_n=1)


@pytest.mark.slow
def test_origin_corpus():
    corpus = fs.random_corpus(runs=200, seed=11, max_n=5, gorenstein=True, workers=4)
    frame = corpus.frame
    assert len(frame) == 200
    assert corpus.disagreements == []
    assert frame['predictor_agrees'].all()
    assert (frame['mode'] == 'origin').all()
    assert frame['alpha_preserved'].all()
    assert frame['gorenstein'].dtype == bool
    assert frame['gorenstein'].all()

    table = corpus.contingency
    assert int(table.to_numpy().sum()) == 200
    for (w_is_tree, ternary), count in frame.groupby(['w_is_tree', 'ternary']).size().items():
        assert table.loc[w_is_tree, ternary] == count
