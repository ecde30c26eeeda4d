#
#   Test the partition refinement graph and the edge subdivision graph of unions of G_m
#
import json
import pytest
import flagsphere as fs

PARTITION_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11}


def test_partition():
    p = fs.Partition.parse('2+1+1')
    assert p == (2, 1, 1)
    assert p.n == 4
    assert str(p) == '2+1+1'
    assert p.merge(1, 2) == fs.Partition([2, 2])
    assert p.merge(0, 1) == fs.Partition([3, 1])
    assert p.coarsenings() == {fs.Partition([3, 1]): (2, 1), fs.Partition([2, 2]): (1, 1)}


@pytest.mark.parametrize('parts', [[], [0, 1], [1, 2]])
def test_invalid_partition(parts):
    with pytest.raises(fs.InputError):
        fs.Partition(parts)


def test_invalid_partition_text():
    with pytest.raises(fs.InputError):
        fs.Partition.parse('2+x')
    with pytest.raises(fs.InputError):
        fs.Partition([2, 1]).merge(0, 0)


@pytest.mark.parametrize('n, count', PARTITION_COUNTS.items())
def test_partitions(n, count):
    parts = fs.partitions(n)
    assert len(parts) == count
    assert parts[0] == (n,)
    assert parts[-1] == (1,) * n
    assert parts == sorted(parts, reverse=True)


def test_refinement_graph():
    p4 = fs.refinement_graph(4)
    assert sorted(p4.names()) == ['1+1+1+1', '2+1+1', '2+2', '3+1', '4']
    assert p4.named_edges() == [
        ('1+1+1+1', '2+1+1'),
        ('2+1+1', '2+2'),
        ('2+1+1', '3+1'),
        ('2+2', '4'),
        ('3+1', '4'),
    ]
    assert p4.graph.edges[fs.Partition([2, 2]), fs.Partition([4])]['move'] == {'merged': [2, 2], 'label': '2+2'}


def test_gm_union():
    g = fs.gm_union(fs.Partition([2, 1]))
    assert len(g) == 7
    assert len(fs.connected_components(g)) == 2
    assert '1:a_1' in g


@pytest.mark.parametrize('n', range(1, 5))
def test_build_H(n):
    h = fs.build_H(n)
    assert h.number_of_vertices() == PARTITION_COUNTS[n]
    assert h.name == f'H_{n - 1}'
    assert all(a.components[0] != a.components[1] for a in h.attempts)
    assert all(max(a.degrees) <= 2 for a in h.attempts)
    for u, v in h.graph.edges:
        move = h.graph.edges[u, v]['move']
        assert move['new'] == 'new'
        coarse = min(fs.Partition.parse(h.name_of(u)), fs.Partition.parse(h.name_of(v)), key=len)
        assert sorted(move['isomorphism'].values()) == sorted(fs.gm_union(coarse).labels)
        assert set(move['subdivided']) < set(move['isomorphism'])


def test_build_H_accepts_only_expected_merges():
    h = fs.build_H(3)
    accepted = [a for a in h.attempts if a.accepted]
    assert accepted
    for a in accepted:
        assert a.planar and a.ternary
        assert a.target == a.source.merge(*a.components)


def test_build_H_bound():
    with pytest.raises(fs.InputError):
        fs.build_H(7)
    with pytest.raises(fs.InputError):
        fs.verify_iso_H_P(0)


@pytest.mark.parametrize('n', range(1, 6))
def test_verify_iso(n):
    result = fs.verify_iso_H_P(n)
    assert result
    assert result.degree_sequences_match
    assert len(result.matching) == PARTITION_COUNTS[n]


@pytest.mark.parametrize('n', range(1, 6))
def test_component_pairs_land_in_one_class(n):
    h = fs.build_H(n)
    classes = {}
    for a in h.attempts:
        assert a.reason not in ('unmatched', 'no isomorphism witness')
        pair = (a.source, tuple(sorted(a.components)))
        classes.setdefault(pair, set())
        if a.planar and a.ternary:
            classes[pair].add(a.target)

    for (lam, (i, j)), targets in classes.items():
        assert targets == {lam.merge(i, j)}

    expected_pairs = sum(len(lam) * (len(lam) - 1) // 2 for lam in fs.partitions(n))
    assert len(classes) == expected_pairs

    result = fs.verify_iso_H_P(n, h_graph=h)
    assert len(set(result.matching.values())) == len(result.matching) == PARTITION_COUNTS[n]


def test_verify_iso_edges():
    result = fs.verify_iso_H_P(4)
    assert list(result.edges) == fs.refinement_graph(4).named_edges()
    assert result.matching['2+1+1'] == 'G_2 + G_1 + G_1'


@pytest.mark.slow
def test_verify_iso_six_with_workers():
    result = fs.verify_iso_H_P(6, workers=2)
    assert result
    assert len(result.matching) == 11


def test_flip_graph_serialization():
    h = fs.build_H(2)
    data = json.loads(h.to_json())
    assert data['name'] == 'H_1'
    assert sorted(data['vertices']) == ['1+1', '2']
    assert len(data['edges']) == 1
    assert data['edges'][0]['move']['label'] == '1+1'

    dot = h.to_dot()
    assert dot.startswith('graph "H_1" {')
    assert '"1+1" -- "2"' in dot or '"2" -- "1+1"' in dot


def test_same_component_subdivisions_are_not_ternary():
    attempts = fs.same_component_subdivisions([2, 1])
    assert attempts
    assert all(not a.accepted for a in attempts)
    assert all(not a.ternary for a in attempts)


def test_component_alpha_after_merge():
    g = fs.gm_union(fs.Partition([2, 1]))
    assert fs.component_alpha_after_merge(g, '0:a_1', '1:a_1') == 3
    with pytest.raises(fs.InputError):
        fs.component_alpha_after_merge(g, '0:a_1', '0:b_2')
