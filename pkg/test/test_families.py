#
#   Test the G_m family and the other named graphs
#
import pytest
import flagsphere as fs


@pytest.mark.parametrize('m', range(1, 7))
def test_gm_shape(m):
    g = fs.build_gm(m)
    assert len(g) == 3 * m - 1
    assert g.number_of_edges == (1 if m == 1 else 5 * m - 5)
    assert fs.independence_number(g) == m
    assert fs.is_ternary(g)
    assert fs.is_planar(g)


def test_small_gm_graphs():
    assert fs.build_gm(1) == fs.Graph(['a_1', 'b_1'], [('a_1', 'b_1')])
    assert fs.build_gm(2) == fs.Graph(
        ['a_1', 'a_2', 'b_1', 'b_2', 'c_2'],
        [('a_1', 'b_1'), ('a_1', 'a_2'), ('a_2', 'b_2'), ('b_2', 'c_2'), ('b_1', 'c_2')],
    )
    assert fs.build_gm(3).has_edge('c_2', 'a_3')


@pytest.mark.parametrize('m', [0, -1, 1.5, True])
def test_gm_invalid(m):
    with pytest.raises(fs.InputError):
        fs.GmGraph(m)


@pytest.mark.parametrize('m', range(1, 6))
def test_gm_one_well_covered(m):
    assert fs.is_one_well_covered(fs.build_gm(m))


def test_well_covered():
    assert fs.is_well_covered(fs.build_cycle(5))
    assert not fs.is_well_covered(fs.build_path(3))
    assert fs.is_well_covered(fs.build_cycle(4))
    assert not fs.is_one_well_covered(fs.build_cycle(4))


def test_r3():
    r3 = fs.build_r3()
    assert fs.is_one_well_covered(r3)
    assert fs.independence_number(r3) == 2
    assert fs.is_isomorphic(fs.complement(r3), fs.build_cycle(6))


def test_matching_and_crosspolytope():
    assert fs.matching_graph(3).edges() == [('b_1', 'c_1'), ('b_2', 'c_2'), ('b_3', 'c_3')]
    d = fs.crosspolytope_boundary(3)
    assert len(d.facets) == 8
    assert fs.is_pseudomanifold(d).without_boundary


def test_gm_subdivision_sequence():
    assert fs.gm_subdivision_sequence(1) == []
    assert fs.gm_subdivision_sequence(3) == [
        fs.SubdivisionStep('b_1', 'c_2', 'a_2'),
        fs.SubdivisionStep('b_2', 'c_3', 'a_3'),
    ]


def test_independent_sets():
    sets = fs.independent_sets(fs.build_cycle(4))
    assert sets[0] == frozenset()
    assert len(sets) == 1 + 4 + 2


# ----------------------------------------------------------------------------
# Independent set classification
# ----------------------------------------------------------------------------
def test_classify_case_two():
    result = fs.classify_independent_set(3, {'a_1', 'c_2', 'b_3'})
    assert result.case == 2
    assert result.maximal
    assert result.predicted_maximal


@pytest.mark.parametrize('s, case', [
    (set(), 1),
    ({'a_1'}, 1),
    ({'a_3', 'c_3'}, 3),
    ({'a_3', 'b_2'}, 4),
    ({'c_3', 'a_2'}, 5),
])
def test_classify_cases(s, case):
    result = fs.classify_independent_set(3, s)
    assert result.case == case
    assert (result.predicted_maximal is None) == (case == 1)


def test_classify_rejects_dependent_sets():
    with pytest.raises(fs.InputError):
        fs.classify_independent_set(3, {'a_3', 'b_3'})
    with pytest.raises(fs.InputError):
        fs.classify_independent_set(3, {'x'})


@pytest.mark.parametrize('m', range(1, 5))
def test_classification_is_exhaustive(m):
    for s in fs.independent_sets(fs.build_gm(m)):
        result = fs.classify_independent_set(m, s)
        assert 1 <= result.case <= 5
        if result.predicted_maximal:
            assert result.maximal


# ----------------------------------------------------------------------------
# Cycle and path oracles
# ----------------------------------------------------------------------------
@pytest.mark.parametrize('m', range(2, 6))
def test_cycles_gm_report(m):
    report = fs.cycles_gm_report(m)
    assert report['four_cycles_edge_disjoint']
    assert report['no_six_cycles']
    assert report['no_induced_six_cycles']
    assert report['four_five_meet_in_two_path']


@pytest.mark.parametrize('m', range(1, 6))
def test_paths_mod3(m):
    assert fs.paths_mod3_failures(m) == []


def test_paths_mod3_detects_cycle_gaps():
    g = fs.build_cycle(7)
    assert fs.find_induced_paths_all_residues(g, 'v1', 'v4').missing == (2,)


def test_gm_component_order():
    order = fs.gm_component_order([2, 1])
    assert list(order.values()) == [str(i) for i in range(1, 8)]
    assert order['0:a_1'] == '1'
    assert order['0:a_2'] == '5'
    assert order['1:b_1'] == '7'
