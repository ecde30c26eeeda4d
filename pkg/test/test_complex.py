#
#   Test simplicial complexes: construction, local operations, subdivisions and structural properties
#
from itertools import combinations
import numpy as np
import pytest
import flagsphere as fs


@pytest.fixture
def square():
    return fs.SimplicialComplex([('1', '2'), ('2', '3'), ('3', '4'), ('1', '4')])


@pytest.fixture
def octahedron():
    return fs.crosspolytope_boundary(3)


def random_flag_complexes(count, seed=0):
    """ Independence complexes of seeded random graphs, skipping those without an edge. """
    rng = np.random.default_rng(seed)
    found = []
    while len(found) < count:
        n = int(rng.integers(4, 9))
        labels = [f'u{i}' for i in range(n)]
        g = fs.Graph(labels, [(labels[i], labels[j]) for i, j in combinations(range(n), 2) if rng.random() < 0.45])
        d = fs.independence_complex(g)
        if d.dim >= 1:
            found.append((g, d))
    return found


def test_void_and_empty():
    void = fs.SimplicialComplex([])
    empty = fs.simplex([])
    assert void.is_void and not void.is_empty
    assert empty.is_empty and not empty.is_void
    assert void.dim == empty.dim == -1
    assert empty.faces() == [()]
    assert void.faces() == []


def test_non_maximal_facets_are_dropped():
    d = fs.SimplicialComplex([('a', 'b', 'c'), ('a', 'b'), ('c', 'd')])
    assert d.facets == (('a', 'b', 'c'), ('c', 'd'))
    assert ('a', 'c') in d
    assert ('a', 'd') not in d


@pytest.mark.parametrize('facets, vertices', [
    ([('a', 'a')], None),
    ([('a', 'b')], ['a', 'b', 'c']),
    ([('a', 'x')], ['a', 'b']),
])
def test_invalid_complexes(facets, vertices):
    with pytest.raises(fs.InputError):
        fs.SimplicialComplex(facets, vertices=vertices)


def test_faces_by_dimension(square):
    assert len(square.faces(0)) == 4
    assert len(square.faces(1)) == 4
    assert square.faces(2) == []
    assert square.face_count() == 9


def test_face_guard(monkeypatch):
    monkeypatch.setenv('FLAGSPHERE_FACE_GUARD', '16')
    with pytest.raises(fs.ResourceError):
        fs.simplex('abcde').face_table()


def test_independence_complex_of_pentagon():
    d = fs.independence_complex(fs.build_cycle(5))
    assert d.dim == 1
    assert len(d.facets) == 5
    assert fs.is_flag(d)
    assert fs.is_isomorphic(fs.complement_skeleton_graph(d), fs.build_cycle(5))


def test_flag(square):
    assert fs.is_flag(square)
    assert not fs.is_flag(fs.boundary_of_simplex('abc'))
    assert not fs.is_flag(fs.SimplicialComplex([]))
    with pytest.raises(fs.DomainError):
        fs.complement_skeleton_graph(fs.boundary_of_simplex('abc'))


def test_minimal_nonfaces(square):
    assert fs.minimal_nonfaces(square) == [('1', '3'), ('2', '4')]
    assert fs.minimal_nonfaces(fs.boundary_of_simplex('abc')) == [('a', 'b', 'c')]


# ----------------------------------------------------------------------------
# Local operations
# ----------------------------------------------------------------------------
def test_link_deletion_star(octahedron):
    v = octahedron.vertices[0]
    lk = fs.link(octahedron, (v,))
    assert lk.dim == 1
    assert len(lk.facets) == 4
    assert fs.star(octahedron, v) == fs.cone(lk, v)
    assert fs.intersection(fs.deletion(octahedron, v), fs.star(octahedron, v)) == lk
    assert fs.union(fs.deletion(octahedron, v), fs.star(octahedron, v)) == octahedron

    with pytest.raises(fs.InputError):
        fs.link(octahedron, ('b_1', 'c_1'))


def test_join():
    d = fs.join(fs.boundary_of_simplex('ab'), fs.boundary_of_simplex('xy'))
    assert d == fs.SimplicialComplex([('a', 'x'), ('a', 'y'), ('b', 'x'), ('b', 'y')])
    with pytest.raises(fs.InputError):
        fs.join(d, fs.simplex(['a']))


def test_induced_subcomplex(octahedron):
    sub = fs.induced_subcomplex(octahedron, ['b_1', 'c_1', 'b_2'])
    assert sub.facets == (('b_1', 'b_2'), ('c_1', 'b_2'))


def test_cone_points_and_core(square):
    coned = fs.cone(square, 'apex')
    assert fs.cone_points(coned) == {'apex'}
    assert fs.core(coned) == square
    assert fs.cone_points(square) == frozenset()


# ----------------------------------------------------------------------------
# Subdivisions and contractions
# ----------------------------------------------------------------------------
def test_edge_subdivision_of_square(square):
    sub = fs.edge_subdivision(square, ('1', '2'), 'a')
    assert sub == fs.SimplicialComplex([('1', 'a'), ('a', '2'), ('2', '3'), ('3', '4'), ('1', '4')])
    assert fs.edge_contraction(sub, ('1', 'a')) == square

    with pytest.raises(fs.InputError):
        fs.edge_subdivision(square, ('1', '3'), 'a')
    with pytest.raises(fs.InputError):
        fs.edge_subdivision(square, ('1', '2'), '3')


def test_stellar_subdivision_of_triangle():
    sub = fs.stellar_subdivision(fs.simplex('abc'), ('a', 'b', 'c'), 'o')
    assert len(sub.facets) == 3
    assert all('o' in facet for facet in sub.facets)
    assert fs.is_homology_sphere(fs.link(sub, ('o',)))


def test_graph_edge_subdivision_matches_complex():
    g = fs.build_gm(2)
    x, y = 'b_1', 'a_2'
    sub = fs.graph_edge_subdivision(g, x, y, 'new')
    assert sub.has_edge(x, y)
    assert sub.neighbors('new') == g.neighbors(x) | g.neighbors(y)
    assert fs.independence_complex(sub) == fs.edge_subdivision(fs.independence_complex(g), (x, y), 'new')

    with pytest.raises(fs.InputError):
        fs.graph_edge_subdivision(g, 'a_1', 'b_1', 'new')


@pytest.mark.parametrize('seed', range(5))
def test_edge_subdivision_keeps_flag(seed):
    for g, d in random_flag_complexes(6, seed):
        assert fs.is_flag(d)
        for x, y in fs.skeleton_graph(d).edges():
            sub = fs.edge_subdivision(d, (x, y), 'new')
            assert fs.is_flag(sub)
            assert fs.independence_complex(fs.graph_edge_subdivision(g, x, y, 'new')) == sub


def test_gm_from_crosspolytope():
    for m in range(1, 6):
        d = fs.apply_subdivisions(fs.crosspolytope_boundary(m), fs.gm_subdivision_sequence(m))
        assert fs.is_isomorphic(fs.complement_skeleton_graph(d), fs.build_gm(m))


def test_contraction_flag_safety(square):
    assert not fs.is_contraction_flag_safe(square, ('1', '2'))
    pentagon = fs.independence_complex(fs.build_cycle(5))
    assert all(fs.is_contraction_flag_safe(pentagon, edge) for edge in pentagon.facets)


def test_unsafe_contraction_breaks_flag(square, octahedron):
    contracted = fs.edge_contraction(square, ('1', '2'))
    assert fs.minimal_nonfaces(contracted) == [('1', '3', '4')]
    assert not fs.is_flag(contracted)

    x, y = fs.skeleton_graph(octahedron).edges()[0]
    assert not fs.is_contraction_flag_safe(octahedron, (x, y))
    assert any(len(f) == 3 for f in fs.minimal_nonfaces(fs.edge_contraction(octahedron, (x, y))))


def test_unsafe_contractions_have_triangle_nonfaces():
    unsafe = 0
    for _, d in random_flag_complexes(30, seed=1):
        for x, y in fs.skeleton_graph(d).edges():
            if fs.is_contraction_flag_safe(d, (x, y)):
                continue
            unsafe += 1
            contracted = fs.edge_contraction(d, (x, y))
            assert any(len(f) == 3 for f in fs.minimal_nonfaces(contracted))
            assert not fs.is_flag(contracted)
    assert unsafe


# ----------------------------------------------------------------------------
# Structure
# ----------------------------------------------------------------------------
def test_pseudomanifold(square, octahedron):
    assert fs.is_pseudomanifold(octahedron).without_boundary
    path = fs.SimplicialComplex([('1', '2'), ('2', '3')])
    result = fs.is_pseudomanifold(path)
    assert result and result.boundary == (('1',), ('3',))
    assert not fs.is_pseudomanifold(fs.SimplicialComplex([('a', 'b'), ('a', 'c'), ('a', 'd')]))
    assert fs.is_pseudomanifold(fs.SimplicialComplex([('a', 'b'), ('c',)])).reason == 'not pure'


def test_strong_connectivity(square):
    assert fs.is_strongly_connected(square)
    assert not fs.is_strongly_connected(fs.SimplicialComplex([('a', 'b'), ('c', 'd')]))


@pytest.mark.parametrize('d, expected', [
    (fs.SimplicialComplex([('a', 'b'), ('c', 'd')]), False),
    (fs.SimplicialComplex([('a', 'b', 'c'), ('a', 'd', 'e')]), False),
    (fs.SimplicialComplex([('a', 'b'), ('b', 'c'), ('c', 'd')]), True),
    (fs.crosspolytope_boundary(3), True),
    (fs.SimplicialComplex([('a', 'b'), ('c',)]), None),
])
def test_vertex_decomposability(d, expected):
    assert fs.is_vertex_decomposable(d) is expected


def test_relabel(square):
    renamed = square.relabel({'1': 'x'})
    assert 'x' in renamed.vertices
    with pytest.raises(fs.InputError):
        square.relabel({'1': '2'})


def test_skeleton_and_purity(square, octahedron):
    assert fs.is_isomorphic(fs.skeleton_graph(octahedron), fs.complement(fs.matching_graph(3)))
    assert fs.skeleton_graph(square).number_of_edges == 4
    assert fs.is_pure(square)
    assert not fs.is_pure(fs.SimplicialComplex([('a', 'b'), ('c',)]))
