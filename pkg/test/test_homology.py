#
#   Test reduced homology and the sphere, Cohen-Macaulay and Gorenstein criteria
#
import pytest
import flagsphere as fs

RP2 = [
    ('1', '2', '3'), ('1', '3', '4'), ('1', '4', '5'), ('1', '5', '6'), ('1', '2', '6'),
    ('2', '3', '5'), ('2', '4', '5'), ('2', '4', '6'), ('3', '4', '6'), ('3', '5', '6'),
]


@pytest.fixture
def rp2():
    return fs.SimplicialComplex(RP2)


@pytest.mark.parametrize('coeff, expected', [
    ('F2', 2), ('f3', 3), ('GF(5)', 5), ('Q', 0), (7, 7), (0, 0),
])
def test_parse_coeff(coeff, expected):
    assert fs.parse_coeff(coeff) == expected


@pytest.mark.parametrize('coeff', ['F4', 'R', 1, True])
def test_invalid_coeff(coeff):
    with pytest.raises(fs.InputError):
        fs.parse_coeff(coeff)


def test_default_coeff(monkeypatch):
    assert fs.default_coeff() == 2
    monkeypatch.setenv('FLAGSPHERE_COEFF', 'Q')
    assert fs.default_coeff() == 0


@pytest.mark.parametrize('coeff', ['F2', 'F3', 'Q'])
def test_octahedron(coeff):
    d = fs.crosspolytope_boundary(3)
    betti = fs.reduced_homology(d, coeff)
    assert betti.ranks == (0, 0, 0, 1)
    assert betti.face_counts == (1, 6, 12, 8)
    assert betti.euler_characteristic == 1
    assert list(betti.face_counts) == fs.f_vector(d)
    assert betti.is_sphere(2)
    assert fs.is_homology_sphere(d, coeff)


def test_rank_audit(monkeypatch):
    d = fs.crosspolytope_boundary(3)
    monkeypatch.setattr('flagsphere._homology._rank', lambda rows, ncols, p: min(len(rows), ncols))
    with pytest.raises(fs.FlagsphereError, match='Rank-nullity'):
        fs.reduced_homology(d)


def test_boundary_maps_compose_to_zero(monkeypatch):
    d = fs.crosspolytope_boundary(3)
    rows = fs.boundary_rows

    def unsigned(lower, upper):
        return [dict.fromkeys(row, 1) for row in rows(lower, upper)]

    monkeypatch.setattr('flagsphere._homology.boundary_rows', unsigned)
    with pytest.raises(fs.FlagsphereError, match='compose to zero'):
        fs.reduced_homology(d, 'Q')


def test_projective_plane_depends_on_field(rp2):
    assert fs.is_pseudomanifold(rp2).without_boundary
    assert fs.reduced_homology(rp2, 'F2').ranks == (0, 0, 1, 1)
    assert fs.reduced_homology(rp2, 'Q').ranks == (0, 0, 0, 0)
    assert fs.reduced_homology(rp2, 'F3').ranks == (0, 0, 0, 0)

    assert not fs.is_homology_sphere(rp2, 'F2')
    assert not fs.is_homology_sphere(rp2, 'Q')
    assert not fs.is_cohen_macaulay(rp2, 'F2')
    assert fs.is_cohen_macaulay(rp2, 'Q')


def test_torsion(rp2):
    assert fs.reduced_homology(rp2, 'Q', torsion=True).torsion is True
    assert fs.reduced_homology(fs.crosspolytope_boundary(3), 'Q', torsion=True).torsion is False
    assert fs.reduced_homology(rp2).torsion is None


def test_boundary_rows():
    assert fs.boundary_rows((1, 2, 4), (3, 6)) == [{0: -1, 1: 1}, {1: -1, 2: 1}]


def test_small_complexes():
    assert fs.reduced_homology(fs.simplex([])).ranks == (1,)
    assert fs.reduced_homology(fs.SimplicialComplex([])).ranks == ()
    assert fs.reduced_homology(fs.simplex('abc')).ranks == (0, 0, 0, 0)
    assert fs.reduced_homology(fs.SimplicialComplex([('a',), ('b',), ('c',)])).ranks == (0, 2)
    assert fs.is_homology_sphere(fs.simplex([]))
    assert not fs.is_homology_sphere(fs.SimplicialComplex([]))


def test_cone_is_gorenstein_not_sphere():
    d = fs.cone(fs.crosspolytope_boundary(2), 'apex')
    assert not fs.is_homology_sphere(d)
    assert fs.is_gorenstein(d)
    assert fs.is_cohen_macaulay(d)


def test_path_is_cohen_macaulay_not_gorenstein():
    d = fs.independence_complex(fs.build_path(4))
    assert fs.is_cohen_macaulay(d)
    assert not fs.is_gorenstein(d)


def test_two_edges_are_not_cohen_macaulay():
    d = fs.SimplicialComplex([('a', 'b'), ('c', 'd')])
    assert not fs.is_cohen_macaulay(d)
    assert fs.reduced_homology(d).ranks == (0, 1, 0)


@pytest.mark.parametrize('m', [1, 2, 3, 4])
def test_gm_is_flag_sphere(m):
    d = fs.independence_complex(fs.build_gm(m))
    assert d.dim == m - 1
    assert fs.is_flag(d)
    assert fs.is_homology_sphere(d)
    assert fs.is_gorenstein(d, 'Q')


def test_homology_report():
    report = fs.homology_report(fs.crosspolytope_boundary(2), 'Q', name='square')
    assert report == {
        'complex': 'square',
        'coeff': 'Q',
        'betti': [0, 0, 1],
        'homology_sphere': True,
        'cohen_macaulay': True,
        'gorenstein': True,
    }
