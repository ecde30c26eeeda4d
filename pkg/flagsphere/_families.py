#
# Graph families and structural oracles
#
import logging
from dataclasses import dataclass
from itertools import combinations
from ._complex import edge_subdivision, independence_complex
from ._cycles import enumerate_cycles, enumerate_induced_cycles, find_induced_paths_all_residues
from ._errors import DomainError, InputError
from ._graph import Graph, delete_vertices, distance, maximal_independent_sets
from ._util import iter_bits, popcount, submasks

__all__ = [
    'GmGraph',
    'SubdivisionStep',
    'IndependentSetCase',
    'build_gm',
    'build_r3',
    'build_cycle',
    'build_complete',
    'build_path',
    'matching_graph',
    'crosspolytope_boundary',
    'gm_subdivision_sequence',
    'apply_subdivisions',
    'is_well_covered',
    'is_one_well_covered',
    'independent_sets',
    'classify_independent_set',
    'cycles_gm_report',
    'paths_mod3_failures',
    'gm_component_order',
]

log = logging.getLogger(__name__)

R3_EDGES = (
    ('r_1', 'r_3'), ('r_1', 'r_4'), ('r_1', 'r_5'),
    ('r_2', 'r_4'), ('r_2', 'r_5'), ('r_2', 'r_6'),
    ('r_3', 'r_5'), ('r_3', 'r_6'), ('r_4', 'r_6'),
)


class GmGraph(Graph):
    """
    Member :math:`G_m` of the recursive family of planar 1-well-covered graphs.

    Vertices are named ``a_i``, ``b_i`` (``1 <= i <= m``) and ``c_i`` (``2 <= i <= m``), and are ordered
    ``a_1, b_1, c_2, b_2, a_2, c_3, b_3, a_3, ...`` so that :math:`G_2` lists its pentagon in cyclic order.

    Args:
        m (int): Index of the family member, at least 1
    """
    __slots__ = ('m',)

    def __init__(self, m):
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise InputError(f'G_m needs a positive integer m, got {m!r}')

        labels = ['a_1', 'b_1']
        edges = [('a_1', 'b_1')]
        for i in range(2, m + 1):
            labels.extend((f'c_{i}', f'b_{i}', f'a_{i}'))
            edges.extend((
                (f'a_{i - 1}', f'a_{i}'),
                (f'b_{i - 1}', f'c_{i}'),
                (f'a_{i}', f'b_{i}'),
                (f'b_{i}', f'c_{i}'),
            ))
            if i >= 3:
                edges.append((f'c_{i - 1}', f'a_{i}'))

        super().__init__(labels, edges)
        self.m = m

    def __repr__(self):
        return f'<GmGraph m={self.m}>'

    def __getstate__(self):
        return (self._labels, self._adj, self.m)

    def __setstate__(self, state):
        super().__setstate__(state[:2])
        self.m = state[2]


@dataclass(frozen=True)
class SubdivisionStep:
    """ Edge subdivision of a complex: the edge ``(x, y)`` receives the new vertex ``new``. """
    x: str
    y: str
    new: str


@dataclass(frozen=True)
class IndependentSetCase:
    """
    Classification of an independent set of :math:`G_m` by its trace on :math:`\\{a_m, b_m, c_m\\}`.

    Args:
        case (int): Case number from 1 to 5
        maximal (bool): Whether the set is a maximal independent set, computed directly
        predicted_maximal (bool): Whether the remainder of the set is maximal in the smaller graph of its case,
            which is sufficient for maximality; None for case 1, which makes no such claim
    """
    case: int
    maximal: bool
    predicted_maximal: bool = None


def build_gm(m):
    """ Graph :math:`G_m`, see :class:`GmGraph`. """
    return GmGraph(m)


def build_r3():
    """ Graph :math:`R_3`, the triangular prism, built as the complement of the hexagon ``r_1 ... r_6``. """
    labels = [f'r_{i}' for i in range(1, 7)]
    edges = [
        (u, v) for (i, u), (j, v) in combinations(enumerate(labels), 2)
        if (j - i) % 6 not in (1, 5)
    ]
    graph = Graph(labels, edges)
    if graph != Graph(labels, R3_EDGES):
        raise RuntimeError('R_3 construction does not match its edge list')
    return graph


def build_cycle(n, prefix='v'):
    if n < 3:
        raise InputError(f'Cycles need at least 3 vertices, got {n}')
    labels = [f'{prefix}{i}' for i in range(1, n + 1)]
    return Graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def build_path(n, prefix='v'):
    if n < 1:
        raise InputError(f'Paths need at least 1 vertex, got {n}')
    labels = [f'{prefix}{i}' for i in range(1, n + 1)]
    return Graph(labels, list(zip(labels, labels[1:])))


def build_complete(n, prefix='v'):
    labels = [f'{prefix}{i}' for i in range(1, n + 1)]
    return Graph(labels, combinations(labels, 2))


def matching_graph(m):
    """ Perfect matching :math:`mK_2` on the vertices ``b_i``, ``c_i`` with edges ``b_i c_i``. """
    if m < 1:
        raise InputError(f'mK_2 needs a positive m, got {m}')
    labels = [label for i in range(1, m + 1) for label in (f'b_{i}', f'c_{i}')]
    return Graph(labels, [(f'b_{i}', f'c_{i}') for i in range(1, m + 1)])


def crosspolytope_boundary(m):
    """ Boundary of the m-dimensional crosspolytope, as :math:`Ind(mK_2)`. """
    return independence_complex(matching_graph(m))


def gm_subdivision_sequence(m):
    """
    Edge subdivisions turning the crosspolytope boundary into :math:`Ind(G_m)`.

    Step ``i`` subdivides ``b_i c_{i+1}`` with the new vertex ``a_{i+1}``.
    """
    if m < 1:
        raise InputError(f'The subdivision sequence needs a positive m, got {m}')
    return [SubdivisionStep(f'b_{i}', f'c_{i + 1}', f'a_{i + 1}') for i in range(1, m)]


def apply_subdivisions(d, steps):
    for step in steps:
        d = edge_subdivision(d, (step.x, step.y), step.new)
    return d


def is_well_covered(g):
    """ Whether every maximal independent set has the same size. """
    return len({len(s) for s in maximal_independent_sets(g)}) == 1


def is_one_well_covered(g):
    """ Whether ``g`` is well-covered and stays so after deleting any single vertex. """
    if not is_well_covered(g):
        return False
    return all(is_well_covered(delete_vertices(g, [v])) for v in g.labels)


def independent_sets(g):
    """ Every independent set of ``g`` (the faces of :math:`Ind(G)`) as frozensets of labels. """
    found = set()
    for s in maximal_independent_sets(g):
        found.update(submasks(g.mask(s)))
    return [frozenset(g.labels_of(mask)) for mask in sorted(found, key=lambda mask: (popcount(mask), mask))]


def _gm_or_empty(k):
    return GmGraph(k) if k >= 1 else Graph()


def _is_maximal(g, s):
    mask = g.mask(s)
    dominated = mask
    for i in iter_bits(mask):
        dominated |= g.adjacency[i]
    return dominated == (1 << len(g)) - 1


def _case_predicates(m, s):
    """ For each of the five cases, whether ``s`` fits it, together with the remainder and the smaller graph. """
    trace = s & {f'a_{m}', f'b_{m}', f'c_{m}'}
    rest = s - trace
    previous = _gm_or_empty(m - 1)
    before = _gm_or_empty(m - 2)

    def fits(graph, forbidden):
        return rest <= set(graph.labels) and graph.is_independent(rest) and not rest & forbidden

    return [
        (not trace and fits(previous, set()), previous),
        (trace == {f'b_{m}'} and fits(previous, set()), previous),
        (trace == {f'a_{m}', f'c_{m}'} and fits(before, set()), before),
        (trace == {f'a_{m}'} and fits(previous, {f'a_{m - 1}', f'c_{m - 1}'}), previous),
        (trace == {f'c_{m}'} and fits(previous, {f'b_{m - 1}'}), previous),
    ], rest


def classify_independent_set(m, a):
    """
    Classify an independent set of :math:`G_m` into one of five cases.

    ====  =========================================  =========================================
    case  trace on :math:`\\{a_m, b_m, c_m\\}`          remainder
    ====  =========================================  =========================================
    1     empty                                      independent in :math:`G_{m-1}`
    2     :math:`\\{b_m\\}`                            independent in :math:`G_{m-1}`
    3     :math:`\\{a_m, c_m\\}`                       independent in :math:`G_{m-2}`
    4     :math:`\\{a_m\\}`                            independent in :math:`G_{m-1}`, avoids :math:`a_{m-1}, c_{m-1}`
    5     :math:`\\{c_m\\}`                            independent in :math:`G_{m-1}`, avoids :math:`b_{m-1}`
    ====  =========================================  =========================================

    Returns:
        IndependentSetCase: the case, the maximality of the set and the maximality predicted from its case.

    Raises:
        InputError: ``a`` is not an independent set of :math:`G_m`
    """
    graph = GmGraph(m)
    s = {str(v) for v in a}
    if not s <= set(graph.labels) or not graph.is_independent(s):
        raise InputError(f'{sorted(s)} is not an independent set of G_{m}')

    predicates, rest = _case_predicates(m, s)
    matching = [i + 1 for i, (fits, _) in enumerate(predicates) if fits]
    if len(matching) != 1:
        raise DomainError(f'Independent set {sorted(s)} of G_{m} fits cases {matching}')

    case = matching[0]
    predicted = None if case == 1 else _is_maximal(predicates[case - 1][1], rest)
    return IndependentSetCase(case, _is_maximal(graph, s), predicted)


def cycles_gm_report(m):
    """
    Cycle structure of :math:`G_m`.

    Returns:
        dict: ``four_cycles_edge_disjoint`` (distinct induced 4-cycles share no edge),
        ``no_six_cycles`` (no 6-cycle at all), ``no_induced_six_cycles`` and
        ``four_five_meet_in_two_path`` (every 4-cycle and 5-cycle share no edge or exactly a 2-path).
    """
    graph = GmGraph(m)
    induced = list(enumerate_induced_cycles(graph, max_len=6))
    fours = [c for c in induced if c.length == 4]
    fives = list(enumerate_cycles(graph, 5))
    all_fours = list(enumerate_cycles(graph, 4))

    def edge_set(cycle):
        return {frozenset(e) for e in cycle.edges()}

    disjoint = all(not edge_set(c1) & edge_set(c2) for c1, c2 in combinations(fours, 2))

    def meets_well(c4, c5):
        shared = edge_set(c4) & edge_set(c5)
        if not shared:
            return True
        if len(shared) != 2:
            return False
        e1, e2 = shared
        return len(e1 & e2) == 1

    return {
        'm': m,
        'four_cycles_edge_disjoint': disjoint,
        'no_six_cycles': next(enumerate_cycles(graph, 6), None) is None,
        'no_induced_six_cycles': not any(c.length == 6 for c in induced),
        'four_five_meet_in_two_path': all(meets_well(c4, c5) for c4 in all_fours for c5 in fives),
    }


def paths_mod3_failures(m):
    """ Vertex pairs of :math:`G_m` at distance at least 3 lacking induced paths in some residue modulo 3. """
    graph = GmGraph(m)
    failures = []
    for x, y in combinations(graph.labels, 2):
        if distance(graph, x, y) < 3:
            continue
        found = find_induced_paths_all_residues(graph, x, y)
        if not found.complete:
            failures.append((x, y, found.missing))
    log.debug('G_%d: %d vertex pairs without residue-complete induced paths', m, len(failures))
    return failures


def gm_component_order(ms):
    """
    Numeric labels of the disjoint union of :math:`G_{m_i}` graphs.

    Vertices are numbered from 1, component by component, following the vertex order of :class:`GmGraph`.
    The keys are the namespaced labels ``'i:a_1'`` produced by :func:`~flagsphere.disjoint_union`.

    Example:
        >>> order = gm_component_order([2, 2])
        >>> order['0:a_1'], order['1:a_2']
        ('1', '10')
    """
    labels = [f'{i}:{label}' for i, m in enumerate(ms) for label in GmGraph(m).labels]
    return {label: str(k) for k, label in enumerate(labels, start=1)}
