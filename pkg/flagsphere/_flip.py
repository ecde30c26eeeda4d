#
# Partition refinement graph and the subdivision graph of planar ternary spheres
#
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
import networkx as nx
from ._canonical import canonical_form, find_isomorphism
from ._complex import graph_edge_subdivision
from ._cycles import is_ternary
from ._errors import InputError
from ._families import GmGraph
from ._graph import connected_components, disjoint_union, independence_number, induced_subgraph
from ._planarity import is_planar

__all__ = [
    'Partition',
    'SubdivisionAttempt',
    'LabeledFlipGraph',
    'FlipIsomorphism',
    'partitions',
    'refinement_graph',
    'gm_union',
    'build_H',
    'verify_iso_H_P',
    'component_alpha_after_merge',
    'same_component_subdivisions',
]

log = logging.getLogger(__name__)

MAX_FLIP_N = 6
NEW_LABEL = 'new'
UNEXPECTED = ('unmatched', 'no isomorphism witness')


class Partition(tuple):
    """
    Integer partition, as a nonincreasing tuple of positive parts.

    Args:
        parts (iterable): Parts, in nonincreasing order

    Raises:
        InputError: Empty, nonpositive or unordered parts

    Example:
        >>> p = Partition([2, 1, 1])
        >>> str(p), p.n
        ('2+1+1', 4)
        >>> p.merge(1, 2)
        Partition(2+2)
    """
    __slots__ = ()

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p < 1 for p in parts):
            raise InputError(f'Partitions need positive parts, got {parts}')
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f'Partition parts should be nonincreasing, got {parts}')
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text):
        """ Partition from its ``'2+1+1'`` notation. """
        try:
            return cls(int(p) for p in text.split('+'))
        except ValueError as err:
            raise InputError(f'Cannot parse partition "{text}"') from err

    @property
    def n(self):
        return sum(self)

    def merge(self, i, j):
        """ Partition obtained by adding part ``j`` to part ``i``. """
        if i == j or not (0 <= i < len(self) and 0 <= j < len(self)):
            raise InputError(f'Cannot merge parts {i} and {j} of {self}')
        rest = [p for k, p in enumerate(self) if k not in (i, j)]
        return Partition(sorted(rest + [self[i] + self[j]], reverse=True))

    def coarsenings(self):
        """ Partitions covering this one, each with the pair of merged part values. """
        found = {}
        for i, j in combinations(range(len(self)), 2):
            found.setdefault(self.merge(i, j), (self[i], self[j]))
        return found

    def __str__(self):
        return '+'.join(str(p) for p in self)

    def __repr__(self):
        return f'Partition({self})'


@dataclass(frozen=True)
class SubdivisionAttempt:
    """
    One graph edge subdivision between two vertices of a union of :math:`G_m` graphs.

    Args:
        source (Partition): Partition of the subdivided graph
        components (tuple): Indices of the components of ``x`` and ``y``
        x (str): First endpoint
        y (str): Second endpoint
        degrees (tuple): Degrees of ``x`` and ``y`` before the subdivision
        planar (bool): Planarity of the result
        ternary (bool): Ternary-ness of the result
        target (Partition): Partition of the result when it is a union of :math:`G_m` graphs
        reason (str): Why the attempt does not give an edge, None when it does
    """
    source: Partition
    components: tuple
    x: str
    y: str
    degrees: tuple
    planar: bool
    ternary: bool
    target: Partition = None
    reason: str = None

    @property
    def accepted(self):
        return self.reason is None

    def to_dict(self):
        return {
            'source': str(self.source),
            'components': list(self.components),
            'x': self.x,
            'y': self.y,
            'degrees': list(self.degrees),
            'planar': self.planar,
            'ternary': self.ternary,
            'target': None if self.target is None else str(self.target),
            'reason': self.reason,
        }


class LabeledFlipGraph:
    """
    Simple graph whose vertices carry a display name and whose edges carry a move annotation.

    Vertices are keyed by an arbitrary hashable value, eg. a partition or a graph canonical form.

    Args:
        name (str): Name of the graph, used in DOT output
    """

    def __init__(self, name):
        self.name = name
        self.graph = nx.Graph()
        self.attempts = []

    def add_vertex(self, key, name, **attrs):
        self.graph.add_node(key, name=name, **attrs)

    def add_edge(self, u, v, move):
        """ Add an edge with its move annotation; an existing edge keeps its first annotation. """
        if u == v:
            raise InputError(f'Flip graphs are simple, cannot add a loop at {self.name_of(u)}')
        if not self.graph.has_edge(u, v):
            self.graph.add_edge(u, v, move=move)

    def name_of(self, key):
        return self.graph.nodes[key]['name']

    @property
    def vertices(self):
        return list(self.graph.nodes)

    def names(self):
        return [self.name_of(key) for key in self.graph.nodes]

    def named_edges(self):
        """ Edges as sorted pairs of vertex names, in sorted order. """
        return sorted(tuple(sorted((self.name_of(u), self.name_of(v)))) for u, v in self.graph.edges)

    def number_of_vertices(self):
        return self.graph.number_of_nodes()

    def number_of_edges(self):
        return self.graph.number_of_edges()

    def degree_sequence(self):
        return sorted((d for _, d in self.graph.degree), reverse=True)

    def to_networkx(self):
        """ Copy of the underlying graph, relabeled by vertex name. """
        return nx.relabel_nodes(self.graph, {key: self.name_of(key) for key in self.graph.nodes}, copy=True)

    def to_dot(self):
        lines = [f'graph "{self.name}" {{']
        lines.extend(f'  "{name}";' for name in self.names())
        for u, v in self.graph.edges:
            move = self.graph.edges[u, v]['move']
            label = move.get('label', '')
            lines.append(f'  "{self.name_of(u)}" -- "{self.name_of(v)}" [label="{label}"];')
        lines.append('}')
        return '\n'.join(lines) + '\n'

    def to_dict(self):
        edges = []
        for u, v in self.graph.edges:
            a, b = self.name_of(u), self.name_of(v)
            edges.append({'u': min(a, b), 'v': max(a, b), 'move': self.graph.edges[u, v]['move']})
        edges.sort(key=lambda e: (e['u'], e['v']))
        return {
            'name': self.name,
            'vertices': self.names(),
            'edges': edges,
            'attempts': [a.to_dict() for a in self.attempts],
        }

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)

    def __repr__(self):
        return f'<LabeledFlipGraph {self.name} vertices={self.number_of_vertices()} edges={self.number_of_edges()}>'


@dataclass(frozen=True)
class FlipIsomorphism:
    """
    Outcome of comparing the subdivision graph with the partition refinement graph.

    Args:
        n (int): Integer partitioned
        isomorphic (bool): Whether the two graphs are isomorphic, tested structurally
        bijection_is_isomorphism (bool): Whether the map from partitions to unions of :math:`G_m` graphs preserves edges and non-edges
        degree_sequences_match (bool): Result of the degree-sequence pre-filter
        matching (dict): Partition name to the union of :math:`G_m` graphs it maps to
        edges (tuple): Edges of the subdivision graph, as pairs of partition names
    """
    n: int
    isomorphic: bool
    bijection_is_isomorphism: bool
    degree_sequences_match: bool
    matching: dict = field(default_factory=dict)
    edges: tuple = ()

    def __bool__(self):
        return self.isomorphic and self.bijection_is_isomorphism

    def to_dict(self):
        return {
            'n': self.n,
            'isomorphic': self.isomorphic,
            'bijection_is_isomorphism': self.bijection_is_isomorphism,
            'degree_sequences_match': self.degree_sequences_match,
            'matching': dict(self.matching),
            'edges': [list(e) for e in self.edges],
        }


def _check_n(n, bound=None):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f'Expected a positive integer, got {n!r}')
    if bound is not None and n > bound:
        raise InputError(f'n={n} is beyond the supported bound of {bound}')


def partitions(n):
    """ All partitions of ``n``, in decreasing lexicographic order. """
    _check_n(n)

    def generate(rest, largest):
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, largest), 0, -1):
            for tail in generate(rest - part, part):
                yield (part,) + tail

    return [Partition(p) for p in generate(n, n)]


def refinement_graph(n):
    """
    Hasse diagram graph of the refinement order on partitions of ``n``.

    Two partitions are adjacent when one arises from the other by merging two parts.
    """
    flip = LabeledFlipGraph(f'P_{n}')
    parts = partitions(n)
    for lam in parts:
        flip.add_vertex(lam, str(lam), partition=lam)
    for lam in parts:
        for mu, (a, b) in sorted(lam.coarsenings().items(), reverse=True):
            flip.add_edge(lam, mu, {'merged': [a, b], 'label': f'{a}+{b}'})
    return flip


def gm_union(partition):
    """ Disjoint union of :math:`G_{m_i}` over the parts, component ``i`` labeled with the prefix ``'i:'``. """
    return disjoint_union([GmGraph(m) for m in partition])


def _component_index(g):
    index = {}
    for i, component in enumerate(connected_components(g)):
        for v in component:
            index[v] = i
    return index


def _subdivide_and_test(g, x, y):
    result = graph_edge_subdivision(g, x, y, NEW_LABEL)
    return result, bool(is_planar(result, witness=False)), bool(is_ternary(result))


def _partition_attempts(lam, exhaustive):
    """ Cross-component subdivisions of one union of :math:`G_m` graphs, with the canonical form of each good result. """
    g = gm_union(lam)
    component = _component_index(g)
    attempts = []
    for x, y in combinations(g.labels, 2):
        i, j = component[x], component[y]
        if i == j:
            continue
        degrees = (g.degree(x), g.degree(y))
        if not exhaustive and max(degrees) > 2:
            continue
        result, planar, ternary = _subdivide_and_test(g, x, y)
        key = canonical_form(result) if planar and ternary else None
        attempts.append(((i, j), x, y, degrees, planar, ternary, key))
    return lam, attempts


def _map(func, args, workers):
    if workers <= 1:
        return [func(*a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, *zip(*args)))


def build_H(n, exhaustive=False, workers=1):
    """
    Graph of the independence complexes of planar ternary graphs with independence number ``n``, under edge subdivision.

    Vertices are the unions :math:`\\bigsqcup G_{m_i}` over the partitions of ``n``, keyed by canonical form.
    For every pair of vertices in different components, with both degrees at most 2 unless ``exhaustive`` is set,
    the independence complex is subdivided at that edge; the result enters the graph as an edge only when it is
    planar, ternary, equal to the expected merge and backed by an explicit isomorphism.
    Every attempt is kept in :attr:`LabeledFlipGraph.attempts` with its rejection reason.

    Args:
        n (int): Independence number, from 1 to 6
        exhaustive (bool, optional): Also attempt endpoints of degree above 2; Default **False**
        workers (int, optional): Process pool size for the attempts; Default **1**

    Returns:
        LabeledFlipGraph: vertices named by their partition.
    """
    _check_n(n, MAX_FLIP_N)
    flip = LabeledFlipGraph(f'H_{n - 1}')
    parts = partitions(n)
    targets = {}
    for lam in parts:
        g = gm_union(lam)
        key = canonical_form(g)
        targets[key] = (lam, g)
        flip.add_vertex(key, str(lam), partition=lam, graph=' + '.join(f'G_{m}' for m in lam))

    for lam, raw in _map(_partition_attempts, [(lam, exhaustive) for lam in parts], workers):
        log.info('H_%d: %d subdivision attempts from %s', n - 1, len(raw), lam)
        source_key = canonical_form(gm_union(lam))
        for (i, j), x, y, degrees, planar, ternary, key in raw:
            target, reason, move = None, None, None
            if not planar:
                reason = 'nonplanar'
            elif not ternary:
                reason = 'not ternary'
            elif key not in targets:
                reason = 'unmatched'
            else:
                target = targets[key][0]
                if target != lam.merge(i, j):
                    reason = 'unexpected target'
                    log.warning('Subdividing %s-%s in %s gave %s instead of %s', x, y, lam, target, lam.merge(i, j))
                elif not flip.graph.has_edge(source_key, key):
                    result = graph_edge_subdivision(gm_union(lam), x, y, NEW_LABEL)
                    witness = find_isomorphism(result, targets[key][1])
                    if witness is None:
                        reason = 'no isomorphism witness'
                    else:
                        move = {
                            'merged': [lam[i], lam[j]],
                            'subdivided': [x, y],
                            'new': NEW_LABEL,
                            'isomorphism': witness,
                            'label': f'{lam[i]}+{lam[j]}',
                        }
            if reason in UNEXPECTED:
                log.warning('Rejected subdivision %s-%s in %s: %s', x, y, lam, reason)
            flip.attempts.append(SubdivisionAttempt(lam, (i, j), x, y, degrees, planar, ternary, target, reason))
            if move is not None:
                flip.add_edge(source_key, key, move)
    return flip


def verify_iso_H_P(n, workers=1, p_graph=None, h_graph=None):
    """
    Compare the subdivision graph of planar ternary spheres with the partition refinement graph.

    The degree sequences are compared first, then both graphs are tested for isomorphism without any hint,
    and finally the map :math:`(m_1, \\ldots, m_s) \\mapsto \\bigsqcup G_{m_i}` is checked edge for edge.

    Args:
        n (int): Integer to partition, from 1 to 6
        workers (int, optional): Process pool size used by :func:`build_H`; Default **1**
        p_graph (LabeledFlipGraph, optional): Prebuilt :func:`refinement_graph` of ``n``
        h_graph (LabeledFlipGraph, optional): Prebuilt :func:`build_H` of ``n``

    Returns:
        FlipIsomorphism: truthy when the graphs are isomorphic through that map.
    """
    _check_n(n, MAX_FLIP_N)
    if p_graph is None:
        p_graph = refinement_graph(n)
    if h_graph is None:
        h_graph = build_H(n, workers=workers)

    degrees_match = p_graph.degree_sequence() == h_graph.degree_sequence()
    isomorphic = degrees_match and nx.is_isomorphic(p_graph.graph, h_graph.graph)

    image = {lam: canonical_form(gm_union(lam)) for lam in partitions(n)}
    bijective = len(set(image.values())) == len(image) and set(image.values()) == set(h_graph.vertices)
    preserves = bijective and all(
        p_graph.graph.has_edge(a, b) == h_graph.graph.has_edge(image[a], image[b])
        for a, b in combinations(image, 2)
    )
    matching = {str(lam): ' + '.join(f'G_{m}' for m in lam) for lam in image}
    log.info('P_%d vs H_%d: isomorphic=%s, bijection=%s', n, n - 1, isomorphic, preserves)
    return FlipIsomorphism(n, isomorphic, preserves, degrees_match, matching, tuple(h_graph.named_edges()))


def _fresh_label(g, base=NEW_LABEL):
    label, k = base, 0
    while label in g:
        k += 1
        label = f'{base}{k}'
    return label


def component_alpha_after_merge(g, x, y):
    """
    Independence number of the component that subdividing at ``xy`` creates from the components of ``x`` and ``y``.

    Raises:
        InputError: ``x`` and ``y`` lie in the same component
    """
    component = _component_index(g)
    g.index(x)
    g.index(y)
    if component[x] == component[y]:
        raise InputError(f'{x} and {y} lie in the same component')
    new = _fresh_label(g)
    result = graph_edge_subdivision(g, x, y, new)
    merged = next(c for c in connected_components(result) if new in c)
    return independence_number(induced_subgraph(result, merged))


def same_component_subdivisions(partition):
    """
    Subdivide every non-edge inside a component of :math:`\\bigsqcup G_{m_i}`.

    Returns:
        list of SubdivisionAttempt: one per pair; accepted attempts would be vertices of the subdivision graph.
    """
    lam = partition if isinstance(partition, Partition) else Partition(partition)
    g = gm_union(lam)
    component = _component_index(g)
    attempts = []
    for x, y in combinations(g.labels, 2):
        i, j = component[x], component[y]
        if i != j or g.has_edge(x, y):
            continue
        _, planar, ternary = _subdivide_and_test(g, x, y)
        reason = None if planar and ternary else 'nonplanar' if not planar else 'not ternary'
        attempts.append(SubdivisionAttempt(lam, (i, j), x, y, (g.degree(x), g.degree(y)), planar, ternary, None, reason))
    log.debug('Tried %d same-component subdivisions of %s', len(attempts), lam)
    return attempts
