#
# Simplicial complexes
#
import logging
import threading
from collections import Counter, defaultdict
from dataclasses import dataclass
import networkx as nx
from ._canonical import canonical_form
from ._config import face_guard
from ._errors import DomainError, InputError, ResourceError
from ._graph import Graph, complement, maximal_independent_sets
from ._util import iter_bits, popcount, submasks

__all__ = [
    'SimplicialComplex',
    'PseudomanifoldResult',
    'simplex',
    'boundary_of_simplex',
    'independence_complex',
    'skeleton_graph',
    'complement_skeleton_graph',
    'link',
    'deletion',
    'star',
    'join',
    'cone',
    'union',
    'intersection',
    'induced_subcomplex',
    'is_flag',
    'minimal_nonfaces',
    'stellar_subdivision',
    'edge_subdivision',
    'graph_edge_subdivision',
    'edge_contraction',
    'is_contraction_flag_safe',
    'is_pure',
    'is_strongly_connected',
    'is_pseudomanifold',
    'is_vertex_decomposable',
    'cone_points',
    'core',
]

log = logging.getLogger(__name__)


def _face_key(mask):
    return tuple(iter_bits(mask))


def _antichain(masks):
    """ Inclusion-maximal members of a collection of bitmasks, in lexicographic order of their indices. """
    kept = []
    for mask in sorted(set(masks), key=popcount, reverse=True):
        if all(mask & ~other for other in kept):
            kept.append(mask)
    return tuple(sorted(kept, key=_face_key))


class SimplicialComplex:
    """
    Finite abstract simplicial complex, stored by its facets.

    Faces are bitmasks over the vertex order of the complex and are translated to label tuples at the API boundary.
    The full face family is only materialized when needed, and is guarded by :func:`~flagsphere.face_guard`.

    Note:
        The void complex (no faces at all) is built from an empty facet list,
        while the empty complex :math:`\\{\\emptyset\\}` has a single, empty, facet.

    Args:
        facets (iterable): Facets as iterables of vertex labels; non-maximal entries are discarded
        vertices (iterable, optional): Vertex order; Default **order of first appearance**

    Raises:
        InputError: Repeated vertices in a facet, unknown labels or vertices that lie in no facet

    Example:
        >>> square = SimplicialComplex([('1', '2'), ('2', '3'), ('3', '4'), ('1', '4')])
        >>> square.dim
        1
        >>> square.facets
        (('1', '2'), ('1', '4'), ('2', '3'), ('3', '4'))
    """
    __slots__ = ('_labels', '_index', '_facets', '_cache', '_lock')

    def __init__(self, facets, vertices=None):
        facets = [tuple(str(v) for v in facet) for facet in facets]
        if vertices is None:
            vertices = list(dict.fromkeys(v for facet in facets for v in facet))
        else:
            vertices = [str(v) for v in vertices]
            if len(set(vertices)) != len(vertices):
                raise InputError('Vertex labels should be unique')

        index = {label: i for i, label in enumerate(vertices)}
        masks = []
        for facet in facets:
            if len(set(facet)) != len(facet):
                raise InputError(f'Facet {facet} repeats a vertex')
            mask = 0
            for v in facet:
                if v not in index:
                    raise InputError(f'Facet {facet} references unknown vertex "{v}"')
                mask |= 1 << index[v]
            masks.append(mask)

        covered = 0
        for mask in masks:
            covered |= mask
        if covered != (1 << len(vertices)) - 1:
            missing = [vertices[i] for i in range(len(vertices)) if not covered >> i & 1]
            raise InputError(f'Vertices {missing} are not contained in any facet')

        self._setup(vertices, _antichain(masks))

    def _setup(self, labels, facets):
        self._labels = tuple(labels)
        self._index = {label: i for i, label in enumerate(self._labels)}
        self._facets = facets
        self._cache = {}
        self._lock = threading.Lock()

    @classmethod
    def _from_masks(cls, labels, masks):
        """ Complex from facet bitmasks over ``labels``, dropping non-maximal masks and uncovered labels. """
        masks = list(masks)
        covered = 0
        for mask in masks:
            covered |= mask

        if covered != (1 << len(labels)) - 1:
            kept = list(iter_bits(covered))
            position = {old: new for new, old in enumerate(kept)}
            remapped = []
            for mask in masks:
                new = 0
                for i in iter_bits(mask):
                    new |= 1 << position[i]
                remapped.append(new)
            labels = [labels[i] for i in kept]
            masks = remapped

        complex_ = cls.__new__(cls)
        complex_._setup(labels, _antichain(masks))
        return complex_

    # ------------------------------------------------------------------------
    # Vertices, facets and faces
    # ------------------------------------------------------------------------
    @property
    def vertices(self):
        return self._labels

    @property
    def facets(self):
        """ Facets as label tuples, sorted by vertex order. """
        return tuple(self.face_of(mask) for mask in self._facets)

    @property
    def facet_masks(self):
        return self._facets

    @property
    def dim(self):
        """ Dimension; -1 for both the empty and the void complex. """
        if not self._facets:
            return -1
        return max(popcount(mask) for mask in self._facets) - 1

    @property
    def is_void(self):
        return not self._facets

    @property
    def is_empty(self):
        """ Whether this is the complex :math:`\\{\\emptyset\\}`. """
        return self._facets == (0,)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f'Unknown vertex label "{label}"') from None

    def mask(self, labels):
        if isinstance(labels, str):
            labels = (labels,)
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def face_of(self, mask):
        return tuple(self._labels[i] for i in iter_bits(mask))

    def has_face_mask(self, mask):
        return any(mask & ~facet == 0 for facet in self._facets)

    def __contains__(self, face):
        if isinstance(face, str):
            face = (face,)
        if any(v not in self._index for v in face):
            return False
        return self.has_face_mask(self.mask(face))

    def face_table(self):
        """
        Materialized faces, grouped by size.

        Returns:
            tuple: entry ``k`` is the sorted tuple of bitmasks of the faces with ``k`` vertices.

        Raises:
            ResourceError: The face count exceeds the guard
        """
        table = self._cache.get('faces')
        if table is None:
            with self._lock:
                table = self._cache.get('faces')
                if table is None:
                    table = self._materialize()
                    self._cache['faces'] = table
        return table

    def _materialize(self):
        guard = face_guard()
        faces = set()
        for facet in self._facets:
            if 1 << popcount(facet) > guard:
                raise ResourceError(f'Facet with {popcount(facet)} vertices alone exceeds the face guard of {guard}')
            faces.update(submasks(facet))
            if len(faces) > guard:
                raise ResourceError(f'Complex has more than {guard} faces (set FLAGSPHERE_FACE_GUARD to raise the guard)')

        table = [[] for _ in range(self.dim + 2)] if self._facets else []
        for face in faces:
            table[popcount(face)].append(face)
        log.debug('Materialized %d faces of %r', len(faces), self)
        return tuple(tuple(sorted(level, key=_face_key)) for level in table)

    def faces(self, dim=None):
        """ Faces as label tuples, optionally restricted to one dimension. """
        table = self.face_table()
        if dim is None:
            return [self.face_of(mask) for level in table for mask in level]
        if dim + 1 < 0 or dim + 1 >= len(table):
            return []
        return [self.face_of(mask) for mask in table[dim + 1]]

    def face_count(self):
        return sum(len(level) for level in self.face_table())

    def relabel(self, mapping):
        labels = [str(mapping.get(label, label)) for label in self._labels]
        if len(set(labels)) != len(labels):
            raise InputError('Relabeling should keep vertex labels unique')
        return type(self)._from_masks(labels, self._facets)

    # ------------------------------------------------------------------------
    # Python protocol
    # ------------------------------------------------------------------------
    def _label_facets(self):
        return frozenset(frozenset(self.face_of(mask)) for mask in self._facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._label_facets() == other._label_facets()

    def __hash__(self):
        return hash(self._label_facets())

    def __repr__(self):
        return f'<SimplicialComplex dim={self.dim} vertices={len(self._labels)} facets={len(self._facets)}>'

    def __getstate__(self):
        return (self._labels, self._facets)

    def __setstate__(self, state):
        self._setup(*state)


def simplex(labels):
    """ Full simplex on the given vertices; no vertices gives :math:`\\{\\emptyset\\}`. """
    return SimplicialComplex([tuple(labels)])


def boundary_of_simplex(labels):
    labels = tuple(labels)
    if not labels:
        raise InputError('The boundary of the empty simplex is void; build it with SimplicialComplex([])')
    return SimplicialComplex([labels[:i] + labels[i + 1:] for i in range(len(labels))], vertices=labels if len(labels) > 1 else None)


def independence_complex(g):
    """
    Complex :math:`Ind(G)` of independent sets, with the vertex order of the graph.

    Its facets are the maximal independent sets of ``g``.
    """
    masks = [g.mask(s) for s in maximal_independent_sets(g)]
    return SimplicialComplex._from_masks(g.labels, masks)


def skeleton_graph(d):
    """ The 1-skeleton of a complex as a :class:`~flagsphere.Graph`. """
    adj = [0] * len(d.vertices)
    for facet in d.facet_masks:
        for i in iter_bits(facet):
            adj[i] |= facet & ~(1 << i)
    return Graph._from_masks(d.vertices, adj)


def complement_skeleton_graph(d):
    """
    Complement of the 1-skeleton, the graph ``g`` with :math:`Ind(g) = \\Delta` for flag complexes.

    Raises:
        DomainError: ``d`` is not flag
    """
    if not is_flag(d):
        raise DomainError(f'{d!r} is not a flag complex')
    return complement(skeleton_graph(d))


def _face_mask(d, face):
    if isinstance(face, str):
        face = (face,)
    mask = d.mask(face)
    if not d.has_face_mask(mask):
        raise InputError(f'{tuple(face)} is not a face of {d!r}')
    return mask


def link(d, face):
    """
    Link :math:`lk_\\Delta(\\sigma) = \\{\\tau \\in \\Delta : \\tau \\cap \\sigma = \\emptyset, \\tau \\cup \\sigma \\in \\Delta\\}`.

    Raises:
        InputError: ``face`` is not a face of ``d``
    """
    mask = _face_mask(d, face)
    return SimplicialComplex._from_masks(d.vertices, [f & ~mask for f in d.facet_masks if f & mask == mask])


def deletion(d, v):
    """ Deletion :math:`del_\\Delta(v)`, the faces that avoid ``v``. """
    bit = 1 << d.index(v)
    return SimplicialComplex._from_masks(d.vertices, [f & ~bit for f in d.facet_masks])


def star(d, v):
    """ Closed star of a vertex (or face): the faces whose union with it is a face. """
    mask = _face_mask(d, v)
    return SimplicialComplex._from_masks(d.vertices, [f for f in d.facet_masks if f & mask == mask])


def join(d1, d2):
    """
    Join :math:`\\Delta * \\Gamma` of complexes on disjoint vertex sets.

    Raises:
        InputError: The complexes share vertex labels
    """
    shared = set(d1.vertices) & set(d2.vertices)
    if shared:
        raise InputError(f'Joined complexes share vertices {sorted(shared)}')
    shift = len(d1.vertices)
    masks = [f1 | f2 << shift for f1 in d1.facet_masks for f2 in d2.facet_masks]
    return SimplicialComplex._from_masks(d1.vertices + d2.vertices, masks)


def cone(d, apex):
    return join(d, simplex([apex]))


def _common_masks(d1, d2):
    labels = list(d1.vertices) + [v for v in d2.vertices if v not in d1._index]
    index = {label: i for i, label in enumerate(labels)}
    remap = [index[v] for v in d2.vertices]
    masks2 = []
    for f in d2.facet_masks:
        mask = 0
        for i in iter_bits(f):
            mask |= 1 << remap[i]
        masks2.append(mask)
    return labels, list(d1.facet_masks), masks2


def union(d1, d2):
    labels, masks1, masks2 = _common_masks(d1, d2)
    return SimplicialComplex._from_masks(labels, masks1 + masks2)


def intersection(d1, d2):
    labels, masks1, masks2 = _common_masks(d1, d2)
    return SimplicialComplex._from_masks(labels, [f1 & f2 for f1 in masks1 for f2 in masks2])


def induced_subcomplex(d, vertices):
    mask = d.mask(vertices)
    return SimplicialComplex._from_masks(d.vertices, [f & mask for f in d.facet_masks])


def is_flag(d):
    """
    Whether every minimal nonface has two elements.

    A complex is flag exactly when its facets are the maximal cliques of its 1-skeleton.
    The void complex is not flag.
    """
    if d.is_void:
        return False
    cliques = _antichain(d.mask(s) for s in maximal_independent_sets(complement(skeleton_graph(d))))
    return cliques == d.facet_masks


def minimal_nonfaces(d):
    """
    Vertex sets outside ``d`` whose proper subsets all lie in ``d``.

    Returns:
        list of tuple: ordered by size, then by vertex order
    """
    if d.is_void:
        return [()]

    table = d.face_table()
    present = set().union(*table)
    n = len(d.vertices)
    found = []
    for size in range(2, len(table) + 1):
        for base in table[size - 1]:
            top = base.bit_length()
            for w in range(top, n):
                candidate = base | 1 << w
                if candidate in present:
                    continue
                if all(candidate & ~(1 << u) in present for u in iter_bits(base)):
                    found.append(candidate)
    return [d.face_of(mask) for mask in sorted(found, key=lambda m: (popcount(m), _face_key(m)))]


def _fresh(d, new_label):
    new_label = str(new_label)
    if new_label in d.vertices:
        raise InputError(f'Label "{new_label}" is already a vertex')
    return new_label


def stellar_subdivision(d, face, new_label):
    """
    Stellar subdivision of a nonempty face with a new vertex.

    The star of the face is replaced by the join of the new vertex, the boundary of the face and the link of the face.

    Raises:
        InputError: ``face`` is not a nonempty face of ``d`` or ``new_label`` is already in use
    """
    mask = _face_mask(d, face)
    if mask == 0:
        raise InputError('Stellar subdivision needs a nonempty face')
    new_label = _fresh(d, new_label)
    a = 1 << len(d.vertices)

    masks = []
    for f in d.facet_masks:
        if f & mask != mask:
            masks.append(f)
        else:
            masks.extend(f & ~(1 << v) | a for v in iter_bits(mask))
    return SimplicialComplex._from_masks(d.vertices + (new_label,), masks)


def edge_subdivision(d, xy, new_label):
    """
    Edge subdivision of ``d`` at the edge ``xy`` with a fresh vertex.

    The faces of the result are the faces of ``d`` not containing both ``x`` and ``y``,
    and :math:`\\sigma \\setminus x \\cup a`, :math:`\\sigma \\setminus y \\cup a` for the faces :math:`\\sigma \\supseteq xy`.

    Raises:
        InputError: ``xy`` is not an edge of ``d`` or ``new_label`` is already in use
    """
    if isinstance(xy, str) or len(set(xy)) != 2:
        raise InputError(f'Edge subdivision needs two distinct vertices, got {xy!r}')
    return stellar_subdivision(d, tuple(xy), new_label)


def graph_edge_subdivision(g, x, y, new_label):
    """
    Graph counterpart of the edge subdivision of :math:`Ind(G)` at a non-edge ``xy``.

    The result has the edges of ``g``, the edge ``xy`` and an edge from the new vertex to every vertex of :math:`N(x) \\cup N(y)`.

    Raises:
        InputError: Unknown or equal endpoints, ``xy`` already an edge, or ``new_label`` already in use
    """
    i, j = g.index(x), g.index(y)
    if i == j:
        raise InputError('Graph edge subdivision needs two distinct vertices')
    if g.adjacency[i] >> j & 1:
        raise InputError(f'{x}-{y} is an edge of the graph, hence not a face of its independence complex')
    new_label = str(new_label)
    if new_label in g:
        raise InputError(f'Label "{new_label}" is already a vertex')

    a = len(g)
    adj = list(g.adjacency) + [g.adjacency[i] | g.adjacency[j]]
    adj[i] |= 1 << j
    adj[j] |= 1 << i
    for z in iter_bits(adj[a]):
        adj[z] |= 1 << a
    return Graph._from_masks(g.labels + (new_label,), adj)


def _edge_mask(d, xy):
    if isinstance(xy, str) or len(set(xy)) != 2:
        raise InputError(f'Expected an edge, got {xy!r}')
    return _face_mask(d, tuple(xy))


def edge_contraction(d, xy):
    """
    Contract the edge ``xy``, merging ``y`` into ``x``.

    This undoes an edge subdivision: contracting the edge between an endpoint of the subdivided edge
    and the new vertex, merging the new vertex away, returns the original complex.

    Raises:
        InputError: ``xy`` is not an edge of ``d``
    """
    _edge_mask(d, xy)
    x, y = xy
    xbit, ybit = 1 << d.index(x), 1 << d.index(y)
    masks = [f & ~ybit | xbit if f & ybit else f for f in d.facet_masks]
    return SimplicialComplex._from_masks(d.vertices, masks)


def is_contraction_flag_safe(d, xy):
    """ Whether the edge ``xy`` lies in no induced 4-cycle of the 1-skeleton. """
    _edge_mask(d, xy)
    x, y = xy
    adj = skeleton_graph(d).adjacency
    i, j = d.index(x), d.index(y)
    far_from_x = adj[j] & ~adj[i] & ~(1 << i)
    far_from_y = adj[i] & ~adj[j] & ~(1 << j)
    return not any(adj[z] & far_from_y for z in iter_bits(far_from_x))


def is_pure(d):
    return len({popcount(f) for f in d.facet_masks}) <= 1


def _ridge_incidence(d):
    ridges = defaultdict(list)
    for facet in d.facet_masks:
        for v in iter_bits(facet):
            ridges[facet & ~(1 << v)].append(facet)
    return ridges


def is_strongly_connected(d):
    """ Whether any two facets are joined by a chain of facets meeting in ridges; non-pure complexes never are. """
    if not is_pure(d):
        return False
    if len(d.facet_masks) <= 1:
        return True

    dual = nx.Graph()
    dual.add_nodes_from(d.facet_masks)
    for facets in _ridge_incidence(d).values():
        dual.add_edges_from(zip(facets, facets[1:]))
    return nx.is_connected(dual)


@dataclass(frozen=True)
class PseudomanifoldResult:
    pseudomanifold: bool
    boundary: tuple = ()
    reason: str = None

    @property
    def without_boundary(self):
        return self.pseudomanifold and not self.boundary

    def __bool__(self):
        return self.pseudomanifold

    def to_dict(self):
        return {'pseudomanifold': self.pseudomanifold, 'boundary': [list(r) for r in self.boundary], 'reason': self.reason}


def is_pseudomanifold(d):
    """
    Pseudomanifold test.

    A pseudomanifold is pure, strongly connected and has every ridge in at most two facets.
    Its boundary are the ridges contained in exactly one facet.

    Returns:
        PseudomanifoldResult: truthy for pseudomanifolds, with the boundary ridges or the reason of failure.
    """
    if d.is_void:
        return PseudomanifoldResult(False, reason='void complex')
    if not is_pure(d):
        return PseudomanifoldResult(False, reason='not pure')
    if not is_strongly_connected(d):
        return PseudomanifoldResult(False, reason='not strongly connected')

    ridges = _ridge_incidence(d)
    crowded = sorted((r for r, facets in ridges.items() if len(facets) > 2), key=_face_key)
    if crowded:
        return PseudomanifoldResult(False, reason=f'ridge {d.face_of(crowded[0])} lies in more than two facets')

    boundary = sorted((r for r, facets in ridges.items() if len(facets) == 1), key=_face_key)
    return PseudomanifoldResult(True, tuple(d.face_of(r) for r in boundary))


def _vd_key(d):
    if is_flag(d):
        return ('flag', canonical_form(complement(skeleton_graph(d))))
    return ('facets', d._label_facets())


def _vertex_decomposable(d, memo):
    if len(d.facet_masks) <= 1:
        return True
    if not is_pure(d):
        return False

    key = _vd_key(d)
    if key in memo:
        log.debug('Vertex decomposability memo hit for %r', d)
        return memo[key]

    incidence = Counter(v for facet in d.facet_masks for v in iter_bits(facet))
    result = False
    for i in sorted(range(len(d.vertices)), key=lambda v: (-incidence[v], v)):
        v = d.vertices[i]
        if _vertex_decomposable(link(d, (v,)), memo) and _vertex_decomposable(deletion(d, v), memo):
            result = True
            break

    memo[key] = result
    return result


def is_vertex_decomposable(d):
    """
    Vertex decomposability of a pure complex.

    Simplices, including :math:`\\{\\emptyset\\}` and the void complex, are vertex decomposable;
    otherwise some vertex needs a vertex decomposable link and deletion.
    Vertices are tried by decreasing number of facets containing them and results are memoized on the isomorphism class.

    Returns:
        bool or None: None when ``d`` is not pure, where the notion does not apply.
    """
    if not is_pure(d):
        return None
    return _vertex_decomposable(d, {})


def cone_points(d):
    """ Vertices contained in every facet. """
    if d.is_void:
        return frozenset()
    common = d.facet_masks[0]
    for facet in d.facet_masks[1:]:
        common &= facet
    return frozenset(d.face_of(common))


def core(d):
    """ Link of the face spanned by all cone points. """
    if d.is_void:
        return d
    return link(d, tuple(v for v in d.vertices if v in cone_points(d)))
