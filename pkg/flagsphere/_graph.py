#
# Labeled simple graphs
#
import logging
import math
from collections import Counter
import networkx as nx
from ._errors import InputError
from ._util import iter_bits, popcount

__all__ = [
    'Graph',
    'induced_subgraph',
    'delete_vertices',
    'delete_closed_neighborhood',
    'complement',
    'connected_components',
    'distance',
    'disjoint_union',
    'relabel',
    'maximal_independent_sets',
    'independence_number',
]

log = logging.getLogger(__name__)


class Graph:
    """
    Immutable labeled simple graph.

    Vertices are strings, kept in the order they were given.
    Internally every vertex is addressed by its index and neighbourhoods are stored as integer bitmasks over those indices.

    Args:
        labels (iterable): Vertex labels, converted to :class:`str`
        edges (iterable): Pairs of vertex labels

    Raises:
        InputError: Duplicate labels, unknown endpoints, self-loops or parallel edges

    Example:
        >>> g = Graph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')])
        >>> g
        <Graph n=3 m=2>
        >>> sorted(g.neighbors('b'))
        ['a', 'c']
    """
    __slots__ = ('_labels', '_index', '_adj')

    def __init__(self, labels=(), edges=()):
        labels = tuple(str(label) for label in labels)
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            dupes = sorted(label for label, count in Counter(labels).items() if count > 1)
            raise InputError(f'Vertex labels should be unique, got duplicates {dupes}')

        adj = [0] * len(labels)
        for edge in edges:
            u, v = edge
            i, j = index.get(str(u)), index.get(str(v))
            if i is None or j is None:
                raise InputError(f'Edge {u}-{v} references an unknown vertex')
            if i == j:
                raise InputError(f'Self-loops are not allowed: {u}-{v}')
            if adj[i] >> j & 1:
                raise InputError(f'Parallel edges are not allowed: {u}-{v}')
            adj[i] |= 1 << j
            adj[j] |= 1 << i

        self._labels = labels
        self._index = index
        self._adj = tuple(adj)

    @classmethod
    def _from_masks(cls, labels, adj):
        graph = cls.__new__(cls)
        graph._labels = tuple(labels)
        graph._index = {label: i for i, label in enumerate(graph._labels)}
        graph._adj = tuple(adj)
        return graph

    @classmethod
    def from_networkx(cls, nxgraph):
        """ Build a graph from a :class:`networkx.Graph`, using ``str(node)`` as labels. """
        if nxgraph.is_directed() or nxgraph.is_multigraph():
            raise InputError('Only simple undirected graphs are supported')
        return cls(list(nxgraph.nodes), list(nxgraph.edges))

    # ------------------------------------------------------------------------
    # Vertices and edges
    # ------------------------------------------------------------------------
    @property
    def labels(self):
        """ Vertex labels in index order. """
        return self._labels

    @property
    def adjacency(self):
        """ Neighbourhood bitmasks in index order. """
        return self._adj

    def __len__(self):
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __contains__(self, label):
        return label in self._index

    def index(self, label):
        """
        Index of a vertex label.

        Raises:
            InputError: Unknown label
        """
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f'Unknown vertex label "{label}"') from None

    def mask(self, labels):
        """ Bitmask of a collection of labels. """
        if isinstance(labels, str):
            labels = (labels,)
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return mask

    def labels_of(self, mask):
        """ Labels of the bits set in ``mask``, in index order. """
        return tuple(self._labels[i] for i in iter_bits(mask))

    def neighbors(self, label):
        """ Open neighbourhood :math:`N(v)` as a frozenset of labels. """
        return frozenset(self.labels_of(self._adj[self.index(label)]))

    def closed_neighborhood(self, label):
        """ Closed neighbourhood :math:`N[v]` as a frozenset of labels. """
        i = self.index(label)
        return frozenset(self.labels_of(self._adj[i] | 1 << i))

    def degree(self, label):
        return popcount(self._adj[self.index(label)])

    def has_edge(self, u, v):
        return bool(self._adj[self.index(u)] >> self.index(v) & 1)

    def index_edges(self):
        """ Sorted list of edges as index pairs ``(i, j)`` with ``i < j``. """
        return [(i, j) for i, nbrs in enumerate(self._adj) for j in iter_bits(nbrs >> (i + 1) << (i + 1))]

    def edges(self):
        """ Sorted list of edges as label pairs. """
        return [(self._labels[i], self._labels[j]) for i, j in self.index_edges()]

    @property
    def number_of_edges(self):
        return sum(popcount(nbrs) for nbrs in self._adj) // 2

    def degree_sequence(self):
        return sorted((popcount(nbrs) for nbrs in self._adj), reverse=True)

    def is_independent(self, labels):
        mask = self.mask(labels)
        return all(self._adj[i] & mask == 0 for i in iter_bits(mask))

    def to_networkx(self):
        """ Convert to a :class:`networkx.Graph` whose nodes are the labels, inserted in index order. """
        nxgraph = nx.Graph()
        nxgraph.add_nodes_from(self._labels)
        nxgraph.add_edges_from(self.edges())
        return nxgraph

    # ------------------------------------------------------------------------
    # Python protocol
    # ------------------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        if set(self._labels) != set(other._labels):
            return False
        return {frozenset(e) for e in self.edges()} == {frozenset(e) for e in other.edges()}

    def __hash__(self):
        return hash((frozenset(self._labels), frozenset(frozenset(e) for e in self.edges())))

    def __repr__(self):
        return f'<{type(self).__name__} n={len(self)} m={self.number_of_edges}>'

    def __getstate__(self):
        return (self._labels, self._adj)

    def __setstate__(self, state):
        labels, adj = state
        self._labels = labels
        self._index = {label: i for i, label in enumerate(labels)}
        self._adj = adj


def _restrict(g, keep_mask):
    """ Induced subgraph on the vertices of ``keep_mask``, label order preserved. """
    kept = list(iter_bits(keep_mask))
    position = {old: new for new, old in enumerate(kept)}
    adj = []
    for old in kept:
        nbrs = 0
        for w in iter_bits(g.adjacency[old] & keep_mask):
            nbrs |= 1 << position[w]
        adj.append(nbrs)
    return Graph._from_masks((g.labels[i] for i in kept), adj)


def induced_subgraph(g, keep):
    """
    Induced subgraph on a set of vertices.

    Args:
        g (Graph): Input graph
        keep (iterable): Vertex labels to keep

    Returns:
        Graph: Edges of ``g`` with both ends in ``keep``; the label order of ``g`` is preserved.

    Raises:
        InputError: Unknown vertex label
    """
    return _restrict(g, g.mask(keep))


def delete_vertices(g, remove):
    """ Graph :math:`G - S`. """
    full = (1 << len(g)) - 1
    return _restrict(g, full & ~g.mask(remove))


def delete_closed_neighborhood(g, s):
    """
    Graph :math:`G - \\bigcup_{v \\in S} N[v]` for an independent set :math:`S`.

    This is the graph whose independence complex is the link of :math:`S` in :math:`Ind(G)`.

    Raises:
        InputError: ``s`` is not an independent set of ``g``
    """
    mask = g.mask(s)
    if not g.is_independent(g.labels_of(mask)):
        raise InputError(f'Vertex set {sorted(s)} is not independent')

    closed = mask
    for i in iter_bits(mask):
        closed |= g.adjacency[i]
    full = (1 << len(g)) - 1
    return _restrict(g, full & ~closed)


def complement(g):
    full = (1 << len(g)) - 1
    adj = [full & ~nbrs & ~(1 << i) for i, nbrs in enumerate(g.adjacency)]
    return Graph._from_masks(g.labels, adj)


def connected_components(g):
    """ Connected components as frozensets of labels, ordered by their smallest vertex index. """
    remaining = (1 << len(g)) - 1
    components = []
    while remaining:
        seed = remaining & -remaining
        component = frontier = seed
        while frontier:
            reach = 0
            for i in iter_bits(frontier):
                reach |= g.adjacency[i]
            frontier = reach & ~component
            component |= frontier
        components.append(frozenset(g.labels_of(component)))
        remaining &= ~component
    return components


def distance(g, x, y):
    """
    Number of edges on a shortest x-y path.

    Returns:
        int or float: The distance, or :data:`math.inf` when x and y lie in different components.

    Raises:
        InputError: Unknown vertex
    """
    g.index(x)
    g.index(y)
    try:
        return nx.shortest_path_length(g.to_networkx(), x, y)
    except nx.NetworkXNoPath:
        return math.inf


def disjoint_union(gs, namespace=True):
    """
    Disjoint union of graphs.

    Args:
        gs (list of Graph): Graphs to combine
        namespace (bool, optional): Whether to prefix the labels of the i-th graph with ``'i:'``; Default **True**

    Returns:
        Graph: Union without cross edges.

    Raises:
        InputError: Colliding labels when ``namespace`` is disabled
    """
    labels, edges = [], []
    for i, g in enumerate(gs):
        prefix = f'{i}:' if namespace else ''
        labels.extend(prefix + label for label in g.labels)
        edges.extend((prefix + u, prefix + v) for u, v in g.edges())
    return Graph(labels, edges)


def relabel(g, mapping):
    """ Rename vertices; labels missing from ``mapping`` are kept. """
    labels = [str(mapping.get(label, label)) for label in g.labels]
    if len(set(labels)) != len(labels):
        raise InputError('Relabeling should keep vertex labels unique')
    return Graph._from_masks(labels, g.adjacency)


def maximal_independent_sets(g):
    """
    All maximal independent sets of a graph.

    The enumeration runs the pivoting Bron-Kerbosch search of :func:`networkx.find_cliques` on the complement graph.

    Returns:
        list of frozenset: Sets ordered by their sorted vertex indices.
        The empty graph has a single, empty, maximal independent set.
    """
    if len(g) == 0:
        return [frozenset()]

    cliques = nx.find_cliques(complement(g).to_networkx())
    keyed = sorted(tuple(sorted(g.index(v) for v in clique)) for clique in cliques)
    log.debug('Enumerated %d maximal independent sets on %d vertices', len(keyed), len(g))
    return [frozenset(g.labels[i] for i in key) for key in keyed]


def independence_number(g):
    """ Size :math:`\\alpha(G)` of the largest independent set. """
    return max(len(s) for s in maximal_independent_sets(g))