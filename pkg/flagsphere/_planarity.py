#
# Planarity and Kuratowski witnesses
#
import logging
from dataclasses import dataclass
import networkx as nx

__all__ = ['KuratowskiWitness', 'PlanarityResult', 'is_planar', 'verify_kuratowski', 'verify_embedding']

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KuratowskiWitness:
    """
    Subgraph homeomorphic to :math:`K_5` or :math:`K_{3,3}`.

    Args:
        kind (str): ``'K5'`` or ``'K3,3'``
        branch_vertices (tuple): Vertices of degree at least 3 in the subgraph
        edges (tuple): Edges of the subgraph, as label pairs
    """
    kind: str
    branch_vertices: tuple
    edges: tuple

    @property
    def vertices(self):
        return tuple(sorted({v for e in self.edges for v in e}))

    def to_dict(self):
        return {
            'kind': self.kind,
            'branch_vertices': list(self.branch_vertices),
            'vertices': list(self.vertices),
            'edges': [list(e) for e in self.edges],
        }


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: dict = None
    kuratowski: KuratowskiWitness = None

    def __bool__(self):
        return self.planar

    def to_dict(self):
        return {
            'planar': self.planar,
            'embedding': self.embedding,
            'kuratowski': None if self.kuratowski is None else self.kuratowski.to_dict(),
        }


def _smooth(subgraph):
    """
    Contract the degree-2 vertices of a subgraph.

    Returns:
        nx.MultiGraph or None: graph on the branch vertices with one edge per branch path, or None if a path closes on itself.
    """
    branch = [v for v in subgraph if subgraph.degree(v) >= 3]
    smoothed = nx.MultiGraph()
    smoothed.add_nodes_from(branch)
    seen = set()
    for start in branch:
        for nxt in subgraph[start]:
            prev, cur = start, nxt
            walked = [frozenset((start, nxt))]
            while subgraph.degree(cur) == 2:
                prev, cur = cur, next(w for w in subgraph[cur] if w != prev)
                walked.append(frozenset((prev, cur)))
            if subgraph.degree(cur) < 2:
                return None
            path = frozenset(walked)
            if path in seen:
                continue
            seen.add(path)
            smoothed.add_edge(start, cur)
    return smoothed


def _classify(subgraph):
    if any(subgraph.degree(v) < 2 for v in subgraph) or not nx.is_connected(subgraph):
        return None

    smoothed = _smooth(subgraph)
    if smoothed is None or nx.number_of_selfloops(smoothed) or smoothed.number_of_edges() != nx.Graph(smoothed).number_of_edges():
        return None

    simple = nx.Graph(smoothed)
    if nx.is_isomorphic(simple, nx.complete_graph(5)):
        return 'K5'
    if nx.is_isomorphic(simple, nx.complete_bipartite_graph(3, 3)):
        return 'K3,3'
    return None


def verify_kuratowski(g, witness):
    """
    Independently check a Kuratowski witness against a graph.

    The witness edges must be edges of ``g`` and smoothing away the degree-2 vertices must leave
    exactly :math:`K_5` or :math:`K_{3,3}`, matching the declared kind.
    """
    if not all(u in g and v in g and g.has_edge(u, v) for u, v in witness.edges):
        return False
    subgraph = nx.Graph()
    subgraph.add_edges_from(witness.edges)
    return _classify(subgraph) == witness.kind


def verify_embedding(g, embedding):
    """ Check a rotation system against a graph and count its faces with Euler's formula. """
    planar = nx.PlanarEmbedding()
    planar.add_nodes_from(embedding)
    planar.set_data({v: list(nbrs) for v, nbrs in embedding.items()})
    try:
        planar.check_structure()
    except nx.NetworkXException:
        return False

    if set(planar.nodes) != set(g.labels):
        return False
    if {frozenset(e) for e in planar.edges()} != {frozenset(e) for e in g.edges()}:
        return False

    visited = set()
    faces = 0
    for half_edge in planar.edges():
        if half_edge in visited:
            continue
        planar.traverse_face(*half_edge, mark_half_edges=visited)
        faces += 1

    # each component with edges contributes V - E + F = 2, an isolated vertex contributes 1
    components = list(nx.connected_components(g.to_networkx()))
    expected = sum(1 if len(c) == 1 else 2 for c in components)
    return len(g) - g.number_of_edges + faces == expected


def is_planar(g, witness=True):
    """
    Planarity test with certificate.

    The verdict comes from the left-right planarity test of :func:`networkx.check_planarity`.
    Planar graphs carry a rotation system; nonplanar ones carry the Kuratowski subgraph of the test, classified as K5 or K3,3.

    Args:
        g (Graph): Input graph
        witness (bool, optional): Whether to extract the certificate; Default **True**

    Returns:
        PlanarityResult: truthy when planar.
    """
    n, m = len(g), g.number_of_edges
    if n >= 3 and m > 3 * n - 6:
        log.debug('Euler bound rules out planarity for %r', g)
        if not witness:
            return PlanarityResult(False)

    planar, certificate = nx.check_planarity(g.to_networkx(), counterexample=witness)
    if not witness:
        return PlanarityResult(planar)

    if planar:
        embedding = {v: list(nbrs) for v, nbrs in sorted(certificate.get_data().items(), key=lambda item: g.index(item[0]))}
        return PlanarityResult(True, embedding=embedding)

    order = {label: i for i, label in enumerate(g.labels)}
    edges = tuple(sorted((tuple(sorted(e, key=order.get)) for e in certificate.edges()), key=lambda e: (order[e[0]], order[e[1]])))
    branch = tuple(sorted((v for v in certificate if certificate.degree(v) >= 3), key=order.get))
    kind = _classify(certificate)
    if kind is None:
        raise RuntimeError(f'Kuratowski subgraph of {g!r} is neither a K5 nor a K3,3 subdivision')
    return PlanarityResult(False, kuratowski=KuratowskiWitness(kind, branch, edges))
