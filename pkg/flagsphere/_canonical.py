#
# Canonical forms and isomorphism
#
import logging
from collections import Counter
import networkx as nx
from ._graph import connected_components
from ._util import iter_bits

__all__ = ['canonical_form', 'canonical_labeling', 'is_isomorphic', 'find_isomorphism']

log = logging.getLogger(__name__)


def _refine(adj, cells):
    """
    Equitable refinement of an ordered partition.

    Every cell is split by the number of neighbours its vertices have in each cell; new cells are ordered by that signature.
    Both the split and the order only depend on the current cells, so relabeling the graph relabels the result.
    """
    while True:
        cell_of = {v: ci for ci, cell in enumerate(cells) for v in cell}
        refined = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                signature = tuple(sorted(Counter(cell_of[w] for w in iter_bits(adj[v])).items()))
                groups.setdefault(signature, []).append(v)
            refined.extend(groups[key] for key in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twins(adj, u, v):
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def _leaf(adj, order):
    position = {v: i for i, v in enumerate(order)}
    edges = []
    for v in order:
        pv = position[v]
        for w in iter_bits(adj[v]):
            pw = position[w]
            if pv < pw:
                edges.append((pv, pw))
    return tuple(sorted(edges))


def _search(adj, cells):
    cells = _refine(adj, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        order = [cell[0] for cell in cells]
        return _leaf(adj, order), order

    best = None
    explored = []
    for v in cells[target]:
        # swapping twins is an automorphism fixing the partition
        if any(_twins(adj, v, u) for u in explored):
            continue
        explored.append(v)
        rest = [w for w in cells[target] if w != v]
        result = _search(adj, cells[:target] + [[v], rest] + cells[target + 1:])
        if best is None or result[0] < best[0]:
            best = result
    return best


def _component_forms(g):
    forms = []
    for component in connected_components(g):
        indices = sorted(g.index(v) for v in component)
        local = {old: new for new, old in enumerate(indices)}
        adj = [0] * len(indices)
        for old in indices:
            for w in iter_bits(g.adjacency[old]):
                adj[local[old]] |= 1 << local[w]
        edges, order = _search(adj, [list(range(len(indices)))])
        forms.append(((len(indices), edges), [indices[i] for i in order]))
    forms.sort(key=lambda form: form[0])
    return forms


def canonical_labeling(g):
    """
    Vertex labels in canonical order.

    Isomorphic graphs list corresponding vertices in the same position, up to automorphisms.
    """
    return tuple(g.labels[i] for _, order in _component_forms(g) for i in order)


def canonical_form(g):
    """
    Canonical form of a graph.

    Every connected component is canonized by colour refinement with backtracking over individualized vertices,
    keeping the lexicographically smallest edge list; components are then sorted by their own form.

    Returns:
        tuple: ``(n, edges)`` where ``edges`` are index pairs in the canonical order.
        Two graphs have equal forms exactly when they are isomorphic.
    """
    edges = []
    offset = 0
    for (k, component_edges), _ in _component_forms(g):
        edges.extend((offset + i, offset + j) for i, j in component_edges)
        offset += k
    return (len(g), tuple(edges))


def _quick_reject(g, h):
    return len(g) != len(h) or g.number_of_edges != h.number_of_edges or g.degree_sequence() != h.degree_sequence()


def is_isomorphic(g, h):
    if _quick_reject(g, h):
        return False
    return canonical_form(g) == canonical_form(h)


def find_isomorphism(g, h):
    """
    Explicit isomorphism between two graphs.

    Returns:
        dict or None: Mapping from labels of ``g`` to labels of ``h``, found with :func:`networkx.vf2pp_isomorphism`.
    """
    if _quick_reject(g, h):
        return None
    mapping = nx.vf2pp_isomorphism(g.to_networkx(), h.to_networkx())
    if mapping is None:
        return None
    return {label: mapping[label] for label in g.labels}
