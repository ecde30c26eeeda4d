#
# Induced cycles and paths
#
import logging
from dataclasses import dataclass, field
import networkx as nx
from ._errors import InputError
from ._util import iter_bits

__all__ = [
    'CycleWitness',
    'TernaryResult',
    'ResiduePaths',
    'enumerate_induced_cycles',
    'enumerate_cycles',
    'is_ternary',
    'induced_paths',
    'find_induced_paths_all_residues',
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleWitness:
    """
    Cycle given by its cyclically ordered vertices.

    The vertex list is normalized so it starts at the vertex with the smallest index in the graph,
    and runs towards the smaller of its two cycle neighbours.
    """
    vertices: tuple

    @property
    def length(self):
        return len(self.vertices)

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def is_induced_in(self, g):
        """ Check that consecutive vertices are adjacent and that the cycle has no chords in ``g``. """
        n = len(self.vertices)
        if n < 3 or len(set(self.vertices)) != n:
            return False
        for i, u in enumerate(self.vertices):
            for j in range(i + 1, n):
                consecutive = j == i + 1 or (i == 0 and j == n - 1)
                if g.has_edge(u, self.vertices[j]) != consecutive:
                    return False
        return True

    def to_dict(self):
        return {'vertices': list(self.vertices), 'length': self.length}


@dataclass(frozen=True)
class TernaryResult:
    ternary: bool
    witness: CycleWitness = None

    def __bool__(self):
        return self.ternary

    def to_dict(self):
        return {'ternary': self.ternary, 'witness': None if self.witness is None else self.witness.to_dict()}


@dataclass(frozen=True)
class ResiduePaths:
    """ Induced paths found per residue of their length modulo 3. """
    paths: dict = field(default_factory=dict)

    @property
    def missing(self):
        return tuple(r for r in range(3) if r not in self.paths)

    @property
    def complete(self):
        return not self.missing

    def __bool__(self):
        return self.complete


def _normalize(g, cycle):
    idx = [g.index(v) for v in cycle]
    start = idx.index(min(idx))
    idx = idx[start:] + idx[:start]
    if len(idx) > 2 and idx[-1] < idx[1]:
        idx = idx[:1] + idx[:0:-1]
    return tuple(idx)


def enumerate_induced_cycles(g, max_len=None):
    """
    Every induced (chordless) cycle of length at least 3.

    The search itself is :func:`networkx.chordless_cycles`, which grows induced paths depth-first and closes them.
    Results are normalized up to rotation and reflection and emitted by increasing length, then by vertex indices.

    Args:
        g (Graph): Input graph
        max_len (int, optional): Maximal cycle length; Default **unbounded**

    Yields:
        CycleWitness: each induced cycle exactly once
    """
    if max_len is not None and max_len < 3:
        return
    nxgraph = g.to_networkx()
    found = {_normalize(g, cycle) for cycle in nx.chordless_cycles(nxgraph, length_bound=max_len) if len(cycle) >= 3}
    log.debug('Found %d induced cycles in %r', len(found), g)
    for idx in sorted(found, key=lambda c: (len(c), c)):
        yield CycleWitness(tuple(g.labels[i] for i in idx))


def enumerate_cycles(g, length):
    """
    Every cycle of exactly ``length`` edges, induced or not.

    Yields:
        CycleWitness: each cycle once, up to rotation and reflection
    """
    if length < 3:
        return
    found = {
        _normalize(g, cycle)
        for cycle in nx.simple_cycles(g.to_networkx(), length_bound=length)
        if len(cycle) == length
    }
    for idx in sorted(found):
        yield CycleWitness(tuple(g.labels[i] for i in idx))


def is_ternary(g):
    """
    Whether ``g`` has no induced cycle whose length is divisible by three.

    Returns:
        TernaryResult: truthy when ternary; otherwise carries the shortest such cycle as witness.
    """
    for cycle in enumerate_induced_cycles(g):
        if cycle.length % 3 == 0:
            return TernaryResult(False, cycle)
    return TernaryResult(True)


def induced_paths(g, x, y, max_len=None):
    """
    Every induced path between two distinct vertices.

    A path grows from ``x``; a vertex may be appended only if it is adjacent to the last vertex and to no earlier one.
    A branch ends as soon as its last vertex is adjacent to ``y``.

    Args:
        g (Graph): Input graph
        x: Start label
        y: End label
        max_len (int, optional): Maximal number of edges; Default **unbounded**

    Yields:
        tuple: Path vertex labels from ``x`` to ``y``

    Raises:
        InputError: Unknown labels or ``x == y``
    """
    sx, sy = g.index(x), g.index(y)
    if sx == sy:
        raise InputError('Induced paths need two distinct endpoints')
    adj = g.adjacency
    limit = len(g) if max_len is None else max_len

    # path: vertex indices, inner: closed neighbourhood of every vertex but the last
    stack = [((sx,), 1 << sx, 0)]
    while stack:
        path, on_path, inner = stack.pop()
        last = path[-1]
        if len(path) > limit:
            continue
        if adj[last] >> sy & 1:
            yield tuple(g.labels[i] for i in path + (sy,))
            continue

        grown = inner | adj[last] | 1 << last
        candidates = adj[last] & ~inner & ~on_path
        for w in sorted(iter_bits(candidates), reverse=True):
            stack.append((path + (w,), on_path | 1 << w, grown))


def find_induced_paths_all_residues(g, x, y):
    """
    Look for induced x-y paths whose lengths cover every residue modulo 3.

    Returns:
        ResiduePaths: one shortest path per achieved residue; ``missing`` lists the residues without a path.
    """
    best = {}
    for path in induced_paths(g, x, y):
        length = len(path) - 1
        residue = length % 3
        if residue not in best or length < len(best[residue]) - 1:
            best[residue] = path
    return ResiduePaths(dict(sorted(best.items())))
