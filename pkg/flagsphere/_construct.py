#
# Ternary Gorenstein graphs from cross-component edge subdivisions
#
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from warnings import warn
import networkx as nx
import numpy as np
import pandas as pd
from ._complex import cone_points, graph_edge_subdivision, independence_complex
from ._cycles import is_ternary
from ._errors import InputError, PreconditionError, ResourceError
from ._families import GmGraph, gm_component_order
from ._graph import connected_components, disjoint_union, independence_number, relabel
from ._homology import is_gorenstein, is_homology_sphere
from ._planarity import is_planar
from ._util import natural_key

__all__ = [
    'ConstructionStep',
    'ConstructionState',
    'CorpusResult',
    'start',
    'example_start',
    'step',
    'w_graph',
    'classify',
    'nonplanarity_predictor',
    'random_corpus',
]

log = logging.getLogger(__name__)

MODES = ('origin', 'component')
LABELINGS = ('namespaced', 'numeric')
GUARD_ALPHA = 7
SKIPPED = 'skipped: guard'


@dataclass(frozen=True)
class ConstructionStep:
    """
    One executed subdivision.

    Args:
        components (tuple): Original component ids of the two endpoints
        vi (str): First endpoint
        vj (str): Second endpoint
        fresh (str): Label of the new vertex
        degrees (tuple): Degrees of the endpoints right before the step
        mode (str): ``'origin'`` or ``'component'``
    """
    components: tuple
    vi: str
    vj: str
    fresh: str
    degrees: tuple
    mode: str

    def to_dict(self):
        return {
            'components': list(self.components),
            'vi': self.vi,
            'vj': self.vj,
            'fresh': self.fresh,
            'degrees': list(self.degrees),
            'mode': self.mode,
        }


@dataclass(frozen=True)
class ConstructionState:
    """
    Immutable snapshot of the construction.

    Args:
        ms (tuple): Sizes :math:`m_i` of the starting components :math:`G_{m_i}`
        current (Graph): Current graph
        origin (dict): Original component id of every vertex; new vertices inherit the id of their first endpoint
        original (frozenset): Vertices of the starting graph
        steps (tuple): Executed :class:`ConstructionStep` entries
        next_label (int): Next sequential label for new vertices
        labeling (str): ``'namespaced'`` or ``'numeric'``
    """
    ms: tuple
    current: object
    origin: dict = field(compare=False)
    original: frozenset
    steps: tuple = ()
    next_label: int = 1
    labeling: str = 'namespaced'

    @property
    def w_edges(self):
        return tuple(s.components for s in self.steps)

    @property
    def expected_alpha(self):
        return sum(self.ms)

    def component_of(self, label):
        """ Original component id of a vertex. """
        self.current.index(label)
        return self.origin[label]

    def to_dict(self):
        return {
            'ms': list(self.ms),
            'labeling': self.labeling,
            'steps': [s.to_dict() for s in self.steps],
            'w_edges': [list(e) for e in self.w_edges],
        }


@dataclass(frozen=True)
class CorpusResult:
    """
    Randomized construction runs.

    Args:
        frame (pandas.DataFrame): One row per run
        contingency (pandas.DataFrame): Counts of ``(w_is_tree, ternary)``
        disagreements (list): Serialized states where the nonplanarity predictor and the planarity test differ
    """
    frame: pd.DataFrame
    contingency: pd.DataFrame
    disagreements: list = field(default_factory=list)


def start(ms, labeling='namespaced'):
    """
    Starting state :math:`\\bigsqcup_i G_{m_i}` of the construction.

    Args:
        ms (list of int): Component sizes, at least two of them
        labeling (str, optional): ``'namespaced'`` keeps the family labels behind an ``'i:'`` prefix,
            ``'numeric'`` numbers the vertices from 1 in component order; Default **namespaced**

    Raises:
        InputError: Fewer than two components, a nonpositive size or an unknown labeling
    """
    ms = tuple(ms)
    if len(ms) < 2:
        raise InputError(f'The construction starts from at least two components, got {list(ms)}')
    if labeling not in LABELINGS:
        raise InputError(f'Unknown labeling "{labeling}", expected one of {LABELINGS}')

    parts = [GmGraph(m) for m in ms]
    g = disjoint_union(parts)
    origin = {}
    for i, part in enumerate(parts):
        for label in part.labels:
            origin[f'{i}:{label}'] = i

    if labeling == 'numeric':
        mapping = gm_component_order(ms)
        g = relabel(g, mapping)
        origin = {mapping[label]: i for label, i in origin.items()}

    numbers = [int(label) for label in g.labels if label.isdigit()]
    return ConstructionState(ms, g, origin, frozenset(g.labels), next_label=max(numbers, default=0) + 1, labeling=labeling)


def example_start():
    """ Three pentagons ``1-2-3-4-5``, ``6-10-9-8-7`` and ``11-12-13-14-15``; new vertices are numbered from 21. """
    return replace(start([2, 2, 2], labeling='numeric'), next_label=21)


def step(s, vi, vj, fresh=None, mode='origin'):
    """
    Subdivide the edge :math:`v_i v_j` of the independence complex of the current graph.

    Args:
        s (ConstructionState): Current state
        vi (str): First endpoint
        vj (str): Second endpoint
        fresh (str, optional): Label of the new vertex; Default **next sequential number**
        mode (str, optional): ``'origin'`` requires both endpoints to be vertices of the starting graph,
            ``'component'`` accepts any vertex; Default **origin**

    Returns:
        ConstructionState: New state; ``s`` is left unchanged.

    Raises:
        InputError: Unknown endpoints, unknown mode or a label already in use
        PreconditionError: The endpoints lie in the same component, or an endpoint is not original in ``'origin'`` mode
    """
    if mode not in MODES:
        raise InputError(f'Unknown mode "{mode}", expected one of {MODES}')
    vi, vj = str(vi), str(vj)
    g = s.current
    g.index(vi)
    g.index(vj)

    if mode == 'origin':
        for v in (vi, vj):
            if v not in s.original:
                raise PreconditionError(f'{v} is not a vertex of a starting component')

    component = next(c for c in connected_components(g) if vi in c)
    if vj in component:
        raise PreconditionError(f'{vi} and {vj} lie in the same component of the current graph')

    next_label = s.next_label
    if fresh is None:
        while str(next_label) in g:
            next_label += 1
        fresh = str(next_label)
        next_label += 1
    fresh = str(fresh)

    record = ConstructionStep((s.origin[vi], s.origin[vj]), vi, vj, fresh, (g.degree(vi), g.degree(vj)), mode)
    current = graph_edge_subdivision(g, vi, vj, fresh)
    origin = dict(s.origin)
    origin[fresh] = s.origin[vi]
    if fresh.isdigit():
        next_label = max(next_label, int(fresh) + 1)

    log.debug('Step %d: subdivided %s-%s with %s, degrees %s', len(s.steps) + 1, vi, vj, fresh, record.degrees)
    return replace(s, current=current, origin=origin, steps=s.steps + (record,), next_label=next_label)


def w_graph(s):
    """ Merge graph on the starting components, with one edge per executed step. """
    w = nx.Graph()
    w.add_nodes_from(range(len(s.ms)))
    w.add_edges_from(s.w_edges)
    return w


def nonplanarity_predictor(s):
    """ Whether some step used an endpoint of degree at least 3, which predicts a nonplanar result. """
    return any(max(record.degrees) >= 3 for record in s.steps)


def _sphere_status(g, alpha, coeff):
    if alpha >= GUARD_ALPHA:
        return SKIPPED, SKIPPED
    d = independence_complex(g)
    try:
        sphere = is_homology_sphere(d, coeff)
        gorenstein = sphere if not cone_points(d) else is_gorenstein(d, coeff)
    except ResourceError as err:
        log.warning('Homology of %r skipped: %s', d, err)
        return SKIPPED, SKIPPED
    return gorenstein, d.dim if sphere else None


def classify(s, coeff=None, gorenstein=True):
    """
    Classify the current graph of a construction.

    Homology is skipped, and reported as ``'skipped: guard'``, once the independence number reaches 7.

    Args:
        s (ConstructionState): State to classify
        coeff (int or str, optional): Coefficient field for the homology checks; Default **F2**
        gorenstein (bool, optional): Whether to run the homology checks at all; Default **True**

    Returns:
        dict: JSON-ready report with the ternary, planarity, Gorenstein, sphere dimension and W tree verdicts,
        their witnesses and the agreement between :func:`nonplanarity_predictor` and the planarity test.
    """
    if not gorenstein and coeff is not None:
        warn('The coefficient field is ignored when the homology checks are disabled')

    g = s.current
    ternary = is_ternary(g)
    planar = is_planar(g)
    alpha = independence_number(g)
    if gorenstein:
        gor, sphere_dim = _sphere_status(g, alpha, coeff)
    else:
        gor = sphere_dim = SKIPPED
    predictor = nonplanarity_predictor(s)

    return {
        'vertices': len(g),
        'edges': g.number_of_edges,
        'alpha': alpha,
        'alpha_preserved': alpha == s.expected_alpha,
        'ternary': bool(ternary),
        'ternary_witness': None if ternary.witness is None else ternary.witness.to_dict(),
        'planar': bool(planar),
        'kuratowski': None if planar.kuratowski is None else planar.kuratowski.to_dict(),
        'gorenstein': gor,
        'homology_sphere_dim': sphere_dim,
        'dimension_ok': SKIPPED if sphere_dim == SKIPPED else sphere_dim == alpha - 1,
        'w_is_tree': nx.is_tree(w_graph(s)),
        'nonplanarity_predicted': predictor,
        'predictor_agrees': predictor == (not planar),
        'construction': s.to_dict(),
    }


def _pick(rng, labels):
    labels = sorted(labels, key=natural_key)
    return labels[int(rng.integers(len(labels)))]


def _corpus_run(seed, run, max_n, max_steps, mode, gorenstein):
    rng = np.random.default_rng([seed, run])
    run_mode = mode if mode in MODES else MODES[int(rng.integers(len(MODES)))]

    n = int(rng.integers(2, max_n + 1))
    ms = [int(m) for m in _random_partition(rng, n)]
    s = start(ms)
    for _ in range(int(rng.integers(1, min(max_steps, len(ms) - 1) + 1))):
        components = connected_components(s.current)
        i, j = (int(k) for k in rng.choice(len(components), size=2, replace=False))
        pool_i, pool_j = components[i], components[j]
        if run_mode == 'origin':
            pool_i, pool_j = pool_i & s.original, pool_j & s.original
        s = step(s, _pick(rng, pool_i), _pick(rng, pool_j), mode=run_mode)

    report = classify(s, gorenstein=gorenstein)
    row = {
        'run': run,
        'mode': run_mode,
        'partition': '+'.join(str(m) for m in s.ms),
        'steps': len(s.steps),
        'alpha': report['alpha'],
        'alpha_preserved': report['alpha_preserved'],
        'ternary': report['ternary'],
        'planar': report['planar'],
        'nonplanarity_predicted': report['nonplanarity_predicted'],
        'predictor_agrees': report['predictor_agrees'],
        'w_is_tree': report['w_is_tree'],
        'gorenstein': report['gorenstein'],
    }
    return row, s.to_dict()


def _random_partition(rng, n):
    """ Nonincreasing parts of ``n`` with at least two parts. """
    while True:
        parts = []
        rest = n
        while rest:
            part = int(rng.integers(1, rest + 1))
            parts.append(part)
            rest -= part
        if len(parts) >= 2:
            return sorted(parts, reverse=True)


def random_corpus(runs=200, seed=0, max_n=6, max_steps=4, mode='origin', gorenstein=True, workers=1):
    """
    Randomized runs of the construction.

    Every run draws its starting components, with at most ``max_n`` as total size, and up to ``max_steps`` steps
    from its own generator seeded by ``(seed, run)``, so results do not depend on ``workers``.

    Args:
        runs (int, optional): Number of runs; Default **200**
        seed (int, optional): Seed of the corpus; Default **0**
        max_n (int, optional): Largest independence number; Default **6**
        max_steps (int, optional): Largest number of steps per run; Default **4**
        mode (str, optional): ``'origin'``, ``'component'`` or ``'mixed'``; Default **origin**
        gorenstein (bool, optional): Run the homology checks; Default **True**
        workers (int, optional): Process pool size; Default **1**

    Returns:
        CorpusResult: per-run frame, the ``(w_is_tree, ternary)`` contingency table and the predictor disagreements.
    """
    if mode not in MODES + ('mixed',):
        raise InputError(f'Unknown mode "{mode}"')
    if max_n < 2:
        raise InputError(f'max_n should be at least 2, got {max_n}')

    args = [(seed, run, max_n, max_steps, mode, gorenstein) for run in range(runs)]
    if workers <= 1:
        results = [_corpus_run(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_corpus_run, *zip(*args)))

    frame = pd.DataFrame([row for row, _ in results])
    disagreements = [state for row, state in results if not row['predictor_agrees']]
    for state in disagreements:
        log.warning('Nonplanarity predictor disagrees with the planarity test: %s', state)
    if frame.empty:
        contingency = pd.DataFrame()
    else:
        contingency = pd.crosstab(frame['w_is_tree'], frame['ternary'])
    log.info('Corpus of %d runs: %d predictor disagreements', runs, len(disagreements))
    return CorpusResult(frame, contingency, disagreements)
