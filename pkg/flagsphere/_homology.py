#
# Reduced simplicial homology
#
import logging
from dataclasses import dataclass
import numpy as np
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors
from ._complex import core, link
from ._config import coeff_tag, parse_coeff
from ._errors import FlagsphereError
from ._util import iter_bits

__all__ = [
    'BettiVector',
    'boundary_rows',
    'reduced_homology',
    'is_homology_sphere',
    'is_cohen_macaulay',
    'is_gorenstein',
    'homology_report',
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiVector:
    """
    Ranks of the reduced homology groups of a complex.

    Args:
        coeff (str): Coefficient field tag, eg. ``'F2'`` or ``'Q'``
        ranks (tuple): Betti numbers indexed from dimension -1
        boundary_ranks (tuple): ``boundary_ranks[k]`` is the rank of the boundary map leaving the faces of dimension ``k - 1``
        face_counts (tuple): Number of faces per dimension, starting at -1
        torsion (bool, optional): Whether the integral homology has torsion, when it was computed; Default **None**
    """
    coeff: str
    ranks: tuple
    boundary_ranks: tuple = ()
    face_counts: tuple = ()
    torsion: bool = None

    def __getitem__(self, dim):
        """ Betti number in dimension ``dim`` (starting at -1); zero outside the complex. """
        i = dim + 1
        if 0 <= i < len(self.ranks):
            return self.ranks[i]
        return 0

    @property
    def euler_characteristic(self):
        """ Reduced Euler characteristic computed from the ranks. """
        return sum((-1) ** i * r for i, r in enumerate(self.ranks, start=-1))

    def is_sphere(self, dim):
        """ Whether the ranks are those of a sphere of dimension ``dim``. """
        return all(r == (1 if i == dim else 0) for i, r in enumerate(self.ranks, start=-1)) and self[dim] == 1

    def to_dict(self):
        return {'coeff': self.coeff, 'betti': list(self.ranks), 'torsion': self.torsion}


def boundary_rows(lower, upper):
    """
    Sparse boundary map from faces of one size to faces of one size less.

    Args:
        lower (tuple): Bitmasks of the faces of size ``k - 1``
        upper (tuple): Bitmasks of the faces of size ``k``

    Returns:
        list: one row per face of ``upper``, as ``{column: sign}`` dicts over ``lower``.
    """
    position = {mask: i for i, mask in enumerate(lower)}
    rows = []
    for face in upper:
        row = {}
        for j, v in enumerate(iter_bits(face)):
            row[position[face & ~(1 << v)]] = -1 if j % 2 else 1
        rows.append(row)
    return rows


def _rank_mod2(rows, ncols):
    if not rows or ncols == 0:
        return 0
    matrix = np.zeros((len(rows), ncols), dtype=np.uint8)
    for i, row in enumerate(rows):
        matrix[i, list(row)] = 1

    rank = 0
    nrows = matrix.shape[0]
    for col in range(ncols):
        pivots = np.flatnonzero(matrix[rank:, col])
        if pivots.size == 0:
            continue
        pivot = rank + pivots[0]
        if pivot != rank:
            matrix[[rank, pivot]] = matrix[[pivot, rank]]
        below = rank + 1 + np.flatnonzero(matrix[rank + 1:, col])
        matrix[below] ^= matrix[rank]
        rank += 1
        if rank == nrows:
            break
    return rank


def _domain_matrix(rows, ncols, domain):
    one, minus = domain.one, -domain.one
    entries = {i: {j: one if sign > 0 else minus for j, sign in row.items()} for i, row in enumerate(rows)}
    return DomainMatrix(entries, (len(rows), ncols), domain)


def _rank(rows, ncols, p):
    if not rows or ncols == 0:
        return 0
    if p == 2:
        return _rank_mod2(rows, ncols)
    domain = QQ if p == 0 else GF(p)
    return _domain_matrix(rows, ncols, domain).rank()


def _has_torsion(rows, ncols):
    if not rows or ncols == 0:
        return False
    factors = invariant_factors(_domain_matrix(rows, ncols, ZZ))
    return any(abs(int(f)) > 1 for f in factors)


def _composes_to_zero(lower_rows, upper_rows):
    """ Whether applying two consecutive boundary maps gives zero on every face. """
    for row in upper_rows:
        total = {}
        for j, sign in row.items():
            for i, inner in lower_rows[j].items():
                total[i] = total.get(i, 0) + sign * inner
        if any(total.values()):
            return False
    return True


def _audit(counts, boundary_ranks):
    """ Rank-nullity bounds: every boundary rank fits its matrix and every Betti number is nonnegative. """
    for k in range(1, len(counts)):
        if not 0 <= boundary_ranks[k] <= min(counts[k], counts[k - 1]):
            return False
    return all(counts[k] - boundary_ranks[k] - boundary_ranks[k + 1] >= 0 for k in range(len(counts)))


def reduced_homology(d, coeff=None, torsion=False):
    """
    Ranks of the reduced homology groups of a complex.

    Every boundary map, including the augmentation onto the empty face, is assembled as a sparse matrix.
    Over :math:`\\mathbb{F}_2` ranks come from bit elimination with numpy;
    other prime fields and the rationals use exact :class:`~sympy.polys.matrices.DomainMatrix` ranks.

    Args:
        d (SimplicialComplex): Input complex
        coeff (int or str, optional): Coefficient field, see :func:`~flagsphere.parse_coeff`; Default **F2**
        torsion (bool, optional): Also look for torsion in integral homology, with Smith invariant factors; Default **False**

    Returns:
        BettiVector: Betti numbers from dimension -1 to ``d.dim``; empty for the void complex.

    Raises:
        ResourceError: The face count exceeds the guard
        FlagsphereError: The boundary maps fail the chain complex or rank-nullity audit
    """
    p = parse_coeff(coeff)
    table = d.face_table()
    counts = tuple(len(level) for level in table)

    # boundary_ranks[k]: rank of the map from faces of size k to faces of size k - 1
    boundary_ranks = [0] * (len(table) + 1)
    found_torsion = False
    previous = None
    for k in range(1, len(table)):
        rows = boundary_rows(table[k - 1], table[k])
        if previous is not None and not _composes_to_zero(previous, rows):
            raise FlagsphereError(f'Boundary maps of {d!r} do not compose to zero in dimension {k - 1}')
        previous = rows
        boundary_ranks[k] = _rank(rows, len(table[k - 1]), p)
        if torsion and not found_torsion:
            found_torsion = _has_torsion(rows, len(table[k - 1]))

    if not _audit(counts, boundary_ranks):
        raise FlagsphereError(f'Rank-nullity audit failed for {d!r} over {coeff_tag(p)}: ranks {boundary_ranks}, faces {counts}')
    ranks = tuple(counts[k] - boundary_ranks[k] - boundary_ranks[k + 1] for k in range(len(table)))
    log.debug('Reduced homology of %r over %s: %s', d, coeff_tag(p), ranks)
    return BettiVector(
        coeff_tag(p),
        ranks,
        tuple(boundary_ranks),
        counts,
        found_torsion if torsion else None,
    )


def _faces_by_dimension(d):
    """ Every face of ``d``, the empty face first, by increasing dimension. """
    for level in d.face_table():
        yield from level


def _links(d):
    for mask in _faces_by_dimension(d):
        yield mask, link(d, d.face_of(mask))


def is_homology_sphere(d, coeff=None):
    """
    Whether every link, the complex itself included, has the homology of a sphere of its own dimension.

    Faces are visited by increasing dimension and the first failing link ends the search.
    """
    if d.is_void:
        return False
    p = parse_coeff(coeff)
    for mask, lk in _links(d):
        if not reduced_homology(lk, p).is_sphere(lk.dim):
            log.debug('Link of %s in %r is not a homology sphere', d.face_of(mask), d)
            return False
    return True


def is_cohen_macaulay(d, coeff=None):
    """ Reisner's criterion: every link has vanishing reduced homology below its dimension. """
    if d.is_void:
        return False
    p = parse_coeff(coeff)
    for mask, lk in _links(d):
        betti = reduced_homology(lk, p)
        if any(betti[i] for i in range(-1, lk.dim)):
            log.debug('Link of %s in %r has homology below its dimension', d.face_of(mask), d)
            return False
    return True


def is_gorenstein(d, coeff=None):
    """ Whether the core of ``d``, obtained by removing every cone point, is a homology sphere. """
    if d.is_void:
        return False
    return is_homology_sphere(core(d), coeff)


def homology_report(d, coeff=None, name=None):
    """ Homology summary of a complex as a JSON-ready dict. """
    betti = reduced_homology(d, coeff)
    return {
        'complex': name if name is not None else repr(d),
        'coeff': betti.coeff,
        'betti': list(betti.ranks),
        'homology_sphere': is_homology_sphere(d, coeff),
        'cohen_macaulay': is_cohen_macaulay(d, coeff),
        'gorenstein': is_gorenstein(d, coeff),
    }
