#
# Face numbers, h- and gamma-vectors, Delannoy numbers and real roots
#
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
import numpy as np
import pandas as pd
import sympy
from ._complex import independence_complex, join
from ._errors import DomainError, InputError
from ._families import GmGraph
from ._polynomial import Polynomial

__all__ = [
    'FHGVectors',
    'RootCertificate',
    'f_vector',
    'f_polynomial',
    'h_polynomial',
    'f_recursive',
    'h_from_f',
    'f_from_h',
    'gamma_from_h',
    'first_negative_gamma',
    'gamma_nonnegative',
    'satisfies_dehn_sommerville',
    'vectors',
    'delannoy_D',
    'delannoy_d',
    'delannoy_poly',
    'delannoy_table',
    'h_recurrence_check',
    'sturm_chain',
    'certify_negative_real_roots',
    'join_multiplicativity_check',
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FHGVectors:
    """
    Face numbers of a complex and their transforms.

    Args:
        f (tuple): :math:`f_{-1}, \\ldots, f_{d-1}`
        h (tuple): :math:`h_0, \\ldots, h_d`
        gamma (tuple or None): :math:`\\gamma_0, \\ldots, \\gamma_{\\lfloor d/2 \\rfloor}`, only when ``h`` is palindromic
    """
    f: tuple
    h: tuple
    gamma: tuple = None

    def to_dict(self):
        return {
            'f': list(self.f),
            'h': list(self.h),
            'gamma': None if self.gamma is None else list(self.gamma),
        }


@dataclass(frozen=True)
class RootCertificate:
    """
    Exact Sturm certificate on the location of the roots of an integer polynomial.

    Root counts include multiplicities, taken from the square-free factorization.

    Args:
        certified (bool): Whether all roots are real and negative
        degree (int): Degree of the polynomial
        real_roots (int): Number of real roots
        negative_roots (int): Number of negative real roots
        factors (tuple): ``(multiplicity, degree, sturm chain length)`` per square-free factor
        float_agrees (bool or None): Whether :func:`numpy.roots` finds the same real and negative root counts, when checked
    """
    certified: bool
    degree: int
    real_roots: int
    negative_roots: int
    factors: tuple = ()
    float_agrees: bool = None

    def __bool__(self):
        return self.certified

    def to_dict(self):
        return {
            'certified': self.certified,
            'degree': self.degree,
            'real_roots': self.real_roots,
            'negative_roots': self.negative_roots,
            'factors': [list(f) for f in self.factors],
            'float_agrees': self.float_agrees,
        }


def f_vector(d):
    """
    Number of faces per dimension, from :math:`f_{-1}` up to :math:`f_{\\dim d}`.

    Raises:
        ResourceError: The face count exceeds the guard
    """
    return [len(level) for level in d.face_table()]


def f_polynomial(d):
    """ :math:`f(\\Delta, t) = \\sum_i f_{i-1} t^i`. """
    return Polynomial(f_vector(d))


def h_polynomial(d):
    """ :math:`h(\\Delta, t) = \\sum_i h_i t^i`. """
    return Polynomial(h_from_f(f_vector(d)))


def _f0(m):
    return 3 * m - 1


def _f1(m):
    return (9 * m * m - 19 * m + 12) // 2


def f_recursive(m):
    """
    f-vector of :math:`Ind(G_m)` from the face recursion.

    The first member is enumerated directly, the vertex and edge counts come from their closed forms
    :math:`f_0(m) = 3m - 1` and :math:`f_1(m) = (9m^2 - 19m + 12) / 2`, and higher face numbers follow
    :math:`f_i(m) = 2f_{i-1}(m-1) + f_i(m-1) + f_{i-2}(m-2) + f_{i-1}(m-2)`.

    Returns:
        list: :math:`f_{-1}, \\ldots, f_{m-1}`
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InputError(f'The face recursion needs a positive integer m, got {m!r}')

    rows = {1: f_vector(independence_complex(GmGraph(1)))}

    def f(k, i):
        row = rows.get(k, [])
        return row[i + 1] if 0 <= i + 1 < len(row) else 0

    for k in range(2, m + 1):
        row = [1, _f0(k), _f1(k)]
        for i in range(2, k):
            row.append(2 * f(k - 1, i - 1) + f(k - 1, i) + f(k - 2, i - 2) + f(k - 2, i - 1))
        rows[k] = row
    return list(rows[m])


def h_from_f(f, d=None):
    """
    h-vector of a complex of dimension ``d - 1`` from its f-vector.

    Uses :math:`\\sum_i h_i t^{d-i} = \\sum_i f_{i-1} (t - 1)^{d-i}`.

    Args:
        f (list): :math:`f_{-1}, \\ldots, f_{d-1}`
        d (int, optional): Number of entries minus one; Default **len(f) - 1**

    Raises:
        InputError: ``f`` does not have ``d + 1`` entries
    """
    f = [int(x) for x in f]
    if d is None:
        d = len(f) - 1
    if len(f) != d + 1:
        raise InputError(f'Expected {d + 1} face numbers for d={d}, got {len(f)}')
    return [sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)]


def f_from_h(h):
    """ Inverse of :func:`h_from_f`: :math:`f_{i-1} = \\sum_{k \\le i} \\binom{d-k}{i-k} h_k`. """
    h = [int(x) for x in h]
    d = len(h) - 1
    return [sum(comb(d - k, i - k) * h[k] for k in range(i + 1)) for i in range(d + 1)]


def satisfies_dehn_sommerville(h):
    """ Whether :math:`h_i = h_{d-i}` for all ``i``. """
    h = list(h)
    return h == h[::-1]


def gamma_from_h(h):
    """
    Coefficients of :math:`h(t) = \\sum_i \\gamma_i t^i (1 + t)^{d - 2i}`.

    The terms are peeled off from the lowest degree up, which solves the triangular system exactly.

    Raises:
        DomainError: ``h`` is not palindromic
    """
    h = [int(x) for x in h]
    if not satisfies_dehn_sommerville(h):
        raise DomainError(f'h-vector {h} is not palindromic, so it has no gamma-vector')
    if not h:
        return []

    d = len(h) - 1
    residual = Polynomial(h)
    gamma = []
    for i in range(d // 2 + 1):
        g = residual[i]
        gamma.append(g)
        residual = residual - Polynomial.monomial(i, g) * Polynomial([1, 1]) ** (d - 2 * i)
    if not residual.is_zero():
        raise RuntimeError(f'Gamma extraction of {h} left the residual {residual}')
    return gamma


def first_negative_gamma(gamma):
    """ Index of the first negative entry, or None. """
    return next((i for i, g in enumerate(gamma) if g < 0), None)


def gamma_nonnegative(h):
    """ Whether the gamma-vector of a palindromic h-vector has no negative entry. """
    gamma = gamma_from_h(h)
    negative = first_negative_gamma(gamma)
    if negative is not None:
        log.info('gamma_%d = %d is negative for h = %s', negative, gamma[negative], list(h))
        return False
    return True


def vectors(d):
    """ f-, h- and (when defined) gamma-vector of a complex. """
    f = f_vector(d)
    h = h_from_f(f)
    gamma = gamma_from_h(h) if h and satisfies_dehn_sommerville(h) else None
    return FHGVectors(tuple(f), tuple(h), None if gamma is None else tuple(gamma))


def delannoy_D(a, b):
    """
    Number of lattice paths from ``(0, 0)`` to ``(a, b)`` with steps ``(1, 0)``, ``(0, 1)`` and ``(1, 1)``.

    Computed by dynamic programming over the grid, one row at a time.

    Raises:
        InputError: A negative coordinate
    """
    if a < 0 or b < 0:
        raise InputError(f'Delannoy numbers need nonnegative coordinates, got ({a}, {b})')
    row = [1] * (b + 1)
    for _ in range(a):
        new = [1] * (b + 1)
        for j in range(1, b + 1):
            new[j] = new[j - 1] + row[j] + row[j - 1]
        row = new
    return row[b]


@lru_cache(maxsize=None)
def _delannoy_d(m, k):
    if k in (0, m):
        return 1
    return _delannoy_d(m - 1, k) + _delannoy_d(m - 1, k - 1) + _delannoy_d(m - 2, k - 1)


def delannoy_d(m, k):
    """
    :math:`d(m, k) = D(m - k, k)`, from the recursion :math:`d(m, k) = d(m-1, k) + d(m-1, k-1) + d(m-2, k-1)`.

    Raises:
        InputError: ``k`` is outside ``0 .. m``
    """
    if m < 0 or not 0 <= k <= m:
        raise InputError(f'd(m, k) needs 0 <= k <= m, got m={m}, k={k}')
    return _delannoy_d(m, k)


def delannoy_poly(m):
    """ Delannoy polynomial :math:`d_m(t) = \\sum_k d(m, k) t^k`. """
    return Polynomial(delannoy_d(m, k) for k in range(m + 1))


def delannoy_table(max_m):
    """
    Table of :math:`d(m, k)` for ``0 <= k <= m <= max_m``.

    Returns:
        pandas.DataFrame: rows indexed by ``m``, columns by ``k``, zero above the diagonal.
    """
    if max_m < 0:
        raise InputError(f'max_m should be nonnegative, got {max_m}')
    rows = [[delannoy_d(m, k) if k <= m else 0 for k in range(max_m + 1)] for m in range(max_m + 1)]
    return pd.DataFrame(
        rows,
        index=pd.RangeIndex(max_m + 1, name='m'),
        columns=pd.RangeIndex(max_m + 1, name='k'),
    )


def _h_gm(m):
    # h(m, t) = sum_k h_k t^(m - k)
    return h_polynomial(independence_complex(GmGraph(m))).reversed(m)


def h_recurrence_check(m):
    """ Check :math:`h(m, t) = (t + 1) h(m-1, t) + t h(m-2, t)` on h-polynomials of :math:`Ind(G_m)` from face enumeration. """
    if m < 3:
        raise InputError(f'The h-recurrence needs m >= 3, got {m}')
    expected = Polynomial([1, 1]) * _h_gm(m - 1) + Polynomial([0, 1]) * _h_gm(m - 2)
    actual = _h_gm(m)
    if actual != expected:
        log.info('h-recurrence fails at m=%d: %s != %s', m, actual, expected)
        return False
    return True


def sturm_chain(poly):
    """
    Sturm chain of a sympy polynomial over the integers.

    Successive terms are negated pseudo-remainders, made primitive to keep the coefficients small.
    The sign of each term matches the negated true remainder, so sign variations are those of the classical chain.
    """
    chain = [poly, poly.diff()]
    while chain[-1].degree() > 0:
        a, b = chain[-2], chain[-1]
        r = a.prem(b)
        if r.is_zero:
            break
        # prem scales the remainder by lc(b) ** (deg a - deg b + 1)
        if b.LC() < 0 and (a.degree() - b.degree() + 1) % 2:
            r = -r
        content, r = r.primitive()
        if content < 0:
            r = -r
        chain.append(-r)
    return chain


def _variations(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _at_infinity(chain, negative):
    return [p.LC() * (-1 if negative and p.degree() % 2 else 1) for p in chain]


def _float_root_counts(factor, tol):
    """ Real and negative root counts of a square-free factor from its companion-matrix roots. """
    roots = np.roots(np.array(factor.all_coeffs(), dtype=float))
    real = roots.real[np.abs(roots.imag) <= tol]
    return int(real.size), int(np.count_nonzero(real < 0))


def certify_negative_real_roots(p, float_check=True, tol=1e-8):
    """
    Certify that all roots of an integer polynomial are negative reals.

    Every square-free factor gets a Sturm chain; its real roots are counted from the sign variations at
    :math:`\\pm \\infty` and its negative roots from the variations at :math:`-\\infty` and 0.
    The polynomial is certified when both counts, weighted by multiplicity, equal its degree.
    All arithmetic is exact; the optional :func:`numpy.roots` comparison is a sanity check and never changes the verdict.

    Args:
        p (Polynomial): Polynomial with a positive leading coefficient
        float_check (bool, optional): Compare the real and negative root counts with companion-matrix roots of each square-free factor; Default **True**
        tol (float, optional): Imaginary-part tolerance of the float check; Default **1e-8**

    Returns:
        RootCertificate: truthy when certified.

    Raises:
        InputError: ``p`` is zero or has a negative leading coefficient
    """
    if not isinstance(p, Polynomial):
        p = Polynomial(p)
    if p.is_zero():
        raise InputError('The zero polynomial has no finite root set')
    if p.leading_coefficient < 0:
        raise InputError(f'Expected a positive leading coefficient, got {p}')

    real = negative = 0
    float_real = float_negative = 0
    factors = []
    _, squarefree = p.to_sympy(sympy.Symbol('t')).sqf_list()
    for factor, multiplicity in squarefree:
        if factor.degree() < 1:
            continue
        chain = sturm_chain(factor)
        at_minus = _variations(_at_infinity(chain, True))
        distinct_real = at_minus - _variations(_at_infinity(chain, False))
        distinct_negative = at_minus - _variations([q.eval(0) for q in chain])
        if factor.eval(0) == 0:
            distinct_negative -= 1
        real += multiplicity * distinct_real
        negative += multiplicity * distinct_negative
        if float_check:
            counts = _float_root_counts(factor, tol)
            float_real += multiplicity * counts[0]
            float_negative += multiplicity * counts[1]
        factors.append((multiplicity, factor.degree(), len(chain)))

    certified = real == p.degree and negative == p.degree
    agrees = None
    if float_check and p.degree > 0:
        agrees = float_real == real and float_negative == negative
        if not agrees:
            log.warning(
                'Float roots of %s disagree with the Sturm counts: %d real, %d negative against %d, %d',
                p, float_real, float_negative, real, negative,
            )
    return RootCertificate(certified, p.degree, real, negative, tuple(factors), agrees)


def join_multiplicativity_check(d1, d2):
    """ Check that f- and h-polynomials multiply under the join of complexes on disjoint vertices. """
    joined = join(d1, d2)
    f_ok = f_polynomial(joined) == f_polynomial(d1) * f_polynomial(d2)
    h_ok = h_polynomial(joined) == h_polynomial(d1) * h_polynomial(d2)
    if not (f_ok and h_ok):
        log.info('Join multiplicativity fails for %r * %r (f: %s, h: %s)', d1, d2, f_ok, h_ok)
    return f_ok and h_ok
