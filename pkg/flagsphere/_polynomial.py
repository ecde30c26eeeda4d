#
# Dense integer polynomials
#
import sympy
from ._errors import InputError

__all__ = ['Polynomial']


class Polynomial:
    """
    Polynomial in one variable with exact integer coefficients.

    Coefficients are stored densely, constant term first, without trailing zeros.
    The zero polynomial has no coefficients and degree -1.

    Args:
        coefficients (iterable): Integer coefficients, constant term first

    Raises:
        InputError: A coefficient is not an integer

    Example:
        >>> p = Polynomial([1, 1])
        >>> p * p
        Polynomial([1, 2, 1])
        >>> (p ** 3)(1)
        8
    """
    __slots__ = ('_coeffs',)

    def __init__(self, coefficients=()):
        coeffs = []
        for c in coefficients:
            value = int(c)
            if value != c:
                raise InputError(f'Polynomial coefficients should be integers, got {c!r}')
            coeffs.append(value)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, k, c=1):
        """ The polynomial :math:`c t^k`. """
        return cls([0] * k + [c])

    @property
    def coefficients(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self):
        return self._coeffs[-1] if self._coeffs else 0

    def is_zero(self):
        return not self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __getitem__(self, k):
        """ Coefficient of :math:`t^k`; zero outside the stored range. """
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def __call__(self, t):
        """ Horner evaluation; exact for integer or rational ``t``. """
        value = 0
        for c in reversed(self._coeffs):
            value = value * t + c
        return value

    def reversed(self, degree=None):
        """ The polynomial :math:`t^d p(1/t)`, for ``d`` at least the degree; Default **the degree**. """
        if degree is None:
            degree = self.degree
        if degree < self.degree:
            raise InputError(f'Cannot reverse a polynomial of degree {self.degree} at degree {degree}')
        if self.is_zero():
            return Polynomial()
        return Polynomial((list(self._coeffs) + [0] * (degree + 1 - len(self._coeffs)))[::-1])

    def is_palindromic(self, degree=None):
        return self.reversed(degree) == self

    def to_sympy(self, symbol=None):
        """ Convert to a :class:`sympy.Poly` over the integers. """
        if symbol is None:
            symbol = sympy.Symbol('t')
        return sympy.Poly(list(reversed(self._coeffs)) or [0], symbol, domain='ZZ')

    # ------------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial([other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        size = max(len(self), len(other))
        return Polynomial(self[k] + other[k] for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result, base = Polynomial([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------------
    # Python protocol
    # ------------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == Polynomial([other])._coeffs
        if isinstance(other, (list, tuple)):
            return self._coeffs == Polynomial(other)._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f'Polynomial({list(self._coeffs)})'

    def __str__(self):
        if self.is_zero():
            return '0'
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                monomial = str(c)
            else:
                power = 't' if k == 1 else f't^{k}'
                monomial = power if c == 1 else f'-{power}' if c == -1 else f'{c}{power}'
            terms.append(monomial)
        return ' + '.join(terms).replace('+ -', '- ')
