#
# Runtime configuration
#
import os
import re
from sympy import isprime
from ._errors import InputError

__all__ = ['DEFAULT_FACE_GUARD', 'DEFAULT_COEFF', 'face_guard', 'default_coeff', 'parse_coeff', 'coeff_tag']

DEFAULT_FACE_GUARD = 2 ** 22
DEFAULT_COEFF = 'F2'

ENV_FACE_GUARD = 'FLAGSPHERE_FACE_GUARD'
ENV_COEFF = 'FLAGSPHERE_COEFF'

_coeff_re = re.compile(r'^(?:F|GF)?\(?(\d+)\)?$', re.IGNORECASE)


def face_guard():
    """
    Maximal number of faces a complex may materialize.

    The value of the ``FLAGSPHERE_FACE_GUARD`` environment variable takes precedence over :data:`DEFAULT_FACE_GUARD`.
    """
    value = os.environ.get(ENV_FACE_GUARD)
    if value is None or value.strip() == '':
        return DEFAULT_FACE_GUARD

    try:
        guard = int(value.strip(), 0)
    except ValueError:
        raise InputError(f'{ENV_FACE_GUARD} should be an integer, got "{value}"') from None
    if guard <= 0:
        raise InputError(f'{ENV_FACE_GUARD} should be positive, got {guard}')
    return guard


def default_coeff():
    """ Default coefficient field, overridable with ``FLAGSPHERE_COEFF``. """
    return parse_coeff(os.environ.get(ENV_COEFF, DEFAULT_COEFF))


def parse_coeff(coeff):
    """
    Normalize a coefficient field given as an integer or a tag.

    Args:
        coeff (int or str): A prime ``p`` (or ``'Fp'``, ``'GF(p)'``) for the prime field, ``0`` or ``'Q'`` for the rationals.

    Returns:
        int: The characteristic of the field, 0 meaning the rationals.
    """
    if coeff is None:
        return default_coeff()
    if isinstance(coeff, bool):
        raise InputError(f'Invalid coefficient field: {coeff!r}')
    if isinstance(coeff, int):
        p = coeff
    elif isinstance(coeff, str):
        text = coeff.strip()
        if text.upper() in ('Q', 'QQ', '0'):
            return 0
        match = _coeff_re.match(text)
        if match is None:
            raise InputError(f'Invalid coefficient field: "{coeff}"')
        p = int(match.group(1))
    else:
        raise InputError(f'Invalid coefficient field: {coeff!r}')

    if p == 0:
        return 0
    if not isprime(p):
        raise InputError(f'Coefficient field characteristic should be 0 or a prime, got {p}')
    return p


def coeff_tag(coeff):
    """ Report tag of a coefficient field, eg. ``'F2'`` or ``'Q'``. """
    p = parse_coeff(coeff)
    return 'Q' if p == 0 else f'F{p}'
