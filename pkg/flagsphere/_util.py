#
# Utilitary functions
#
import hashlib
import re

__all__ = ['get_summary', 'natural_key', 'iter_bits', 'popcount', 'submasks', 'digest']


def get_summary(docstring, indent=''):
    if docstring is None:
        return ''

    summary = docstring.strip().split('\n\n')[0]
    summary = f'\n{indent}'.join(s.strip() for s in summary.splitlines())

    return summary


_digits = re.compile(r'(\d+)')


def natural_key(label):
    """ Sort key ordering ``'a_2'`` before ``'a_10'``. """
    return tuple(int(p) if p.isdigit() else p for p in _digits.split(str(label)))


def popcount(mask):
    return bin(mask).count('1')


def iter_bits(mask):
    """ Indices of the set bits of ``mask``, in increasing order. """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask):
    """ All submasks of ``mask``, including ``mask`` itself and 0. """
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def digest(data):
    if isinstance(data, str):
        data = data.encode('utf-8')
    return 'sha256:' + hashlib.sha256(data).hexdigest()
