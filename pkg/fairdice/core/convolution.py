"""
Direct polynomial-style convolution of coefficient vectors.

Shared by the sum distribution of dice and the expansion of generating polynomials.
Float vectors use `numpy.convolve` (direct, not FFT based);
rational vectors are convolved term by term so no rounding ever occurs.
"""
from fractions import Fraction
from functools import reduce

import numpy as np

from .errors import InvalidInputError


def _convolve_exact(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def convolve_pair(a, b, exact):
    """
    Convolve two coefficient vectors.

    Parameters
    ----------
    a, b: Sequence
        Coefficient vectors, lowest index first.
    exact: bool
        Whether the vectors hold rationals.

    Returns: tuple
    """
    if not len(a) or not len(b):
        raise InvalidInputError("Cannot convolve an empty coefficient vector.")
    if exact:
        return tuple(_convolve_exact(a, b))
    return tuple(float(x) for x in np.convolve(np.asarray(a, dtype=float), np.asarray(b, dtype=float)))


def convolve_all(vectors, exact):
    """
    Iterated pairwise convolution of a nonempty list of coefficient vectors.
    """
    if not vectors:
        raise InvalidInputError("Cannot convolve an empty list.")
    return reduce(lambda acc, vec: convolve_pair(acc, vec, exact), vectors[1:], tuple(vectors[0]))
