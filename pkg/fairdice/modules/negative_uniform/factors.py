"""
Real quadratic factors of T(x) = 1 + x + ... + x^(N-1), with N = m(n-1) + 1.

The roots of T are the nontrivial N-th roots of unity. For odd N they pair into conjugates
exp(+-2 pi i k / N), k = 1, ..., (N-1)/2, each pair giving x^2 - 2 cos(2 pi k / N) x + 1.
"""
import math
from dataclasses import dataclass

import numpy as np

from core import InvalidInputError, ParityError, convolve_all
from wards import require_int, require_dice_count


@dataclass(frozen=True)
class QuadraticFactor:
    k: int
    modulus: int

    @property
    def middle(self):
        return -2.0 * math.cos(2.0 * math.pi * self.k / self.modulus)

    @property
    def coefficients(self):
        """
        Coefficients (1, -2cos(2 pi k / N), 1), lowest power first; the polynomial is palindromic.
        """
        return (1.0, self.middle, 1.0)

    @property
    def root(self):
        """
        The root exp(2 pi i k / N) in the upper half plane, its conjugate is the other root.
        """
        return np.exp(2j * np.pi * self.k / self.modulus)

    @property
    def value_at_one(self):
        return 2.0 + self.middle

    def __call__(self, x):
        return x * x + self.middle * x + 1.0


def t_polynomial_factors(n, m):
    """
    The m(n-1)/2 real quadratic factors of T for `m` dice with `n` sides, `n` odd.

    Returns: List[QuadraticFactor]
        Ordered by root index k.
    """
    m = require_dice_count(m)
    n = require_int('n', n, 1)
    if n % 2 == 0:
        raise ParityError(
            "Theorem 2: impossible for even n (n = {}): every die polynomial has a real root, "
            "T(x) has none.".format(n)
        )
    if n < 3:
        raise InvalidInputError("Need an odd n >= 3, got n = {}.".format(n))
    modulus = m * (n - 1) + 1
    return [QuadraticFactor(k, modulus) for k in range(1, (modulus - 1) // 2 + 1)]


def leja_order(factors):
    """
    Reorder quadratics so each next root pair is as far as possible, by product of distances,
    from every root already taken.

    Partial products keep their roots spread around the unit circle and their coefficients small.
    """
    factors = list(factors)
    if len(factors) < 3:
        return factors
    roots = np.array([factor.root for factor in factors])
    taken = np.zeros(len(factors), dtype=bool)
    score = np.zeros(len(factors))
    order = [0]
    taken[0] = True
    with np.errstate(divide='ignore'):
        while len(order) < len(factors):
            last = roots[order[-1]]
            score += np.log(np.abs(roots - last)) + np.log(np.abs(roots - np.conj(last)))
            nxt = int(np.argmax(np.where(taken, -np.inf, score)))
            order.append(nxt)
            taken[nxt] = True
    return [factors[i] for i in order]


def expand_factors(factors):
    """
    Multiply the given quadratics out, lowest power first, in Leja order.
    An empty product is the constant 1.
    """
    if not factors:
        return (1.0,)
    return convolve_all([factor.coefficients for factor in leja_order(factors)], exact=False)
