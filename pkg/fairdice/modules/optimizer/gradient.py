"""
Distance to uniform and its gradient for a stack of float dice.

Dice are rows of an (m, n) array. With e = c - uniform and g_k the convolution of every die but k,
    dD/dw_k[i] = 2 sum_j e[j] g_k[j - i],
a correlation of the residual with the other dice.
"""
from functools import reduce

import numpy as np

from core import Die, InvalidInputError, ScalarMode


def _convolve_rows(rows):
    return reduce(np.convolve, rows, np.ones(1))


def objective(W):
    """
    Distance to uniform of the dice in the rows of `W`.
    """
    c = _convolve_rows(W)
    e = c - 1.0 / c.size
    return float(np.dot(e, e))


def objective_and_gradient(W):
    """
    Distance to uniform and its gradient with respect to every die.

    Returns: Tuple[float, numpy.ndarray]
    """
    m = W.shape[0]
    # prefix[k] convolves dice 0..k-1, suffix[k] convolves dice k..m-1
    prefix = [np.ones(1)]
    for k in range(m):
        prefix.append(np.convolve(prefix[-1], W[k]))
    suffix = [np.ones(1)] * (m + 1)
    for k in range(m - 1, -1, -1):
        suffix[k] = np.convolve(W[k], suffix[k + 1])

    c = prefix[m]
    e = c - 1.0 / c.size
    G = np.empty_like(W)
    for k in range(m):
        others = np.convolve(prefix[k], suffix[k + 1])
        G[k] = 2.0 * np.correlate(e, others, mode='valid')
    return float(np.dot(e, e)), G


def dice_matrix(dice):
    """
    Stack float dice into an (m, n) array, rational dice must be converted explicitly first.
    """
    dice = list(dice)
    if not dice:
        raise InvalidInputError("Need at least one die.")
    n = dice[0].n
    for die in dice:
        if die.n != n:
            raise InvalidInputError("All dice must have the same number of sides.")
        if die.mode is not ScalarMode.FLOAT:
            raise InvalidInputError("The gradient is computed in float mode, convert rational dice with `as_float`.")
    return np.array([die.weights for die in dice], dtype=float)


def gradient_d(dice, which):
    """
    Gradient of the distance to uniform with respect to the weights of die `which` (0-based).

    Returns: numpy.ndarray
        One partial derivative per side.
    """
    W = dice_matrix(dice)
    if isinstance(which, bool) or not isinstance(which, (int, np.integer)) or not 0 <= which < W.shape[0]:
        raise InvalidInputError("Die index {} out of range for {} dice.".format(which, W.shape[0]))
    _, G = objective_and_gradient(W)
    return G[which]


def dice_from_matrix(W):
    return tuple(Die(tuple(float(w) for w in row), ScalarMode.FLOAT) for row in W)
