import numpy as np

from core import InvalidInputError


def project_rows(V):
    """
    Euclidean projection of each row of `V` onto the probability simplex
        P(v) = argmin_{w >= 0, sum(w) = 1} ||w - v||^2
    by sorting and thresholding.
    """
    n_features = V.shape[1]
    U = np.sort(V, axis=1)[:, ::-1]
    cssv = np.cumsum(U, axis=1) - 1.0
    ind = np.arange(n_features) + 1
    cond = U - cssv / ind > 0
    rho = np.count_nonzero(cond, axis=1)
    theta = cssv[np.arange(len(V)), rho - 1] / rho
    return np.maximum(V - theta[:, np.newaxis], 0)


def project_simplex(v):
    """
    Euclidean projection of a vector onto the probability simplex.

    Parameters
    ----------
    v: array_like
        Finite entries, at least one.

    Returns: numpy.ndarray
        Nonnegative entries summing to 1.
    """
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size == 0:
        raise InvalidInputError("Can only project a nonempty vector onto the simplex.")
    if not np.all(np.isfinite(v)):
        raise InvalidInputError("Can't project a vector with non-finite entries.")
    return project_rows(v.reshape(1, -1)).ravel()


def projected_gradient_norm(X, G):
    """
    Norm of the projected gradient step ||X - P(X - G)|| over a stack of dice.
    Vanishes exactly at the first-order stationary points of the constrained problem.
    """
    return float(np.linalg.norm(X - project_rows(X - G)))
