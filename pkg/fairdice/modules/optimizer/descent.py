"""
Multi-start projected gradient descent over products of probability simplices.

Every start draws each die uniformly from its simplex, then repeats
    X <- P(X - t G)
with t chosen by Armijo backtracking along the projection arc. Each iteration starts from the
Barzilai-Borwein step of the previous move, or from the accepted step grown by 1/beta when the
move shows no positive curvature.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from typing import Optional, Tuple

import numpy as np

from core import InvalidInputError
from meta import log
from wards import require_sides, require_dice_count

from .gradient import objective, objective_and_gradient, dice_from_matrix
from .projection import project_rows, projected_gradient_norm


# Largest trial step, only reached on nearly flat objectives
MAX_STEP = 1e8
# Smallest trial step before a start is declared stalled
MIN_STEP = 1e-20
# Smallest spectral trial step
SPECTRAL_MIN = 1e-10
# Largest per-weight move still counted as rounding
STALL_MOVE = 4 * np.finfo(float).eps
# Rounding allowance in the decrease test, in units of the last place of D
DECREASE_ULPS = 4


@dataclass(frozen=True)
class OptimizerConfig:
    starts: int = 200
    max_iters: int = 50000
    step: float = 0.5
    armijo_beta: float = 0.5
    armijo_c: float = 1e-4
    grad_tol: float = 1e-12
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        for name in ('starts', 'max_iters', 'workers'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
                raise InvalidInputError("`{}` must be a positive integer, got `{!r}`.".format(name, value))
        for name in ('step', 'grad_tol'):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise InvalidInputError("`{}` must be positive, got `{!r}`.".format(name, value))
        for name in ('armijo_beta', 'armijo_c'):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and 0 < value < 1):
                raise InvalidInputError("`{}` must lie strictly between 0 and 1, got `{!r}`.".format(name, value))
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)) or self.seed < 0:
            raise InvalidInputError("`seed` must be a nonnegative integer, got `{!r}`.".format(self.seed))

    def to_json(self):
        return asdict(self)


@dataclass(frozen=True)
class StartSummary:
    index: int
    d_value: float
    iterations: int
    converged: bool
    grad_norm: float
    trace: Optional[Tuple[float, ...]] = field(default=None, compare=False)

    def to_json(self):
        return {
            "index": self.index,
            "d_value": self.d_value,
            "iterations": self.iterations,
            "converged": self.converged,
            "grad_norm": self.grad_norm,
        }


@dataclass(frozen=True)
class OptimizationResult:
    """
    Best of all starts. Global optimality is never claimed.
    """
    dice: tuple
    d_value: float
    best_start_index: int
    converged: bool
    grad_norm: float
    iterations_used: int
    starts: Tuple[StartSummary, ...]
    config: OptimizerConfig
    n: int
    m: int
    identical: bool = False

    @property
    def claim(self):
        return "best of {} starts".format(len(self.starts))


def _start_points(n, m, cfg, identical):
    """
    One independent random stream per start, so results don't depend on worker scheduling.
    """
    rows = 1 if identical else m
    children = np.random.SeedSequence(cfg.seed).spawn(cfg.starts)
    return [
        np.random.default_rng(child).dirichlet(np.ones(n), size=rows)
        for child in children
    ]


def _evaluate(X, m, identical):
    if identical:
        W = np.repeat(X, m, axis=0)
        d, G = objective_and_gradient(W)
        return d, G.sum(axis=0, keepdims=True)
    return objective_and_gradient(X)


def _value(X, m, identical):
    return objective(np.repeat(X, m, axis=0) if identical else X)


def _spectral_step(S, Y, fallback):
    """
    Barzilai-Borwein step `<s, s> / <s, y>` from the last move and gradient change.
    Falls back when the curvature along the move isn't positive.
    """
    sy = float(np.sum(S * Y))
    if not sy > 0:
        return fallback
    return min(max(float(np.sum(S * S)) / sy, SPECTRAL_MIN), MAX_STEP)


def descend(index, X, m, cfg, identical=False, keep_trace=False, callback=None):
    """
    Run one projected gradient descent from the stack `X`.

    A trial is accepted on the Armijo test. Once D only moves by rounding, a trial within the
    rounding band is accepted only if it lowers the projected gradient norm, so the iterates keep
    approaching the stationary point after D itself can no longer resolve progress.
    `callback(iteration, X, d)` is called on the start point and every accepted iterate.

    Returns: Tuple[numpy.ndarray, StartSummary]
    """
    X = project_rows(np.asarray(X, dtype=float))
    d, G = _evaluate(X, m, identical)
    trace = [d] if keep_trace else None
    if callback is not None:
        callback(0, X, d)
    t = cfg.step
    grad_norm = projected_gradient_norm(X, G)
    converged = grad_norm < cfg.grad_tol
    iterations = 0

    while not converged and iterations < cfg.max_iters:
        trial = t
        accepted = None
        while trial >= MIN_STEP:
            Y = project_rows(X - trial * G)
            d_new = _value(Y, m, identical)
            slack = DECREASE_ULPS * np.spacing(d)
            decrease = cfg.armijo_c * float(np.sum(G * (Y - X)))
            if d_new <= d + decrease + slack:
                d_new, G_new = _evaluate(Y, m, identical)
                norm_new = projected_gradient_norm(Y, G_new)
                if d - d_new > slack or norm_new < grad_norm:
                    accepted = (Y, d_new, G_new, norm_new)
                    break
            trial *= cfg.armijo_beta
        if accepted is None:
            break

        Y, d_new, G_new, norm_new = accepted
        move = Y - X
        # Every weight moved by rounding only
        stalled = not np.any(np.abs(move) > STALL_MOVE)
        t = _spectral_step(move, G_new - G, min(trial / cfg.armijo_beta, MAX_STEP))

        X, d, G, grad_norm = Y, d_new, G_new, norm_new
        iterations += 1
        if keep_trace:
            trace.append(d)
        if callback is not None:
            callback(iterations, X, d)
        converged = grad_norm < cfg.grad_tol
        if stalled:
            break

    summary = StartSummary(
        index=index,
        d_value=d,
        iterations=iterations,
        converged=converged,
        grad_norm=grad_norm,
        trace=tuple(trace) if keep_trace else None
    )
    return X, summary


def _run_start(job):
    index, X, m, cfg, identical, keep_trace = job
    return descend(index, X, m, cfg, identical, keep_trace)


def minimize(n, m, cfg: OptimizerConfig = None, identical=False, keep_trace=False) -> OptimizationResult:
    """
    Minimise the distance to uniform over `m` nonnegative n-sided dice from `cfg.starts` random starts.

    Parameters
    ----------
    n: int
        Sides per die, at least 2.
    m: int
        Number of dice, at least 2.
    cfg: OptimizerConfig
        Search parameters, defaults if not given.
    identical: bool
        Constrain every die to share one weight vector.
    keep_trace: bool
        Record D after every iteration of every start.

    Returns: OptimizationResult
        The start with the lowest D, ties going to the lowest start index.
    """
    n = require_sides(n)
    m = require_dice_count(m)
    cfg = cfg or OptimizerConfig()
    if not isinstance(cfg, OptimizerConfig):
        raise InvalidInputError("Expected an OptimizerConfig.")

    jobs = [
        (index, X, m, cfg, identical, keep_trace)
        for index, X in enumerate(_start_points(n, m, cfg, identical))
    ]
    log("Running {} starts for m = {}, n = {}{} on {} worker(s).".format(
        cfg.starts, m, n, " (identical dice)" if identical else "", cfg.workers
    ), context="OPTIMIZER", level=logging.DEBUG)

    if cfg.workers > 1 and cfg.starts > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            outcomes = list(executor.map(_run_start, jobs, chunksize=max(1, cfg.starts // (4 * cfg.workers))))
    else:
        outcomes = [_run_start(job) for job in jobs]

    for _, summary in outcomes:
        log("Start {}: D = {:.17g} after {} iterations{}.".format(
            summary.index, summary.d_value, summary.iterations, "" if summary.converged else " (not converged)"
        ), context="OPTIMIZER", level=logging.DEBUG)

    best_X, best = min(outcomes, key=lambda outcome: (outcome[1].d_value, outcome[1].index))
    W = np.repeat(best_X, m, axis=0) if identical else best_X
    result = OptimizationResult(
        dice=dice_from_matrix(W),
        d_value=best.d_value,
        best_start_index=best.index,
        converged=best.converged,
        grad_norm=best.grad_norm,
        iterations_used=best.iterations,
        starts=tuple(summary for _, summary in outcomes),
        config=cfg,
        n=n,
        m=m,
        identical=identical
    )
    log("Best D = {:.17g} from start {} ({}, {}).".format(
        result.d_value, result.best_start_index, result.claim,
        "converged" if result.converged else "not converged"
    ), context="OPTIMIZER")
    return result
