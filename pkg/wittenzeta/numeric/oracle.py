# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Brute-force lattice sums used to check reductions.

Every oracle computes the cube partial sums S(K) over 1 <= m_i <= K for all
K <= N and fits S(K) = S + Σ_{j,k} c_jk log(K)^k / K^j on the last dyadic
ranges. The reported error bound is the change of the limit when one power
of 1/K is dropped from the fit; it is an engineering bound, not a proof.
"""

import logging
from typing import Sequence

import mpmath as mp
import numpy as np

from wittenzeta.algebra.mzv import MzvIndex, convergence_violations
from wittenzeta.algebra.partial_fractions import Factor, forms_to_subset_exponents
from wittenzeta.algebra.partial_fractions import convergence_violations as subset_violations
from wittenzeta.constants import NumericMethod
from wittenzeta.exceptions import DivergentError, PreconditionError
from wittenzeta.numeric.evaluate import NumericResult
from wittenzeta.reduction.args import WittenArgs, WittenKind, as_args
from wittenzeta.settings import get_settings

logger = logging.getLogger(__name__)

# direct MZV sums are one-dimensional and can afford a longer cutoff
DIRECT_SUM_CUTOFF_FACTOR = 16


def _fit_limit(ks: np.ndarray, sums: np.ndarray, powers: int, logs: int) -> float:
    columns = [np.ones_like(ks)]
    log_k = np.log(ks)
    for j in range(1, powers + 1):
        for k in range(logs):
            columns.append(log_k**k / ks**j)
    design = np.column_stack(columns)
    scale = np.abs(design).max(axis=0)
    solution, *_ = np.linalg.lstsq(design / scale, sums, rcond=None)
    return float(solution[0] / scale[0])


def extrapolate(partial_sums: np.ndarray, levels: int, logs: int) -> NumericResult:
    """Limit of ``partial_sums[K - 1] = S(K)`` from K in [N / 2^(levels-1), N]."""
    cutoff = len(partial_sums)
    start = max(cutoff >> (levels - 1), 2)
    ks = np.arange(start, cutoff + 1, dtype=float)
    sums = partial_sums[start - 1 :]
    limit = _fit_limit(ks, sums, levels, logs)
    coarser = _fit_limit(ks, sums, levels - 1, logs) if levels > 1 else float(sums[-1])
    error = max(abs(limit - coarser), 1e-12 * max(abs(limit), 1.0))
    return NumericResult(mp.mpf(limit), mp.mpf(error), NumericMethod.TRUNCATED_SUM)


def _diagonal_partial_sums(grid: np.ndarray) -> np.ndarray:
    """S(K) = Σ_{i, j < K} grid[i, j] for every K."""
    return np.diagonal(grid.cumsum(axis=0).cumsum(axis=1)).copy()


def _form_values(coeffs: Sequence[int], fixed: float, m2: np.ndarray, m3: np.ndarray):
    # broadcasts to (N, 1), (1, N) or (N, N) depending on which variables appear
    value = fixed
    if coeffs[1]:
        value = value + coeffs[1] * m2
    if coeffs[2]:
        value = value + coeffs[2] * m3
    return value


def _cube_partial_sums(factors: Sequence[Factor], d: int, cutoff: int) -> np.ndarray:
    m = np.arange(1, cutoff + 1, dtype=float)
    if d == 2:
        grid = np.ones((cutoff, cutoff))
        for form, e in factors:
            c1, c2 = form.coeffs
            grid *= (c1 * m[:, None] + c2 * m[None, :]) ** -float(e)
        return _diagonal_partial_sums(grid)

    m2, m3 = m[:, None], m[None, :]
    # factors free of m1 are the same on every slice
    static = np.ones((cutoff, cutoff))
    moving = []
    for form, e in factors:
        if form.coeffs[0]:
            moving.append((form.coeffs, float(e)))
        else:
            static = static * _form_values(form.coeffs, 0.0, m2, m3) ** -float(e)

    totals = np.zeros(cutoff)
    for i in range(1, cutoff + 1):
        grid = static
        for coeffs, e in moving:
            grid = grid * _form_values(coeffs, float(coeffs[0] * i), m2, m3) ** -e
        totals[i - 1 :] += _diagonal_partial_sums(np.broadcast_to(grid, (cutoff, cutoff)))[i - 1 :]
    return totals


def oracle_lattice_sum(
    forms: Sequence[Factor], d: int, cutoff: int | None = None, levels: int | None = None
) -> NumericResult:
    """Σ_{m in N^d} Π form(m)^-e by truncation at ``cutoff`` and extrapolation."""
    if d not in (2, 3):
        raise PreconditionError(f"lattice oracles cover d = 2 and d = 3, got {d}")
    forms = [(form, e) for form, e in forms if e]
    if any(form.dimension != d for form, _ in forms):
        raise PreconditionError(f"every form must have {d} variables")
    if failed := subset_violations(d, forms_to_subset_exponents(forms)):
        raise DivergentError("the lattice sum diverges", failed)

    settings = get_settings()
    cutoff = cutoff or settings.oracle_cutoff
    levels = levels or settings.oracle_levels
    logger.debug("lattice sum over %d forms, d=%d, N=%d", len(forms), d, cutoff)
    return extrapolate(_cube_partial_sums(forms, d, cutoff), levels, logs=d)


def direct_mzv_sum(index, cutoff: int | None = None, levels: int | None = None) -> NumericResult:
    """ζ(s1, ..., sd) by nested partial sums; independent of eval_mzv."""
    index = MzvIndex.of(index)
    if failed := convergence_violations(index):
        raise DivergentError(f"{index} diverges", failed)
    settings = get_settings()
    cutoff = cutoff or settings.oracle_cutoff * DIRECT_SUM_CUTOFF_FACTOR
    levels = levels or settings.oracle_levels

    m = np.arange(1, cutoff + 1, dtype=float)
    inner = m ** -float(index[-1])
    for s in reversed(index.exponents[:-1]):
        strict = np.concatenate(([0.0], np.cumsum(inner)[:-1]))
        inner = m ** -float(s) * strict
    return extrapolate(np.cumsum(inner), levels, logs=index.depth)


def oracle_tech_sum(
    s: int, t: int, cutoff: int | None = None, levels: int | None = None
) -> NumericResult:
    """Σ_{m1, m2} Σ_{n = m2+1}^{m1+m2} m1^-s (m1+m2)^-1 n^-t."""
    if s < 1 or t < 1 or s + t < 3:
        raise PreconditionError(f"the double sum needs s, t >= 1 and s+t >= 3, got ({s}, {t})")
    settings = get_settings()
    cutoff = cutoff or settings.oracle_cutoff
    levels = levels or settings.oracle_levels

    n = np.arange(0, 2 * cutoff + 1, dtype=float)
    harmonic = np.concatenate(([0.0], np.cumsum(n[1:] ** -float(t))))
    m1 = np.arange(1, cutoff + 1)[:, None]
    m2 = np.arange(1, cutoff + 1)[None, :]
    grid = m1 ** -float(s) / (m1 + m2) * (harmonic[m1 + m2] - harmonic[m2])
    return extrapolate(_diagonal_partial_sums(grid), levels, logs=2)


def _oracle(args: WittenArgs, cutoff: int | None, levels: int | None) -> NumericResult:
    args.check_convergent()
    d = args.slot_forms[0].dimension
    return oracle_lattice_sum(args.forms, d, cutoff, levels)


def oracle_sl4(args, cutoff: int | None = None, levels: int | None = None) -> NumericResult:
    return _oracle(as_args(WittenKind.SL4, args), cutoff, levels)


def oracle_zeta3(args, cutoff: int | None = None, levels: int | None = None) -> NumericResult:
    return _oracle(as_args(WittenKind.ZETA3, args), cutoff, levels)


def oracle_mt(args, cutoff: int | None = None, levels: int | None = None) -> NumericResult:
    """``args`` is ``(s1, ..., sd, s)``."""
    return _oracle(as_args(WittenKind.MT, args), cutoff, levels)
