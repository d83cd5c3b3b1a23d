# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

"""Closed forms for the boundary pieces of ζ_sl4(0,0,0,s4,s5,s6).

``case_A`` is ζ_sl4(s1,0,0,s4,t,0). ``case_B_limit`` is the limit of the
truncated difference ζ_sl4^(N)(s,0,0,s4,0,1) - ζ_sl4^(N)(s,0,0,s4,1,0) when
s4 >= 2. When s4 = 1 that limit is minus the double sum handled by
``tech_lemma``, which needs regularized MZVs.
"""

import logging

from wittenzeta.algebra.arith import binomial
from wittenzeta.algebra.mzv import (
    MzvCombination,
    canonicalize,
    euler_identity_check,
    expand_regularized,
)
from wittenzeta.exceptions import DivergentResidueError, PreconditionError
from wittenzeta.reduction.mordell_tornheim import mt
from wittenzeta.trace import record

logger = logging.getLogger(__name__)

Z = MzvCombination.zeta
R = MzvCombination.regularized


def case_A(s1: int, s4: int, t: int) -> MzvCombination:
    """ζ(t)ζ(s4,s1) - ζ_MT(s1,t;s4) - ζ_MT(s1,t,0;s4)"""
    if s1 < 1 or s4 < 2 or t < 2:
        raise PreconditionError(f"case A needs s1 >= 1, s4 >= 2, t >= 2, got ({s1}, {s4}, {t})")
    record("case_A", (s1, s4, t))
    return canonicalize(Z(t) * Z(s4, s1)) - mt((s1, t), s4) - mt((s1, t, 0), s4)


def case_B_limit(s: int, s4: int) -> MzvCombination:
    if s < 1 or s4 < 2:
        raise PreconditionError(f"the limit needs s >= 1 and s4 >= 2, got ({s}, {s4})")
    record("case_B_limit", (s, s4))
    return (
        mt((s, 1), s4)
        - Z(s4, s, 1)
        - Z(s4, s + 1)
        - Z(s4, 1, s)
        - Z(s4 + 1, s)
        + mt((s, 1, 0), s4)
    )


def tech_lemma_regularized(s: int, t: int) -> MzvCombination:
    """Σ_{m1,m2} Σ_{n=m2+1}^{m1+m2} m1^-s (m1+m2)^-1 n^-t before regularization is undone."""
    if s < 1 or t < 1 or s + t < 3:
        raise PreconditionError(f"the double sum needs s, t >= 1 and s+t >= 3, got ({s}, {t})")
    combo = R(1, t, s) + R(1, s + t) + R(1, s, t) + Z(t + 1, s) - mt((s, t), 1)
    # the a = 0 and b = 0 terms cancel ζ̄(1,t,s) and ζ̄(1,s,t) symbolically
    combo -= MzvCombination.linear_sum(
        (binomial(t + a - 1, a), R(1, t + a, s - a)) for a in range(s)
    )
    combo -= MzvCombination.linear_sum(
        (binomial(s + b - 1, b), R(1, s + b, t - b)) for b in range(t)
    )
    return combo


def tech_lemma_residue(s: int, t: int) -> MzvCombination:
    """T-coefficient minus the Euler identity it must equal. Always zero."""
    expanded = expand_regularized(tech_lemma_regularized(s, t))
    lhs, rhs = euler_identity_check(s, t)
    return expanded.t_coefficient(1) - (lhs - rhs)


def tech_lemma(s: int, t: int) -> MzvCombination:
    record("tech_lemma", (s, t))
    expanded = expand_regularized(tech_lemma_regularized(s, t))
    if expanded.max_t_power > 1:
        raise DivergentResidueError(f"T^{expanded.max_t_power} survived in the ({s}, {t}) sum")
    residue = tech_lemma_residue(s, t)
    if not residue.is_zero():
        raise DivergentResidueError(
            f"T-coefficient of the ({s}, {t}) sum does not cancel: {residue}"
        )
    logger.debug("T-coefficient of the (%s, %s) sum cancels", s, t)
    return canonicalize(expanded.t_coefficient(0))
