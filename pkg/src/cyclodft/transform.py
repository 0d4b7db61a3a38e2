"""Forward and inverse DFT over GF(2^m), n = 2^m - 1.

``naive_dft`` evaluates F_j = sum_i f_i alpha^(ij) directly and is the oracle
for every factored path.  The factored paths all run through an
:class:`~cyclodft.schedule.EvalContext`, so passing an ``OpCounter`` gives
comparable operation counts across methods.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import LengthMismatch
from .factorize import TransformPlan, _blockdiag_times, vandermonde
from .gf2linalg import gf2_matmul
from .gf2m import FieldContext
from .schedule import EvalContext, EvalSchedule, OpCounter, apply_blocks
from .structure import apply_e, apply_pi, apply_pi_inverse, compose_pi_e

Signal = list[int]
Spectrum = list[int]


def _check_len(v: Sequence[int], n: int) -> None:
    if len(v) != n:
        raise LengthMismatch(f"vector has length {len(v)}, expected {n}")


@lru_cache(maxsize=16)
def _exponent_grid(n: int) -> np.ndarray:
    i = np.arange(n, dtype=np.int64)
    return np.outer(i, i) % n


@lru_cache(maxsize=16)
def _tables(field: FieldContext) -> tuple[np.ndarray, np.ndarray]:
    return np.array(field.log_table, dtype=np.int64), np.array(field.antilog_table, dtype=np.int64)


def naive_dft(f: Sequence[int], field: FieldContext, counter: OpCounter | None = None) -> Spectrum:
    """F = W f with W_ij = alpha^(ij).

    With a counter the product is evaluated term by term (products by the
    constants 0 and 1 are free); without one a vectorized log-domain sum is
    used.
    """
    n = field.n
    _check_len(f, n)
    if counter is not None:
        ctx = EvalContext(field, counter)
        return [ctx.xor_all([ctx.cmul(field.exp(i * j), f[i]) for i in range(n)]) for j in range(n)]
    log, antilog = _tables(field)
    v = np.asarray(f, dtype=np.int64)
    nz = np.nonzero(v)[0]
    if nz.size == 0:
        return [0] * n
    expo = (_exponent_grid(n)[:, nz] + log[v[nz]][None, :]) % n
    return np.bitwise_xor.reduce(antilog[expo], axis=1).tolist()


def naive_idft(F: Sequence[int], field: FieldContext, counter: OpCounter | None = None) -> Signal:
    """f = E W F, using W^-1 = E W."""
    _check_len(F, field.n)
    return apply_e(naive_dft(F, field, counter))


def _schedule(plan: TransformPlan, schedule: EvalSchedule | None) -> EvalSchedule:
    return schedule if schedule is not None else plan.schedule


def cyclotomic_dft(
    f: Sequence[int],
    plan: TransformPlan,
    schedule: EvalSchedule | None = None,
    counter: OpCounter | None = None,
) -> Spectrum:
    """F = A (L (Pi f))."""
    s = plan.structure
    _check_len(f, s.n)
    sch = _schedule(plan, schedule)
    ctx = EvalContext(plan.field, counter)
    g = apply_pi(f, s)
    h = apply_blocks(ctx, sch.forward_blocks, s.offsets, g)
    return sch.a_plan.evaluate(ctx, h)


def _inverse_factors(ctx: EvalContext, v: Sequence[int], plan: TransformPlan, sch: EvalSchedule) -> list[int]:
    """L^-1 (A^-1 v)."""
    g = sch.a_inv_plan.evaluate(ctx, v)
    return apply_blocks(ctx, sch.inverse_blocks, plan.structure.offsets, g)


def cyclotomic_idft(
    F: Sequence[int],
    plan: TransformPlan,
    schedule: EvalSchedule | None = None,
    counter: OpCounter | None = None,
) -> Signal:
    """f = Pi^-1 (L^-1 (A^-1 F))."""
    _check_len(F, plan.n)
    ctx = EvalContext(plan.field, counter)
    return apply_pi_inverse(_inverse_factors(ctx, F, plan, _schedule(plan, schedule)), plan.structure)


def forward_via_inverse_factors(
    f: Sequence[int],
    plan: TransformPlan,
    schedule: EvalSchedule | None = None,
    counter: OpCounter | None = None,
) -> Spectrum:
    """Forward DFT from (Pi E) F = L^-1 A^-1 f, i.e. F = E Pi^-1 (L^-1 A^-1 f)."""
    _check_len(f, plan.n)
    ctx = EvalContext(plan.field, counter)
    g = _inverse_factors(ctx, f, plan, _schedule(plan, schedule))
    return apply_e(apply_pi_inverse(g, plan.structure))


def permuted_spectrum(f: Sequence[int], plan: TransformPlan, schedule: EvalSchedule | None = None) -> Spectrum:
    """(Pi E) F = L^-1 A^-1 f, without undoing the permutation."""
    _check_len(f, plan.n)
    ctx = EvalContext(plan.field)
    return _inverse_factors(ctx, f, plan, _schedule(plan, schedule))


def inverse_via_inverse_factors(
    F: Sequence[int],
    plan: TransformPlan,
    schedule: EvalSchedule | None = None,
    counter: OpCounter | None = None,
) -> Signal:
    """Inverse DFT as E W F with W evaluated through the inverse factors."""
    return apply_e(forward_via_inverse_factors(F, plan, schedule, counter))


def theorem1_matrix_check(plan: TransformPlan) -> bool:
    """True iff A A^-1 = I and (Pi E) W = L^-1 A^-1 entrywise."""
    n = plan.n
    if not np.array_equal(gf2_matmul(plan.A, plan.A_inv), np.eye(n, dtype=np.uint8)):
        return False
    W = vandermonde(plan.field)
    perm = compose_pi_e(plan.structure)
    lhs = np.array([W[r] for r in perm], dtype=np.int64)
    rhs = _blockdiag_times(plan.structure, plan.L_inv_blocks, np.asarray(plan.A_inv))
    return bool(np.array_equal(lhs, rhs))


FORWARD_METHODS = {
    "naive": lambda f, plan, counter=None: naive_dft(f, plan.field, counter),
    "cyclotomic": lambda f, plan, counter=None: cyclotomic_dft(f, plan, None, counter),
    "theorem1": lambda f, plan, counter=None: forward_via_inverse_factors(f, plan, None, counter),
}

INVERSE_METHODS = {
    "naive": lambda F, plan, counter=None: naive_idft(F, plan.field, counter),
    "cyclotomic": lambda F, plan, counter=None: cyclotomic_idft(F, plan, None, counter),
    "theorem1": lambda F, plan, counter=None: inverse_via_inverse_factors(F, plan, None, counter),
}
