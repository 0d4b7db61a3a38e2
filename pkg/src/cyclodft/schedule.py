"""Fast evaluation schedule for a transform plan and its operation counts.

Every block of L (and L^-1) is a circulant: entry (s, p) is b^(2^((s+p) mod k)).
Multiplying it by a vector is a length-k cyclic convolution, which for k = 2
and k = 3 can be done with fewer general products than the direct k^2.
The binary matrices A and A^-1 are applied by straight-line XOR programs
produced by greedy common-pair elimination.

Counting convention: a multiplication is counted only when the constant
operand is neither 0 nor 1; every XOR of two field elements is one addition.
Counts depend on the program only, never on the data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .gf2linalg import as_binary
from .gf2m import FieldContext

if TYPE_CHECKING:  # pragma: no cover
    from .factorize import TransformPlan


@dataclass
class OpCounter:
    mults: int = 0
    adds: int = 0

    def reset(self) -> None:
        self.mults = 0
        self.adds = 0


class EvalContext:
    """Field operations routed through an optional caller-owned counter."""

    __slots__ = ("field", "counter")

    def __init__(self, field: FieldContext, counter: OpCounter | None = None):
        self.field = field
        self.counter = counter

    def add(self, a: int, b: int) -> int:
        if self.counter is not None:
            self.counter.adds += 1
        return a ^ b

    def cmul(self, c: int, x: int) -> int:
        """Multiply by the plan constant ``c``."""
        if c == 0:
            return 0
        if c == 1:
            return x
        if self.counter is not None:
            self.counter.mults += 1
        return self.field.mul(c, x)

    def xor_all(self, values: Sequence[int]) -> int:
        it = iter(values)
        acc = next(it, 0)
        for v in it:
            acc = self.add(acc, v)
        return acc


# ---------------------------------------------------------------------------
# block strategies


class BlockStrategy:
    label = "?"

    def evaluate(self, ctx: EvalContext, xs: Sequence[int]) -> list[int]:
        raise NotImplementedError


@dataclass(frozen=True)
class Direct(BlockStrategy):
    block: tuple[tuple[int, ...], ...]
    label = "Direct"

    def evaluate(self, ctx, xs):
        if ctx.counter is None:
            return self._evaluate_fast(ctx.field, xs)
        out = []
        for row in self.block:
            terms = [ctx.cmul(c, x) for c, x in zip(row, xs) if c != 0]
            out.append(ctx.xor_all(terms))
        return out

    def _evaluate_fast(self, field: FieldContext, xs):
        log, antilog, n = field.log_table, field.antilog_table, field.n
        lx = [log[x] if x else None for x in xs]
        out = []
        for row in self.block:
            acc = 0
            for c, l in zip(row, lx):
                if c and l is not None:
                    acc ^= antilog[(log[c] + l) % n]
            out.append(acc)
        return out


@dataclass(frozen=True)
class FastM2(BlockStrategy):
    """Block [[b, b^2], [b^2, b]] with b + b^2 = 1: one product."""

    beta: int
    label = "FastM2"

    def evaluate(self, ctx, xs):
        x0, x1 = xs
        p = ctx.cmul(self.beta, ctx.add(x0, x1))
        return [ctx.add(p, x1), ctx.add(p, x0)]


@dataclass(frozen=True)
class FastM3(BlockStrategy):
    """Block with rows (b0 b1 b2), (b1 b2 b0), (b2 b0 b1), b0 + b1 + b2 = 1.

    Reversing the input turns the block product into a cyclic convolution
    mod x^3 - 1 = (x + 1)(x^2 + x + 1).  The (x + 1) residue is the plain sum
    of the inputs (the constant's residue is its trace, 1); the quadratic
    residue is a 2-term product with three multiplications.
    """

    u0: int  # b0 + b2
    u1: int  # b1 + b2
    u01: int  # b0 + b1
    label = "FastM3"

    @classmethod
    def from_basis(cls, b: Sequence[int]) -> "FastM3":
        b0, b1, b2 = b
        return cls(b0 ^ b2, b1 ^ b2, b0 ^ b1)

    def evaluate(self, ctx, xs):
        x0, x1, x2 = xs
        v0 = ctx.add(x0, x1)
        v1 = ctx.add(x2, x1)
        total = ctx.add(v0, x2)
        m0 = ctx.cmul(self.u0, v0)
        m1 = ctx.cmul(self.u1, v1)
        m2 = ctx.cmul(self.u01, ctx.add(v0, v1))
        c0 = ctx.add(m0, m1)
        c1 = ctx.add(m2, m0)
        y0 = ctx.add(total, c1)
        y1 = ctx.add(total, c0)
        y2 = ctx.add(y0, c0)
        return [y0, y1, y2]


@dataclass(frozen=True)
class Identity(BlockStrategy):
    label = "Unity"

    def evaluate(self, ctx, xs):
        return list(xs)


def _block_matches_direct(field: FieldContext, strat: BlockStrategy, block) -> bool:
    """Compare ``strat`` with Direct on every input vector over the subfield."""
    k = len(block)
    direct = Direct(block)
    ctx = EvalContext(field)
    sub = [0, *field.subfield_elements(k)]
    for xs in itertools.product(sub, repeat=k):
        if strat.evaluate(ctx, xs) != direct.evaluate(ctx, xs):
            return False
    return True


def choose_strategy(field: FieldContext, block, basis: Sequence[int], fast: bool = True) -> BlockStrategy:
    k = len(block)
    block = tuple(tuple(r) for r in block)
    if k == 1 and block[0][0] == 1:
        return Identity()
    if not fast:
        return Direct(block)
    cand: BlockStrategy | None = None
    trace = 0
    for b in basis:
        trace ^= b
    if k == 2 and trace == 1:
        cand = FastM2(basis[0])
    elif k == 3 and trace == 1:
        cand = FastM3.from_basis(basis)
    if cand is not None and _block_matches_direct(field, cand, block):
        return cand
    return Direct(block)


# ---------------------------------------------------------------------------
# XOR programs for binary matrices


@dataclass(frozen=True)
class AdditionPlan:
    """Straight-line XOR program computing M @ v.

    Variables ``0 .. n_inputs-1`` are the inputs; step ``i`` defines variable
    ``n_inputs + i`` as the sum of two earlier variables.  ``outputs[r]`` is
    the variable holding row ``r`` (``None`` for an all-zero row).
    """

    n_inputs: int
    steps: tuple[tuple[int, int], ...]
    outputs: tuple[int | None, ...]

    @property
    def additions(self) -> int:
        return len(self.steps)

    def evaluate(self, ctx: EvalContext, v: Sequence[int]) -> list[int]:
        vals = list(v)
        append = vals.append
        for a, b in self.steps:
            append(vals[a] ^ vals[b])
        if ctx.counter is not None:
            ctx.counter.adds += len(self.steps)
        return [0 if o is None else vals[o] for o in self.outputs]

    def to_matrix(self) -> np.ndarray:
        """The binary matrix this program computes (for checking)."""
        vecs = [1 << i for i in range(self.n_inputs)]
        for a, b in self.steps:
            vecs.append(vecs[a] ^ vecs[b])
        M = np.zeros((len(self.outputs), self.n_inputs), dtype=np.uint8)
        for r, o in enumerate(self.outputs):
            if o is not None:
                for c in range(self.n_inputs):
                    M[r, c] = (vecs[o] >> c) & 1
        return M


def _emit_rows(n_inputs: int, steps: list, rows: list[list[int]]) -> AdditionPlan:
    outputs: list[int | None] = []
    for vars_ in rows:
        if not vars_:
            outputs.append(None)
            continue
        acc = vars_[0]
        for v in vars_[1:]:
            steps.append((acc, v))
            acc = n_inputs + len(steps) - 1
        outputs.append(acc)
    return AdditionPlan(n_inputs, tuple(steps), tuple(outputs))


def naive_addition_plan(M) -> AdditionPlan:
    """Row-by-row evaluation: ones(row) - 1 additions per nonzero row."""
    B = as_binary(M)
    rows = [list(np.nonzero(r)[0].tolist()) for r in B]
    return _emit_rows(B.shape[1], [], rows)


def cse_addition_plan(M) -> AdditionPlan:
    """Greedy common-pair elimination.

    While some pair of variables occurs together in two or more rows, the most
    frequent pair (lowest indices on ties) becomes a new variable.  Each
    extraction of a pair shared by k >= 2 rows saves k - 1 additions, so the
    result never exceeds ``ones(M) - nonzero_rows``.

    Pair counts are tracked lazily: ``bound[x]`` is an upper bound on the best
    count of any pair containing column ``x``, refreshed only when ``x`` is the
    candidate maximum.
    """
    B = as_binary(M)
    n_rows, n_in = B.shape
    cap = max(16, 2 * n_in)
    X = np.zeros((n_rows, cap), dtype=np.float32)
    X[:, :n_in] = B
    ncols = n_in
    steps: list[tuple[int, int]] = []

    def pair_counts(x: int) -> np.ndarray:
        cnt = X[:, x] @ X[:, :ncols]
        cnt[x] = 0
        return cnt

    bound = np.zeros(cap, dtype=np.float32)
    if ncols:
        gram = X[:, :ncols].T @ X[:, :ncols]
        np.fill_diagonal(gram, 0)
        bound[:ncols] = gram.max(axis=1)

    while ncols:
        x = int(np.argmax(bound[:ncols]))
        if bound[x] < 2:
            break
        cnt = pair_counts(x)
        best = cnt.max()
        if best != bound[x]:
            bound[x] = best
            continue
        y = int(np.argmax(cnt))
        a, b = (x, y) if x < y else (y, x)
        rows = np.nonzero((X[:, a] > 0) & (X[:, b] > 0))[0]
        if ncols == cap:
            cap *= 2
            X = np.concatenate([X, np.zeros_like(X)], axis=1)
            bound = np.concatenate([bound, np.zeros_like(bound)])
        t = ncols
        X[rows, a] = 0
        X[rows, b] = 0
        X[rows, t] = 1
        ncols += 1
        steps.append((a, b))
        cnt_t = pair_counts(t)
        bound[:ncols] = np.maximum(bound[:ncols], cnt_t)
        bound[t] = cnt_t.max() if ncols > 1 else 0

    rows = [np.nonzero(X[r, :ncols])[0].tolist() for r in range(n_rows)]
    return _emit_rows(n_in, steps, rows)


# ---------------------------------------------------------------------------
# schedule


@dataclass(frozen=True)
class EvalSchedule:
    forward_blocks: tuple[BlockStrategy, ...]
    inverse_blocks: tuple[BlockStrategy, ...]
    a_plan: AdditionPlan
    a_inv_plan: AdditionPlan

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.forward_blocks)


def _block_strategies(plan: "TransformPlan", fast: bool):
    fld = plan.field
    fwd, inv = [], []
    for coset, blk, blk_inv in zip(plan.structure.cosets, plan.L_blocks, plan.L_inv_blocks):
        k = coset.size
        fwd.append(choose_strategy(fld, blk, plan.bases.basis(k).elements, fast))
        inv.append(choose_strategy(fld, blk_inv, plan.bases.dual(k).elements, fast))
    return tuple(fwd), tuple(inv)


def build_schedule(plan: "TransformPlan", fast: bool = True, cse: bool = True) -> EvalSchedule:
    """Pick a strategy per block (fast paths for sizes 2 and 3) and XOR programs."""
    fwd, inv = _block_strategies(plan, fast)
    make = cse_addition_plan if cse else naive_addition_plan
    return EvalSchedule(fwd, inv, make(plan.A), make(plan.A_inv))


def direct_schedule(plan: "TransformPlan") -> EvalSchedule:
    """Plan's schedule with every block evaluated directly (same XOR programs)."""
    fwd, inv = _block_strategies(plan, fast=False)
    return replace(plan.schedule, forward_blocks=fwd, inverse_blocks=inv)


def apply_blocks(
    ctx: EvalContext, strategies: Sequence[BlockStrategy], offsets: Sequence[int], v: Sequence[int]
) -> list[int]:
    out: list[int] = []
    ends = list(offsets[1:]) + [len(v)]
    for strat, lo, hi in zip(strategies, offsets, ends):
        out.extend(strat.evaluate(ctx, v[lo:hi]))
    return out


@dataclass(frozen=True)
class CostReport:
    multiplications: int
    additions: int
    labels: tuple[str, ...] = field(default=())
    a_additions: int = 0
    block_additions: int = 0


def report_cost(plan: "TransformPlan", schedule: EvalSchedule | None, f: Sequence[int], direction: str = "forward") -> CostReport:
    """Run one instrumented transform and return its exact operation counts.

    ``direction`` is ``forward`` (A L Pi f), ``inverse`` (Pi^-1 L^-1 A^-1 F)
    or ``theorem1`` (E Pi^-1 L^-1 A^-1 f).
    """
    from . import transform

    schedule = schedule or plan.schedule
    runners = {
        "forward": transform.cyclotomic_dft,
        "inverse": transform.cyclotomic_idft,
        "theorem1": transform.forward_via_inverse_factors,
    }
    if direction not in runners:
        raise ValueError(f"unknown direction {direction!r}")
    counter = OpCounter()
    runners[direction](f, plan, schedule, counter=counter)
    a_adds = (schedule.a_plan if direction == "forward" else schedule.a_inv_plan).additions
    blocks = schedule.forward_blocks if direction == "forward" else schedule.inverse_blocks
    return CostReport(
        multiplications=counter.mults,
        additions=counter.adds,
        labels=tuple(s.label for s in blocks),
        a_additions=a_adds,
        block_additions=counter.adds - a_adds,
    )
