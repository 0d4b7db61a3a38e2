"""The factorization W = A L Pi and its inverse factors A^-1, L^-1.

A holds the GF(2) coordinates a_{k,j,s} of alpha^(j c_k) in the normal basis
of coset k; L is block diagonal with circulant blocks of basis conjugates.
L^-1 is assembled from the dual bases alone, never by numeric inversion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .bases import BasisSet, build_basis_set, conjugates, coordinates
from .errors import IndexOutOfRange, NotNormal, VerificationFailed
from .gf2linalg import gf2_matmul, invert_gf2_matrix
from .gf2m import FieldContext, format_element, make_field, parse_element
from .schedule import EvalSchedule, build_schedule
from .structure import CosetStructure, Ordering, build_cosets, permutation_matrix
from .textio import format_binary_matrix, format_field_matrix, parse_field_matrix

__all__ = [
    "TransformPlan",
    "build_plan",
    "block_entry",
    "invert_gf2_matrix",
    "circulant_block",
    "vandermonde",
    "plan_to_dict",
    "plan_from_dict",
    "plan_to_json",
    "plan_from_json",
    "factorization_residual",
    "permutation_matrix",
]

Block = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TransformPlan:
    field: FieldContext
    structure: CosetStructure
    bases: BasisSet
    A: np.ndarray
    A_inv: np.ndarray
    L_blocks: tuple[Block, ...]
    L_inv_blocks: tuple[Block, ...]
    schedule: EvalSchedule | None = field(default=None, compare=False, repr=False)
    fixtures_tag: str = ""

    @property
    def n(self) -> int:
        return self.structure.n

    def L_matrix(self, inverse: bool = False) -> list[list[int]]:
        """Dense block-diagonal L (or L^-1) in Z order."""
        blocks = self.L_inv_blocks if inverse else self.L_blocks
        n = self.n
        out = [[0] * n for _ in range(n)]
        for off, blk in zip(self.structure.offsets, blocks):
            for s, row in enumerate(blk):
                for p, v in enumerate(row):
                    out[off + s][off + p] = v
        return out

    def pi_matrix(self) -> np.ndarray:
        return self.structure.pi_matrix()

    def e_matrix(self) -> np.ndarray:
        return self.structure.e_matrix()

    def pi_e_matrix(self) -> np.ndarray:
        return gf2_matmul(self.pi_matrix(), self.e_matrix())


def circulant_block(field: FieldContext, generator: int, mk: int) -> Block:
    """Entry (s, p) = generator^(2^((s+p) mod mk))."""
    conj = [generator]
    for _ in range(mk - 1):
        conj.append(field.mul(conj[-1], conj[-1]))
    return tuple(tuple(conj[(s + p) % mk] for p in range(mk)) for s in range(mk))


def vandermonde(field: FieldContext) -> list[list[int]]:
    """W_ij = alpha^(i j)."""
    n = field.n
    return [[field.exp(i * j) for j in range(n)] for i in range(n)]


def _coefficient_matrix(field: FieldContext, s: CosetStructure, bases: BasisSet) -> np.ndarray:
    n = s.n
    A = np.zeros((n, n), dtype=np.uint8)
    cache: dict[tuple[int, int], tuple[int, ...]] = {}
    for j in range(n):
        for off, coset in zip(s.offsets, s.cosets):
            mk = coset.size
            # alpha^(j c_k) lies in GF(2^mk) since c_k 2^mk = c_k mod n
            x = field.exp(j * coset.leader)
            key = (x, mk)
            if key not in cache:
                cache[key] = coordinates(field, x, bases.basis(mk), bases.dual(mk))
            A[j, off : off + mk] = cache[key]
    return A


def _times_blockdiag(
    field: FieldContext, X: np.ndarray, s: CosetStructure, blocks: Sequence[Block]
) -> np.ndarray:
    """X (binary, n x n) times block-diagonal field matrix, as an int array."""
    out = np.zeros(X.shape, dtype=np.int64)
    for off, blk in zip(s.offsets, blocks):
        k = len(blk)
        B = np.array(blk, dtype=np.int64)
        for r in range(k):
            sel = X[:, off + r].astype(bool)
            out[sel, off : off + k] ^= B[r]
    return out


def _blockdiag_times(
    s: CosetStructure, blocks: Sequence[Block], X: np.ndarray
) -> np.ndarray:
    """Block-diagonal field matrix times X (binary, n x n)."""
    out = np.zeros(X.shape, dtype=np.int64)
    for off, blk in zip(s.offsets, blocks):
        for r, row in enumerate(blk):
            acc = np.zeros(X.shape[1], dtype=np.int64)
            for p, c in enumerate(row):
                acc ^= np.where(X[off + p].astype(bool), c, 0)
            out[off + r] = acc
    return out


def factorization_residual(plan: TransformPlan) -> list[tuple[int, int]]:
    """Cells (j, i) where (A L Pi)_{ji} differs from alpha^(j i)."""
    AL = _times_blockdiag(plan.field, plan.A, plan.structure, plan.L_blocks)
    ALPi = np.zeros_like(AL)
    ALPi[:, list(plan.structure.z)] = AL
    W = np.array(vandermonde(plan.field), dtype=np.int64)
    bad = np.argwhere(ALPi != W)
    return [tuple(map(int, c)) for c in bad]


def l_times_l_inverse_is_identity(plan: TransformPlan) -> bool:
    fld = plan.field
    for blk, inv in zip(plan.L_blocks, plan.L_inv_blocks):
        k = len(blk)
        for s in range(k):
            for t in range(k):
                acc = 0
                for p in range(k):
                    acc ^= fld.mul(blk[s][p], inv[p][t])
                if acc != (1 if s == t else 0):
                    return False
    return True


def build_plan(
    field: FieldContext,
    ordering: "Ordering | str" = Ordering.PAPER_CANONICAL,
    basis_hints: Mapping[int, int] | Sequence[int] | None = None,
    fast: bool = True,
) -> TransformPlan:
    """Build and verify the factorization for the full-length transform.

    ``basis_hints`` is either a mapping degree -> generator or a sequence of
    generators (the degree of each is the smallest subfield containing it).
    """
    s = build_cosets(field.n, ordering, field.m)
    hints = _normalize_hints(field, basis_hints)
    bases = build_basis_set(field, {c.size for c in s.cosets}, hints)
    A = _coefficient_matrix(field, s, bases)
    A_inv = invert_gf2_matrix(A)
    L_blocks = tuple(circulant_block(field, bases.basis(c.size).generator, c.size) for c in s.cosets)
    L_inv_blocks = tuple(circulant_block(field, bases.dual(c.size).generator, c.size) for c in s.cosets)
    tag = "m={} poly={:#x} ordering={} bases={}".format(
        field.m,
        field.primitive_poly,
        s.ordering.value,
        ";".join(f"{k}:{format_element(field, bases.basis(k).generator)}" for k in bases.degrees),
    )
    plan = TransformPlan(field, s, bases, A, A_inv, L_blocks, L_inv_blocks, None, tag)
    bad = factorization_residual(plan)
    if bad:
        raise VerificationFailed(f"A L Pi != W at {len(bad)} cells, first {bad[0]}")
    if not l_times_l_inverse_is_identity(plan):
        raise VerificationFailed("L * L^-1 != I: dual bases are inconsistent")
    schedule = build_schedule(plan, fast=fast)
    object.__setattr__(plan, "schedule", schedule)
    return plan


def _normalize_hints(field: FieldContext, hints) -> dict[int, int]:
    if hints is None:
        return {}
    if isinstance(hints, Mapping):
        return dict(hints)
    out: dict[int, int] = {}
    for h in hints:
        if isinstance(h, str):
            elems = [parse_element(field, t) for t in h.split(",") if t.strip()]
            h = elems[0]
            if tuple(elems[1:]) != conjugates(field, h, len(elems))[1:]:
                raise NotNormal(f"basis {elems} is not a list of conjugates of its first element")
        out[field.degree_of(h)] = h
    return out


def block_entry(plan: TransformPlan, k: int, s: int, p: int, inverse: bool = False) -> int:
    """Entry (s, p) of block k of L or L^-1: b_k^(2^((s+p) mod m_k))."""
    if not 0 <= k < len(plan.structure.cosets):
        raise IndexOutOfRange(f"coset index {k} out of range")
    mk = plan.structure.cosets[k].size
    if not (0 <= s < mk and 0 <= p < mk):
        raise IndexOutOfRange(f"block position ({s}, {p}) outside {mk}x{mk}")
    basis = plan.bases.dual(mk) if inverse else plan.bases.basis(mk)
    return basis.elements[(s + p) % mk]


# ---------------------------------------------------------------------------
# serialization


def _basis_text(field: FieldContext, elements) -> str:
    return ",".join(format_element(field, e) for e in elements)


def plan_to_dict(plan: TransformPlan, fmt: str = "pow") -> dict:
    fld = plan.field
    return {
        "field": {"m": fld.m, "poly": f"{fld.primitive_poly:#x}", "n": fld.n},
        "ordering": plan.structure.ordering.value,
        "tag": plan.fixtures_tag,
        "cosets": [list(c.elements) for c in plan.structure.cosets],
        "Z": list(plan.structure.z),
        "bases": {str(k): _basis_text(fld, plan.bases.basis(k).elements) for k in plan.bases.degrees},
        "duals": {str(k): _basis_text(fld, plan.bases.dual(k).elements) for k in plan.bases.degrees},
        "matrices": {
            "A": format_binary_matrix(plan.A),
            "A_inv": format_binary_matrix(plan.A_inv),
            "L": format_field_matrix(fld, plan.L_matrix(), fmt),
            "L_inv": format_field_matrix(fld, plan.L_matrix(inverse=True), fmt),
            "Pi": format_binary_matrix(plan.pi_matrix()),
            "E": format_binary_matrix(plan.e_matrix()),
        },
    }


def plan_to_json(plan: TransformPlan, fmt: str = "pow") -> str:
    return json.dumps(plan_to_dict(plan, fmt), indent=2)


def plan_from_dict(doc: Mapping) -> TransformPlan:
    """Rebuild a plan from its serialized form and check the stored matrices."""
    f = doc["field"]
    fld = make_field(int(f["m"]), int(f["poly"], 16))
    hints = {int(k): parse_element(fld, v.split(",")[0]) for k, v in doc["bases"].items()}
    plan = build_plan(fld, doc["ordering"], hints)
    stored = doc.get("matrices", {})
    fresh = plan_to_dict(plan)["matrices"]
    for name, text in stored.items():
        if name in ("L", "L_inv"):
            # element format may be hex or power; compare parsed values
            same = parse_field_matrix(fld, text) == parse_field_matrix(fld, fresh[name])
        else:
            same = text.split() == fresh[name].split()
        if not same:
            raise VerificationFailed(f"stored matrix {name} does not match the rebuilt plan")
    return plan


def plan_from_json(text: str) -> TransformPlan:
    return plan_from_dict(json.loads(text))


def permutation_from_matrix(P) -> tuple[int, ...]:
    P = np.asarray(P)
    return tuple(int(np.nonzero(row)[0][0]) for row in P)

