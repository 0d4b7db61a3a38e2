"""Normal bases of the subfields GF(2^mk) and their trace-dual bases."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import NoBasisFound, NotInSubfield, NotNormal, SingularGram, SingularMatrix
from .gf2linalg import invert_gf2_matrix, row_space_rank_of_masks
from .gf2m import FieldContext


@dataclass(frozen=True)
class NormalBasis:
    """Conjugates (b, b^2, b^4, ...) of one generator b in GF(2^degree)."""

    generator: int
    elements: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.elements)

    def __getitem__(self, s: int) -> int:
        return self.elements[s]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class BasisSet:
    """One normal basis and its dual per subfield degree occurring in the plan."""

    bases: Mapping[int, NormalBasis]
    duals: Mapping[int, NormalBasis]

    def basis(self, mk: int) -> NormalBasis:
        return self.bases[mk]

    def dual(self, mk: int) -> NormalBasis:
        return self.duals[mk]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.bases))


def conjugates(field: FieldContext, g: int, mk: int) -> tuple[int, ...]:
    out = [g]
    for _ in range(mk - 1):
        out.append(field.mul(out[-1], out[-1]))
    return tuple(out)


def is_normal_generator(field: FieldContext, g: int, mk: int) -> bool:
    if not field.in_subfield(g, mk) or g == 0:
        return False
    return row_space_rank_of_masks(list(conjugates(field, g, mk))) == mk


def find_normal_basis(
    field: FieldContext, mk: int, generator_hint: int | None = None
) -> NormalBasis:
    """Normal basis of GF(2^mk) inside ``field``.

    Without a hint the subfield elements are scanned by ascending exponent of
    alpha and the first generator with independent conjugates is returned.
    """
    if mk < 1 or field.m % mk:
        raise NotInSubfield(f"GF(2^{mk}) is not a subfield of GF(2^{field.m})")
    if generator_hint is not None:
        if not field.in_subfield(generator_hint, mk):
            raise NotInSubfield(
                f"hint {field.format(generator_hint)} is not in GF(2^{mk})"
            )
        if not is_normal_generator(field, generator_hint, mk):
            raise NotNormal(
                f"conjugates of {field.format(generator_hint)} are linearly dependent"
            )
        return NormalBasis(generator_hint, conjugates(field, generator_hint, mk))
    for g in field.subfield_elements(mk):
        if is_normal_generator(field, g, mk):
            return NormalBasis(g, conjugates(field, g, mk))
    raise NoBasisFound(f"no normal basis found for GF(2^{mk})")  # pragma: no cover


def gram_matrix(field: FieldContext, b: NormalBasis) -> np.ndarray:
    mk = b.degree
    G = np.zeros((mk, mk), dtype=np.uint8)
    for s in range(mk):
        for t in range(mk):
            G[s, t] = field.subfield_trace(field.mul(b[s], b[t]), mk)
    return G


def dual_basis(field: FieldContext, b: NormalBasis) -> NormalBasis:
    """Trace-dual basis: Tr(b_s * b'_t) = delta_st.

    With G_st = Tr(b_s b_t), the dual element b'_t is sum_u (G^-1)_ut b_u.
    """
    mk = b.degree
    try:
        Ginv = invert_gf2_matrix(gram_matrix(field, b))
    except SingularMatrix:
        raise SingularGram("Gram matrix is singular: input is not a basis") from None
    dual = []
    for t in range(mk):
        acc = 0
        for u in range(mk):
            if Ginv[u, t]:
                acc ^= b[u]
        dual.append(acc)
    # the dual of a normal basis is normal: its elements are conjugates of dual[0]
    assert tuple(dual) == conjugates(field, dual[0], mk), "dual basis is not normal"
    return NormalBasis(dual[0], tuple(dual))


def coordinates(
    field: FieldContext, x: int, b: NormalBasis, b_dual: NormalBasis
) -> tuple[int, ...]:
    """Bits a_s with x = sum_s a_s b_s, via a_s = Tr(x * b'_s)."""
    mk = b.degree
    if not field.in_subfield(x, mk):
        raise NotInSubfield(f"{field.format(x)} is not in GF(2^{mk})")
    return tuple(field.subfield_trace(field.mul(x, d), mk) for d in b_dual.elements)


def combine(b: NormalBasis, coords: Iterable[int]) -> int:
    acc = 0
    for bit, e in zip(coords, b.elements):
        if bit:
            acc ^= e
    return acc


def build_basis_set(
    field: FieldContext, degrees: Iterable[int], hints: Mapping[int, int] | None = None
) -> BasisSet:
    """Bases for each distinct degree; ``hints`` maps degree -> generator."""
    hints = dict(hints or {})
    unknown = set(hints) - set(degrees)
    if unknown:
        raise NotInSubfield(
            f"basis hints for degree(s) {sorted(unknown)} match no coset size"
        )
    bases, duals = {}, {}
    for mk in sorted(set(degrees)):
        nb = find_normal_basis(field, mk, hints.get(mk))
        bases[mk] = nb
        duals[mk] = dual_basis(field, nb)
    return BasisSet(bases, duals)
