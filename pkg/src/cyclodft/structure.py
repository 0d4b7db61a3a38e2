"""Cyclotomic cosets of 2 modulo n, the index vector Z and permutations Pi, E."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import LengthMismatch


class Ordering(str, enum.Enum):
    # zero coset, then size descending, ties by leader ascending
    PAPER_CANONICAL = "paper"
    # zero coset, then leader ascending
    LEADER_ASCENDING = "leader"

    @classmethod
    def parse(cls, value: "str | Ordering") -> "Ordering":
        if isinstance(value, Ordering):
            return value
        v = value.strip().lower().replace("-", "").replace("_", "")
        aliases = {
            "paper": cls.PAPER_CANONICAL,
            "papercanonical": cls.PAPER_CANONICAL,
            "leader": cls.LEADER_ASCENDING,
            "leaderascending": cls.LEADER_ASCENDING,
        }
        try:
            return aliases[v]
        except KeyError:
            raise ValueError(f"unknown coset ordering {value!r}") from None


@dataclass(frozen=True)
class Coset:
    leader: int
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class CosetStructure:
    n: int
    ordering: Ordering
    cosets: tuple[Coset, ...]
    z: tuple[int, ...]

    @property
    def offsets(self) -> tuple[int, ...]:
        """Start position of each coset inside Z."""
        out, pos = [], 0
        for c in self.cosets:
            out.append(pos)
            pos += c.size
        return tuple(out)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.cosets)

    @property
    def pi(self) -> tuple[int, ...]:
        """Pi as an index vector: row i has its 1 in column Z_i."""
        return self.z

    @property
    def e_perm(self) -> tuple[int, ...]:
        return reversal_index(self.n)

    def pi_matrix(self) -> np.ndarray:
        return permutation_matrix(self.z)

    def e_matrix(self) -> np.ndarray:
        return permutation_matrix(self.e_perm)


def reversal_index(n: int) -> tuple[int, ...]:
    return tuple((-i) % n for i in range(n))


def permutation_matrix(index: Sequence[int]) -> np.ndarray:
    n = len(index)
    P = np.zeros((n, n), dtype=np.uint8)
    P[np.arange(n), list(index)] = 1
    return P


def invert_permutation(index: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(index)
    for i, j in enumerate(index):
        inv[j] = i
    return tuple(inv)


def _orbit(c: int, n: int) -> tuple[int, ...]:
    orbit = [c]
    x = (2 * c) % n
    while x != c:
        orbit.append(x)
        x = (2 * x) % n
    return tuple(orbit)


def build_cosets(
    n: int, ordering: "Ordering | str" = Ordering.PAPER_CANONICAL, m: int | None = None
) -> CosetStructure:
    """Partition Z/n into cyclotomic cosets {c, 2c, 4c, ...}.

    ``n`` must be 2^m - 1 (for the given ``m`` when supplied).

    >>> build_cosets(7).z
    (0, 1, 2, 4, 3, 6, 5)
    """
    ordering = Ordering.parse(ordering)
    if n < 1 or (n + 1) & n or (m is not None and n != (1 << m) - 1):
        raise LengthMismatch(f"length {n} is not 2^m - 1" + (f" for m={m}" if m else ""))
    seen = [False] * n
    cosets = []
    for c in range(n):
        if seen[c]:
            continue
        orbit = _orbit(c, n)
        for x in orbit:
            seen[x] = True
        cosets.append(Coset(c, orbit))
    zero, rest = cosets[0], cosets[1:]
    if ordering is Ordering.PAPER_CANONICAL:
        rest.sort(key=lambda c: (-c.size, c.leader))
    else:
        rest.sort(key=lambda c: c.leader)
    ordered = (zero, *rest)
    z = tuple(x for c in ordered for x in c.elements)
    return CosetStructure(n=n, ordering=ordering, cosets=ordered, z=z)


def _check_len(v: Sequence, n: int) -> None:
    if len(v) != n:
        raise LengthMismatch(f"vector has length {len(v)}, expected {n}")


def apply_pi(f: Sequence, s: CosetStructure) -> list:
    """(Pi f)_i = f[Z_i]."""
    _check_len(f, s.n)
    return [f[j] for j in s.z]


def apply_pi_inverse(g: Sequence, s: CosetStructure) -> list:
    _check_len(g, s.n)
    out = [None] * s.n
    for i, j in enumerate(s.z):
        out[j] = g[i]
    return out


def apply_e(v: Sequence, s: CosetStructure | None = None) -> list:
    """(E v)_0 = v_0, (E v)_i = v_{n-i}; E is an involution."""
    n = len(v) if s is None else s.n
    _check_len(v, n)
    return [v[(-i) % n] for i in range(n)]


def compose_pi_e(s: CosetStructure) -> tuple[int, ...]:
    """Index vector of Pi*E: ((Pi E) F)_i = F[-Z_i mod n]."""
    return tuple((-z) % s.n for z in s.z)
