"""Arithmetic in GF(2^m), 2 <= m <= 16.

Elements are plain ``int`` bitmasks in the polynomial basis: bit ``i`` is the
coefficient of ``x^i``.  ``alpha`` is the residue class of ``x`` (mask ``0x2``)
and must have multiplicative order ``n = 2^m - 1``, i.e. the defining
polynomial must be primitive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    ElementParseError,
    NotInSubfield,
    NotIrreducible,
    NotPrimitive,
    ZeroToNonpositivePower,
)

FieldElement = int

MIN_DEGREE = 2
MAX_DEGREE = 16

# one primitive polynomial per degree
DEFAULT_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1002D,
}


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, b: int) -> int:
    """Remainder of ``a`` divided by ``b`` as polynomials over GF(2)."""
    db = poly_degree(b)
    while a and poly_degree(a) >= db:
        a ^= b << (poly_degree(a) - db)
    return a


def mul_shift_reduce(a: int, b: int, poly: int, m: int) -> int:
    """Reference product: schoolbook shift-and-add, reducing by ``poly`` per step."""
    r = 0
    top = 1 << m
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return r


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    d = poly_degree(poly)
    if d < 1:
        return False
    for q in range(2, 1 << (d // 2 + 1)):
        if poly_mod(poly, q) == 0:
            return False
    return True


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@dataclass(frozen=True)
class FieldContext:
    """GF(2^m) defined by a primitive polynomial, with log/antilog tables.

    Construct through :func:`make_field`, which validates the polynomial.
    """

    m: int
    primitive_poly: int
    n: int = field(init=False, compare=False)
    log_table: tuple[int, ...] = field(init=False, repr=False, compare=False)
    antilog_table: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m, poly = self.m, self.primitive_poly
        n = (1 << m) - 1
        antilog = [0] * n
        log = [0] * (n + 1)
        x = 1
        for i in range(n):
            if i and x == 1:
                raise NotPrimitive(
                    f"polynomial {poly:#x} is not primitive: x has order {i} < {n}"
                )
            antilog[i] = x
            log[x] = i
            x = mul_shift_reduce(x, 2, poly, m)
        # log[0] is meaningless; keep 0 so the table is total.
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "log_table", tuple(log))
        object.__setattr__(self, "antilog_table", tuple(antilog))

    # -- constants ---------------------------------------------------------

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def alpha(self) -> int:
        return self.antilog_table[1]

    def exp(self, k: int) -> int:
        """alpha^k for any integer k."""
        return self.antilog_table[k % self.n]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        return self.log_table[a]

    def contains(self, a: int) -> bool:
        return isinstance(a, int) and 0 <= a <= self.n

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog_table[(self.log_table[a] + self.log_table[b]) % self.n]

    def mul_slow(self, a: int, b: int) -> int:
        return mul_shift_reduce(a, b, self.primitive_poly, self.m)

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k <= 0:
                raise ZeroToNonpositivePower(f"0^{k} is undefined")
            return 0
        return self.antilog_table[(self.log_table[a] * k) % self.n]

    def inverse(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative inverse")
        return self.antilog_table[(-self.log_table[a]) % self.n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inverse(b))

    def frobenius(self, a: int, p: int) -> int:
        """a^(2^p) by p squarings."""
        if p < 0:
            raise ValueError("frobenius exponent must be nonnegative")
        for _ in range(p % self.m):
            a = self.mul(a, a)
        return a

    def in_subfield(self, a: int, mk: int) -> bool:
        return self.m % mk == 0 and self.frobenius(a, mk) == a

    def subfield_trace(self, a: int, mk: int) -> int:
        """Trace from GF(2^mk) down to GF(2): sum of the mk conjugates of ``a``."""
        if mk < 1 or self.m % mk:
            raise NotInSubfield(f"GF(2^{mk}) is not a subfield of GF(2^{self.m})")
        if self.frobenius(a, mk) != a:
            raise NotInSubfield(f"{a:#x} is not in GF(2^{mk})")
        t = 0
        for _ in range(mk):
            t ^= a
            a = self.mul(a, a)
        return t

    def trace(self, a: int) -> int:
        return self.subfield_trace(a, self.m)

    def degree_of(self, a: int) -> int:
        """Degree of the smallest subfield containing ``a``."""
        for d in divisors(self.m):
            if self.frobenius(a, d) == a:
                return d
        raise AssertionError("unreachable: every element lies in GF(2^m)")

    def subfield_elements(self, mk: int) -> list[int]:
        """Nonzero elements of GF(2^mk) ordered by ascending exponent of alpha."""
        if self.m % mk:
            raise NotInSubfield(f"GF(2^{mk}) is not a subfield of GF(2^{self.m})")
        step = self.n // ((1 << mk) - 1)
        return [self.antilog_table[e * step] for e in range((1 << mk) - 1)]

    # -- text forms --------------------------------------------------------

    def format(self, a: int, fmt: str = "pow") -> str:
        return format_element(self, a, fmt)

    def parse(self, text: str) -> int:
        return parse_element(self, text)


def make_field(m: int, primitive_poly: int) -> FieldContext:
    """Validate ``primitive_poly`` and build GF(2^m).

    >>> make_field(3, 0xB).n
    7
    """
    if not MIN_DEGREE <= m <= MAX_DEGREE:
        raise DegreeMismatch(f"m={m} outside supported range {MIN_DEGREE}..{MAX_DEGREE}")
    if poly_degree(primitive_poly) != m:
        raise DegreeMismatch(
            f"polynomial {primitive_poly:#x} has degree {poly_degree(primitive_poly)}, expected {m}"
        )
    if not is_irreducible(primitive_poly):
        raise NotIrreducible(f"polynomial {primitive_poly:#x} is not irreducible over GF(2)")
    return FieldContext(m, primitive_poly)


_POW_RE = re.compile(r"^(?:a|alpha)(?:\^(-?\d+))?$")


def format_element(fld: FieldContext, a: int, fmt: str = "pow") -> str:
    if fmt == "hex":
        return f"{a:#x}"
    if fmt != "pow":
        raise ValueError(f"unknown element format {fmt!r}")
    if a == 0:
        return "0"
    k = fld.log_table[a]
    return "1" if k == 0 else f"a^{k}"


def parse_element(fld: FieldContext, text: str) -> int:
    """Parse ``0``, ``1``, ``a^k`` / ``a`` (power form) or ``0x..`` (hex mask)."""
    t = text.strip().lower()
    if t in ("0", "1"):
        return int(t)
    if t.startswith("0x"):
        try:
            v = int(t, 16)
        except ValueError:
            raise ElementParseError(f"bad hex element {text!r}") from None
        if v > fld.n:
            raise ElementParseError(f"mask {text} does not fit GF(2^{fld.m})")
        return v
    mo = _POW_RE.match(t)
    if mo is None:
        raise ElementParseError(f"cannot parse field element {text!r}")
    return fld.exp(int(mo.group(1) or 1))
