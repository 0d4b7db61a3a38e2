import random

import numpy as np
import pytest

from cyclodft.errors import LengthMismatch
from cyclodft.gf2m import poly_mod
from cyclodft.structure import (
    Ordering,
    apply_e,
    apply_pi,
    apply_pi_inverse,
    build_cosets,
    compose_pi_e,
)


def count_irreducible_factors(n):
    """Factor x^n - 1 over GF(2) by repeated smallest-divisor trial division."""
    p = (1 << n) | 1
    count = 0
    while p.bit_length() > 1:
        q = 2
        while poly_mod(p, q):
            q += 1
        # the smallest-degree nontrivial divisor is irreducible; x^n-1 is squarefree for odd n
        p = _poly_div(p, q)
        count += 1
    return count


def _poly_div(a, b):
    q = 0
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    assert a == 0
    return q


def test_n7_paper_ordering():
    s = build_cosets(7, Ordering.PAPER_CANONICAL)
    assert [c.elements for c in s.cosets] == [(0,), (1, 2, 4), (3, 6, 5)]
    assert s.z == (0, 1, 2, 4, 3, 6, 5)


def test_n15_paper_ordering():
    s = build_cosets(15, "paper")
    assert [c.elements for c in s.cosets] == [
        (0,), (1, 2, 4, 8), (3, 6, 12, 9), (7, 14, 13, 11), (5, 10)
    ]
    assert s.z == (0, 1, 2, 4, 8, 3, 6, 12, 9, 7, 14, 13, 11, 5, 10)


def test_n15_leader_ordering_differs():
    s = build_cosets(15, Ordering.LEADER_ASCENDING)
    assert [c.leader for c in s.cosets] == [0, 1, 3, 5, 7]


def test_n3():
    s = build_cosets(3)
    assert [c.elements for c in s.cosets] == [(0,), (1, 2)]
    assert s.z == (0, 1, 2)


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        build_cosets(9)
    with pytest.raises(LengthMismatch):
        build_cosets(7, m=4)


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("ordering", list(Ordering))
def test_partition_invariants(m, ordering):
    n = (1 << m) - 1
    s = build_cosets(n, ordering, m)
    assert sorted(s.z) == list(range(n))
    assert sum(s.sizes) == n
    for c in s.cosets:
        assert {(2 * x) % n for x in c.elements} == set(c.elements)
        assert c.leader == min(c.elements)
        assert m % c.size == 0
        assert (c.leader << c.size) % n == c.leader
        for a, b in zip(c.elements, c.elements[1:] + c.elements[:1]):
            assert (2 * a) % n == b
    assert len(s.cosets) == count_irreducible_factors(n)


def test_permutation_matrices():
    s = build_cosets(15)
    for P in (s.pi_matrix(), s.e_matrix()):
        assert (P.sum(axis=0) == 1).all() and (P.sum(axis=1) == 1).all()
    E = s.e_matrix().astype(int)
    assert np.array_equal(E @ E, np.eye(15, dtype=int))


def test_apply_pi_examples():
    s7 = build_cosets(7)
    f = [f"f{i}" for i in range(7)]
    assert apply_pi(f, s7) == ["f0", "f1", "f2", "f4", "f3", "f6", "f5"]
    s15 = build_cosets(15)
    assert apply_pi(list(range(15)), s15) == [0, 1, 2, 4, 8, 3, 6, 12, 9, 7, 14, 13, 11, 5, 10]
    with pytest.raises(LengthMismatch):
        apply_pi([1, 2], s7)


def test_apply_pi_matches_matrix_form():
    rng = random.Random(3)
    s = build_cosets(31)
    P = s.pi_matrix().astype(int)
    for _ in range(20):
        v = [rng.randrange(1000) for _ in range(31)]
        assert apply_pi(v, s) == (P @ np.array(v)).tolist()
        assert apply_pi_inverse(apply_pi(v, s), s) == v


def test_apply_e_examples():
    s = build_cosets(7)
    v = [f"v{i}" for i in range(7)]
    assert apply_e(v, s) == ["v0", "v6", "v5", "v4", "v3", "v2", "v1"]
    assert apply_e(apply_e(v, s), s) == v
    assert apply_e([5] * 7, s) == [5] * 7
    with pytest.raises(LengthMismatch):
        apply_e([1, 2, 3], s)


def test_compose_pi_e():
    assert compose_pi_e(build_cosets(7)) == (0, 6, 5, 3, 4, 1, 2)
    assert compose_pi_e(build_cosets(3)) == (0, 2, 1)
    s = build_cosets(15)
    PE = (s.pi_matrix().astype(int) @ s.e_matrix().astype(int))
    F = np.arange(15)
    assert (PE @ F).tolist() == [F[i] for i in compose_pi_e(s)]
    zero = [0] * 15
    assert [zero[i] for i in compose_pi_e(s)] == zero
