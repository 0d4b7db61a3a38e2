import itertools
import random
from dataclasses import replace

import pytest

from cyclodft.errors import LengthMismatch
from cyclodft.schedule import OpCounter, direct_schedule
from cyclodft.transform import (
    cyclotomic_dft,
    cyclotomic_idft,
    forward_via_inverse_factors,
    inverse_via_inverse_factors,
    naive_dft,
    naive_idft,
    permuted_spectrum,
    theorem1_matrix_check,
)

from conftest import SWEEP, random_vector, sweep_plan


def dft_by_definition(f, fld):
    """F_j = sum_i f_i alpha^(ij) with shift-and-reduce products."""
    n = fld.n
    out = []
    for j in range(n):
        acc = 0
        for i in range(n):
            w = 1
            for _ in range((i * j) % n):
                w = fld.mul_slow(w, fld.alpha)
            acc ^= fld.mul_slow(f[i], w)
        out.append(acc)
    return out


def test_naive_matches_definition(gf16):
    rng = random.Random(2)
    for _ in range(10):
        f = random_vector(rng, 15)
        assert naive_dft(f, gf16) == dft_by_definition(f, gf16)
        assert naive_dft(f, gf16, OpCounter()) == naive_dft(f, gf16)


def test_naive_closed_forms(gf8):
    n = 7
    assert naive_dft([1] + [0] * 6, gf8) == [1] * 7
    for c in (1, 5):
        assert naive_dft([c] * n, gf8) == [c] + [0] * 6
    delta1 = [0, 1, 0, 0, 0, 0, 0]
    assert naive_dft(delta1, gf8) == [gf8.exp(j) for j in range(n)]
    assert naive_dft([0] * 7, gf8) == [0] * 7


def test_naive_idft_closed_forms(gf8):
    assert naive_idft([1] * 7, gf8) == [1] + [0] * 6
    assert naive_idft([6] + [0] * 6, gf8) == [6] * 7


def test_naive_counts(gf8):
    c = OpCounter()
    naive_dft([1] * 7, gf8, c)
    assert (c.mults, c.adds) == (36, 42)


def test_length_checks(plan7, gf8):
    for fn in (lambda v: naive_dft(v, gf8), lambda v: naive_idft(v, gf8),
               lambda v: cyclotomic_dft(v, plan7), lambda v: cyclotomic_idft(v, plan7),
               lambda v: forward_via_inverse_factors(v, plan7)):
        with pytest.raises(LengthMismatch):
            fn([1, 2, 3])


@pytest.mark.parametrize("m", sorted(SWEEP))
def test_oracle_equivalence_and_round_trips(m):
    plan = sweep_plan(m)
    fld = plan.field
    rng = random.Random(100 + m)
    for _ in range(100):
        f = random_vector(rng, fld.n)
        F = naive_dft(f, fld)
        assert cyclotomic_dft(f, plan) == F
        assert forward_via_inverse_factors(f, plan) == F
        assert naive_idft(F, fld) == f
        assert cyclotomic_idft(F, plan) == f
        assert inverse_via_inverse_factors(F, plan) == f


@pytest.mark.parametrize("m", [3, 4, 6])
def test_linearity(m):
    plan = sweep_plan(m)
    n = plan.n
    rng = random.Random(m)
    paths = [
        lambda v: naive_dft(v, plan.field),
        lambda v: cyclotomic_dft(v, plan),
        lambda v: cyclotomic_idft(v, plan),
        lambda v: forward_via_inverse_factors(v, plan),
    ]
    for _ in range(20):
        f, g = random_vector(rng, n), random_vector(rng, n)
        fg = [a ^ b for a, b in zip(f, g)]
        for T in paths:
            assert T(fg) == [a ^ b for a, b in zip(T(f), T(g))]


def test_cyclotomic_examples(plan7, gf8):
    assert cyclotomic_dft([1] + [0] * 6, plan7) == [1] * 7
    assert cyclotomic_idft([1] * 7, plan7) == [1] + [0] * 6
    assert forward_via_inverse_factors([0] * 7, plan7) == [0] * 7


def test_single_coset_sweep_n7(plan7, gf8):
    for coset in plan7.structure.cosets:
        values = range(8)
        for vals in itertools.product(values, repeat=coset.size):
            f = [0] * 7
            for idx, v in zip(coset.elements, vals):
                f[idx] = v
            F = naive_dft(f, gf8)
            assert cyclotomic_dft(f, plan7) == F
            assert cyclotomic_idft(F, plan7) == f


def test_direct_schedule_agrees(plan15, gf16):
    rng = random.Random(8)
    sch = direct_schedule(plan15)
    for _ in range(30):
        f = random_vector(rng, 15)
        assert cyclotomic_dft(f, plan15, sch) == naive_dft(f, gf16)


def test_permuted_spectrum_order_n7(plan7, gf8):
    rng = random.Random(4)
    for _ in range(10):
        f = random_vector(rng, 7)
        F = naive_dft(f, gf8)
        assert permuted_spectrum(f, plan7) == [F[k] for k in (0, 6, 5, 3, 4, 1, 2)]


def test_theorem1_matrix_check(plan7, plan15):
    assert theorem1_matrix_check(plan7)
    assert theorem1_matrix_check(plan15)
    A = plan7.A.copy()
    A[3, 2] ^= 1
    assert not theorem1_matrix_check(replace(plan7, A=A))
    Ainv = plan15.A_inv.copy()
    Ainv[0, 0] ^= 1
    assert not theorem1_matrix_check(replace(plan15, A_inv=Ainv))


@pytest.mark.parametrize("m", [2, 5, 6, 8])
def test_theorem1_matrix_check_sweep(m):
    assert theorem1_matrix_check(sweep_plan(m))
