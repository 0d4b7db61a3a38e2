"""Exit criteria, one test per criterion; each records a PASS/FAIL line for the summary."""

import random
import time

import numpy as np
import pytest

from cyclodft.bases import build_basis_set, dual_basis
from cyclodft.factorize import build_plan, l_times_l_inverse_is_identity
from cyclodft.gf2linalg import gf2_matmul
from cyclodft.gf2m import DEFAULT_POLYS, make_field
from cyclodft.golden import GOLDEN_CASES, PAPER_N7_ADDS, compare_fixtures, default_fixture_dir
from cyclodft.schedule import report_cost
from cyclodft.structure import compose_pi_e
from cyclodft.textio import parse_binary_matrix
from cyclodft.transform import (
    cyclotomic_dft,
    cyclotomic_idft,
    naive_dft,
    naive_idft,
    permuted_spectrum,
    theorem1_matrix_check,
)

from conftest import SWEEP, random_vector, record_acceptance, sweep_plan

TRIALS = 100


@pytest.fixture(scope="module")
def sweep_plans():
    return {m: sweep_plan(m) for m in sorted(SWEEP)}


def _golden(prefix):
    case = next(c for c in GOLDEN_CASES if c.prefix == prefix)
    fld = make_field(case.m, case.poly)
    return fld, build_plan(fld, "paper", {k: fld.exp(e) for k, e in case.hints.items()})


def test_criterion_1_golden_n7():
    t0 = time.perf_counter()
    fld, plan = _golden("n7")
    results = compare_fixtures(plan, "n7")
    names = {r.name for r in results}
    order_ok = compose_pi_e(plan.structure) == (0, 6, 5, 3, 4, 1, 2)
    f = random_vector(random.Random(1), 7)
    F = naive_dft(f, fld)
    spectrum_ok = permuted_spectrum(f, plan) == [F[k] for k in (0, 6, 5, 3, 4, 1, 2)]
    elapsed = time.perf_counter() - t0
    ok = (
        all(r.passed for r in results)
        and {"n7 A", "n7 L", "n7 Pi", "n7 Ainv", "n7 Linv", "n7 PiE order"} <= names
        and order_ok
        and spectrum_ok
        and elapsed < 1.0
    )
    failed = [f"{r.name}: {r.detail}" for r in results if not r.passed]
    record_acceptance(1, "golden n=7 matrices and (Pi E) order", ok, f"{elapsed:.3f}s" + (f"; {failed}" if failed else ""))
    assert ok, failed


def test_criterion_2_golden_n15():
    t0 = time.perf_counter()
    fld, plan = _golden("n15")
    results = compare_fixtures(plan, "n15")
    b4 = plan.bases.basis(4)
    computed_dual = dual_basis(fld, b4)
    dual_ok = [fld.log(e) for e in computed_dual.elements] == [11, 7, 14, 13]
    dual_used = plan.bases.dual(4) == computed_dual
    fix = default_fixture_dir()
    pe_fixture = gf2_matmul(parse_binary_matrix((fix / "n15_Pi.txt").read_text()),
                            parse_binary_matrix((fix / "n15_E.txt").read_text()))
    pe_ok = np.array_equal(plan.pi_e_matrix(), pe_fixture)
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in results) and dual_ok and dual_used and pe_ok and elapsed < 1.0
    failed = [f"{r.name}: {r.detail}" for r in results if not r.passed]
    record_acceptance(2, "golden n=15 matrices, computed dual (a^11,a^7,a^14,a^13)", ok,
                      f"{elapsed:.3f}s" + (f"; {failed}" if failed else ""))
    assert ok, failed


def test_criterion_3_theorem_identity(sweep_plans):
    t0 = time.perf_counter()
    matrix_ok = all(theorem1_matrix_check(_golden(p)[1]) for p in ("n7", "n15"))
    bad = []
    for m, plan in sweep_plans.items():
        rng = random.Random(300 + m)
        perm = compose_pi_e(plan.structure)
        for _ in range(TRIALS):
            f = random_vector(rng, plan.n)
            F = naive_dft(f, plan.field)
            if permuted_spectrum(f, plan) != [F[k] for k in perm]:
                bad.append(m)
                break
    elapsed = time.perf_counter() - t0
    ok = matrix_ok and not bad and elapsed < 10.0
    record_acceptance(3, "(Pi E) W = L^-1 A^-1 (matrices n=7,15; vectors m in 2,3,4,5,6,8)", ok,
                      f"{elapsed:.3f}s" + (f"; failing m {bad}" if bad else ""))
    assert ok


def test_criterion_4_inverse_via_reversal(sweep_plans):
    t0 = time.perf_counter()
    bad = []
    for m, plan in sweep_plans.items():
        rng = random.Random(400 + m)
        for _ in range(TRIALS):
            f = random_vector(rng, plan.n)
            if naive_idft(naive_dft(f, plan.field), plan.field) != f:
                bad.append(m)
                break
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10.0
    record_acceptance(4, "E W W = I (naive round trip)", ok, f"{elapsed:.3f}s")
    assert ok


def test_criterion_5_oracle_equivalence(sweep_plans):
    t0 = time.perf_counter()
    bad = []
    for m, plan in sweep_plans.items():
        rng = random.Random(500 + m)
        for _ in range(TRIALS):
            f = random_vector(rng, plan.n)
            F = cyclotomic_dft(f, plan)
            if F != naive_dft(f, plan.field) or cyclotomic_idft(F, plan) != f:
                bad.append(m)
                break
    plan7 = sweep_plans[3]
    checked = 0
    for coset in plan7.structure.cosets[1:]:
        for code in range(512):
            f = [0] * 7
            for pos, idx in enumerate(coset.elements):
                f[idx] = (code >> (3 * pos)) & 7
            F = cyclotomic_dft(f, plan7)
            if F != naive_dft(f, plan7.field) or cyclotomic_idft(F, plan7) != f:
                bad.append(("n7 coset", coset.leader, code))
                break
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and checked == 1024 and elapsed < 30.0
    record_acceptance(5, "cyclotomic = naive, round trips, 512 vectors per 3-element coset (n=7)", ok,
                      f"{elapsed:.3f}s" + (f"; {bad[:1]}" if bad else ""))
    assert ok


def test_criterion_6_lemma1_dual_circulants(sweep_plans):
    t0 = time.perf_counter()
    ok = True
    for plan in sweep_plans.values():
        fld = plan.field
        for k, coset in enumerate(plan.structure.cosets):
            mk = coset.size
            dual = dual_basis(fld, plan.bases.basis(mk))
            blk = plan.L_inv_blocks[k]
            ok &= all(blk[s][p] == dual.elements[(s + p) % mk] for s in range(mk) for p in range(mk))
        ok &= l_times_l_inverse_is_identity(plan)
    elapsed = time.perf_counter() - t0
    ok = bool(ok) and elapsed < 5.0
    record_acceptance(6, "L^-1 blocks are dual-basis circulants and L L^-1 = I", ok, f"{elapsed:.3f}s")
    assert ok


def test_criterion_7_cost():
    t0 = time.perf_counter()
    fld, plan = _golden("n7")
    rep = report_cost(plan, plan.schedule, random_vector(random.Random(7), 7))
    elapsed = time.perf_counter() - t0
    bound = 23 + rep.block_additions
    ok = rep.multiplications == 6 and rep.a_additions <= 23 and rep.additions <= bound and elapsed < 1.0
    record_acceptance(
        7, "n=7 scheduled forward uses 6 multiplications", ok,
        f"mults {rep.multiplications}; adds {rep.additions} = {rep.a_additions} (A) + {rep.block_additions} (blocks), "
        f"bound {bound}, reported {PAPER_N7_ADDS}; {elapsed:.3f}s",
    )
    assert ok


def test_criterion_8_duality():
    t0 = time.perf_counter()
    ok = True
    pairs = 0
    for m in range(2, 9):
        fld = make_field(m, DEFAULT_POLYS[m])
        degrees = [d for d in range(1, m + 1) if m % d == 0]
        bases = build_basis_set(fld, degrees)
        for k in degrees:
            b, d = bases.basis(k), bases.dual(k)
            for s in range(k):
                for t in range(k):
                    ok &= fld.subfield_trace(fld.mul(b[s], d[t]), k) == (1 if s == t else 0)
                    pairs += 1
    elapsed = time.perf_counter() - t0
    ok = bool(ok) and elapsed < 1.0
    record_acceptance(8, "Tr(b_s b'_t) = delta_st for all generated bases, m <= 8", ok,
                      f"{pairs} pairs; {elapsed:.3f}s")
    assert ok
