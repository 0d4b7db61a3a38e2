"""Golden fixtures for n = 7 and n = 15 and the verification suite behind ``cyclodft verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .factorize import TransformPlan, build_plan, factorization_residual, l_times_l_inverse_is_identity
from .gf2m import FieldContext, make_field
from .schedule import report_cost
from .structure import compose_pi_e
from .textio import first_difference, format_binary_matrix, format_field_matrix
from .transform import (
    cyclotomic_dft,
    cyclotomic_idft,
    forward_via_inverse_factors,
    naive_dft,
    naive_idft,
    theorem1_matrix_check,
)


@dataclass(frozen=True)
class GoldenCase:
    prefix: str
    m: int
    poly: int
    hints: dict[int, int]  # degree -> exponent of alpha


GOLDEN_CASES = (
    GoldenCase("n7", 3, 0xB, {3: 3}),
    GoldenCase("n15", 4, 0x13, {4: 3, 2: 5}),
)

FIXTURE_NAMES = ("A", "Ainv", "L", "Linv", "Pi", "E")

# reported operation counts for the 7-point transform
PAPER_N7_MULTS = 6
PAPER_N7_ADDS = 24


def default_fixture_dir() -> Path:
    return Path(str(resources.files("cyclodft") / "fixtures"))


def golden_case_for(m: int, poly: int) -> GoldenCase | None:
    for case in GOLDEN_CASES:
        if case.m == m and case.poly == poly:
            return case
    return None


def golden_plan(case: GoldenCase) -> TransformPlan:
    fld = make_field(case.m, case.poly)
    return build_plan(fld, "paper", {k: fld.exp(e) for k, e in case.hints.items()})


def plan_exports(plan: TransformPlan, fmt: str = "pow") -> dict[str, str]:
    fld = plan.field
    return {
        "A": format_binary_matrix(plan.A),
        "Ainv": format_binary_matrix(plan.A_inv),
        "L": format_field_matrix(fld, plan.L_matrix(), fmt),
        "Linv": format_field_matrix(fld, plan.L_matrix(inverse=True), fmt),
        "Pi": format_binary_matrix(plan.pi_matrix()),
        "E": format_binary_matrix(plan.e_matrix()),
    }


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def compare_fixtures(plan: TransformPlan, prefix: str, fixture_dir: Path | None = None) -> list[CheckResult]:
    """Character-exact comparison of every exported matrix with its fixture file."""
    fixture_dir = Path(fixture_dir) if fixture_dir else default_fixture_dir()
    out = []
    exports = plan_exports(plan)
    for name in FIXTURE_NAMES:
        path = fixture_dir / f"{prefix}_{name}.txt"
        label = f"{prefix} {name}"
        if not path.exists():
            out.append(CheckResult(label, False, f"missing fixture {path}"))
            continue
        expected = path.read_text()
        actual = exports[name]
        if expected == actual:
            out.append(CheckResult(label, True))
            continue
        diff = first_difference(expected, actual)
        if diff is None:
            detail = "whitespace differs"
        else:
            r, c, e, a = diff
            detail = f"{path.name} cell (row {r}, col {c}): expected {e}, got {a}"
        out.append(CheckResult(label, False, detail))
    order_file = fixture_dir / f"{prefix}_PiE_order.txt"
    if order_file.exists():
        expected = order_file.read_text().split()
        actual = [f"F{k}" for k in compose_pi_e(plan.structure)]
        ok = expected == actual
        out.append(CheckResult(f"{prefix} PiE order", ok, "" if ok else f"expected {expected}, got {actual}"))
    return out


def _random_vector(rng: random.Random, fld: FieldContext) -> list[int]:
    return [rng.randrange(fld.n + 1) for _ in range(fld.n)]


def property_checks(plan: TransformPlan, trials: int = 100, seed: int = 0) -> list[CheckResult]:
    fld = plan.field
    rng = random.Random(seed)
    tag = f"n={fld.n}"
    out = [
        CheckResult(f"{tag} A L Pi = W", not factorization_residual(plan)),
        CheckResult(f"{tag} L L^-1 = I", l_times_l_inverse_is_identity(plan)),
        CheckResult(f"{tag} theorem identity (Pi E) W = L^-1 A^-1", theorem1_matrix_check(plan)),
    ]
    paths: list[tuple[str, Callable[[list[int]], bool]]] = [
        ("naive_idft o naive_dft = id", lambda f: naive_idft(naive_dft(f, fld), fld) == f),
        ("cyclotomic_dft = naive_dft", lambda f: cyclotomic_dft(f, plan) == naive_dft(f, fld)),
        ("cyclotomic_idft o cyclotomic_dft = id", lambda f: cyclotomic_idft(cyclotomic_dft(f, plan), plan) == f),
        ("forward_via_inverse_factors = naive_dft", lambda f: forward_via_inverse_factors(f, plan) == naive_dft(f, fld)),
    ]
    vectors = [_random_vector(rng, fld) for _ in range(trials)]
    for name, check in paths:
        bad = next((i for i, f in enumerate(vectors) if not check(f)), None)
        out.append(CheckResult(f"{tag} {name} ({trials} vectors)", bad is None, "" if bad is None else f"fails on vector #{bad}"))
    return out


def cost_checks(plan: TransformPlan) -> list[CheckResult]:
    if plan.n != 7:
        return []
    rep = report_cost(plan, None, [0] * 7)
    naive_bound = int(plan.A.sum()) - int((plan.A.sum(axis=1) > 0).sum())
    return [
        CheckResult(
            "n=7 scheduled forward multiplications",
            rep.multiplications == PAPER_N7_MULTS,
            f"{rep.multiplications} (reported: {PAPER_N7_MULTS})",
        ),
        CheckResult(
            "n=7 additions within row-by-row bound",
            rep.a_additions <= naive_bound,
            f"{rep.additions} total = {rep.a_additions} for A + {rep.block_additions} in blocks "
            f"(A bound {naive_bound}; reported total: {PAPER_N7_ADDS})",
        ),
    ]


def verification_suite(
    plan: TransformPlan, fixture_dir: Path | None = None, trials: int = 100, seed: int = 0
) -> list[CheckResult]:
    results: list[CheckResult] = []
    case = golden_case_for(plan.field.m, plan.field.primitive_poly)
    if case is not None and _matches_case(plan, case):
        results += compare_fixtures(plan, case.prefix, fixture_dir)
    results += property_checks(plan, trials, seed)
    results += cost_checks(plan)
    return results


def _matches_case(plan: TransformPlan, case: GoldenCase) -> bool:
    """Fixtures only apply to the default ordering with the fixture bases."""
    if plan.structure.ordering.value != "paper":
        return False
    fld = plan.field
    return all(plan.bases.basis(k).generator == fld.exp(e) for k, e in case.hints.items())
