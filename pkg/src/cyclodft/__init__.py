"""Cyclotomic discrete Fourier transform over GF(2^m)."""

from .bases import BasisSet, NormalBasis, coordinates, dual_basis, find_normal_basis
from .factorize import TransformPlan, block_entry, build_plan, invert_gf2_matrix
from .gf2m import FieldContext, make_field
from .schedule import CostReport, EvalSchedule, OpCounter, build_schedule, cse_addition_plan, report_cost
from .structure import CosetStructure, Ordering, apply_e, apply_pi, build_cosets, compose_pi_e
from .transform import (
    cyclotomic_dft,
    cyclotomic_idft,
    forward_via_inverse_factors,
    naive_dft,
    naive_idft,
    theorem1_matrix_check,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSet",
    "CosetStructure",
    "CostReport",
    "EvalSchedule",
    "FieldContext",
    "NormalBasis",
    "OpCounter",
    "Ordering",
    "TransformPlan",
    "apply_e",
    "apply_pi",
    "block_entry",
    "build_cosets",
    "build_plan",
    "build_schedule",
    "compose_pi_e",
    "coordinates",
    "cse_addition_plan",
    "cyclotomic_dft",
    "cyclotomic_idft",
    "dual_basis",
    "find_normal_basis",
    "forward_via_inverse_factors",
    "invert_gf2_matrix",
    "make_field",
    "naive_dft",
    "naive_idft",
    "report_cost",
    "theorem1_matrix_check",
]
