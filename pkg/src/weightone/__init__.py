"""Dihedral weight-one forms of prime level, their mean values, and counting bounds."""

from .bounds import dimension_bound, eval_scheme, field_report, scheme_ico, scheme_oct
from .characters import ClassCharacter, characters, evaluate, is_conjugate_pair
from .class_group import (
    ClassGroup,
    Discriminant,
    QuadForm,
    class_group,
    compose,
    enumerate_reduced,
    group_structure,
    reduce,
    torsion_count,
    validate_discriminant,
)
from .cyclotomic import CycInt
from .hecke_poly import GoldenValue, IntPoly, hecke_P, synth_stream, verify_ico_identity, verify_oct_identity
from .meanvalue import DualityInstance, best_constants, exp_integral_E1, lemma2_ratio, parseval_check, prop1_check
from .rankin import b_coeffs, petersson_estimate, prop2a_check
from .theta import ThetaForm, dihedral_basis, ideal_counts, theta_hecke, theta_lattice

__version__ = "0.1.0"
