"""Exact graded q-differential calculus on semi-commutative Galois extensions A[t]."""
from .basealg import (
    AlgebraMismatch,
    BaseAlgebra,
    BaseElement,
    NotInvertible,
    base_inverse,
    make_cyclic_coordinate_algebra,
    make_gaussian_base,
    twist,
    validate,
)
from .calculus import (
    Basis,
    Coordinate,
    KForm,
    change_of_variable,
    covariant_D,
    covariant_Dk,
    delta,
    derivative,
    form_differential,
    form_to_dx_basis,
    form_to_tau_basis,
    make_coordinate,
    phi_dx,
    poly_P,
    poly_Phi,
    poly_Q,
)
from .exactnum import CyclotomicField, CyclotomicNumber, FieldMismatch, cyclotomic_field
from .extension import (
    ExtAlgebra,
    ExtElement,
    NotHomogeneous,
    check_theorem_2_1,
    d_power,
    differential,
    q_commutator,
)
from .instances import quantum_plane, quaternions, resolve_algebra
from .matrix_rep import MatrixRep, quantum_plane_rep, quaternion_rep, represent
from .parser import ParseError, parse

__version__ = "0.1.0"

__all__ = [
    "AlgebraMismatch",
    "BaseAlgebra",
    "BaseElement",
    "NotInvertible",
    "base_inverse",
    "make_cyclic_coordinate_algebra",
    "make_gaussian_base",
    "twist",
    "validate",
    "Basis",
    "Coordinate",
    "KForm",
    "change_of_variable",
    "covariant_D",
    "covariant_Dk",
    "delta",
    "derivative",
    "form_differential",
    "form_to_dx_basis",
    "form_to_tau_basis",
    "make_coordinate",
    "phi_dx",
    "poly_P",
    "poly_Phi",
    "poly_Q",
    "CyclotomicField",
    "CyclotomicNumber",
    "FieldMismatch",
    "cyclotomic_field",
    "ExtAlgebra",
    "ExtElement",
    "NotHomogeneous",
    "check_theorem_2_1",
    "d_power",
    "differential",
    "q_commutator",
    "quantum_plane",
    "quaternions",
    "resolve_algebra",
    "MatrixRep",
    "quantum_plane_rep",
    "quaternion_rep",
    "represent",
    "ParseError",
    "parse",
]
