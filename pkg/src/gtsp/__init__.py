"""Exact Gelfand-Tsetlin tableaux and bounded sp(2n)-modules.

The package computes with the tableau realizations of finite-dimensional,
C-generic and bounded (degree d) modules over sp(2n), all in exact rational
arithmetic, and ships the checks that certify them.
"""

from .scalars import HALF, RootTwo, format_rational, parse_rational, parse_vector
from .tableau import (
    TableauC,
    TableauD,
    is_C_generic,
    is_C_regular,
    is_C_standard,
    is_D_standard,
    join_CD,
    split_CD,
    tableau_from_json,
    tableau_to_json,
    weight_C,
)
from .enumeration import enumerate_standard, is_dominant, weyl_dimension
from .algebra import AlgebraElement, bracket, canonical_symbols, casimir, parse_symbol, structure_constants
from .vector import LinComb
from .action import MembershipError, RegularityError, TableauModule, gt_coefficient
from .modules import (
    Bounded,
    BoundedSubPlus,
    ConeSpec,
    FiniteC,
    GenericC,
    Subquotient,
    WeightCoset,
    degree,
    highest_weight_tableau,
    is_primitive,
    iso_equivalent,
    psi_reachable,
    spec_from_json,
    special_lower,
    special_upper,
    support_contains,
    weight_space_basis,
)
from .oscillator import OscSpec, compare_degree1, osc_act
from .verification import (
    verify_casimir,
    verify_lagrange,
    verify_multiplicity,
    verify_representation,
    verify_submodule,
    verify_vanishing_lemmas,
)

__version__ = "0.1.0"
