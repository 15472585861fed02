"""Hilbert-Kunz multiplicities and Frobenius semistability for trinomial plane curves."""
from .classify import (
    Axis, Invariants, Irregular, Regular, RegularNormalForm, TypeI, TypeII,
    classify, coordinate_multiplicity, invariants, normal_form, reduce, trinomial_invariants,
)
from .closed_forms import CrosscheckOutcome, Status, crosscheck
from .delta import (
    STRONGLY_SEMISTABLE, DeltaTable, Finite, delta, delta_direct, delta_table, multiplicative_order,
)
from .errors import DomainError, InternalInconsistency
from .frobenius import SemistabilityReport, UnstableAt, report, report_by_class
from .hilbert_kunz import HKFormula, HKSymbol, ehk_formula, ehk_value
from .poly import Monomial, Trinomial, format_trinomial, parse_any, parse_trinomial
from .taxicab import nearest_odd_sum, td_solution_direct, td_solution_residue

__version__ = "0.1.0"
