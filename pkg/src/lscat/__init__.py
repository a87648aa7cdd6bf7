"""Lusternik-Schnirelmann type invariants of exceptional Lie groups.

Exact mod-p algebra for cohomology rings, Steenrod actions, bar and cobar
homology, and certified lower bounds for the module category weight.
"""

from __future__ import annotations

from .algebra import INF, Algebra, Element, Generator, exterior, polynomial, truncated
from .catalog import CatalogEntry, entries, expected_tables, get, verify_entry
from .coalgebra import (
    BigradedDims,
    Coalgebra,
    Cofactor,
    DifferentialSpec,
    apply_differentials,
    bar_homology,
    cobar_homology,
    collapse_check,
    compare_dims,
)
from .fp_linalg import FpMatrix, image_membership, kernel_basis, rank
from .invariants import ZClass, cup_length, mwgt_lower, verify_witness, wgt
from .steenrod import ActionTable, Op, autofill, cartan_apply, pessimistic_is_zero, validate

__version__ = "0.1.0"

__all__ = [
    "INF", "Algebra", "Element", "Generator", "exterior", "polynomial", "truncated",
    "CatalogEntry", "entries", "expected_tables", "get", "verify_entry",
    "BigradedDims", "Coalgebra", "Cofactor", "DifferentialSpec", "apply_differentials",
    "bar_homology", "cobar_homology", "collapse_check", "compare_dims",
    "FpMatrix", "image_membership", "kernel_basis", "rank",
    "ZClass", "cup_length", "mwgt_lower", "verify_witness", "wgt",
    "ActionTable", "Op", "autofill", "cartan_apply", "pessimistic_is_zero", "validate",
]
