"""Closed forms, proof colorings and verification suites."""

from .colorings import ColoringSpec, Which, paper_coloring
from .formulas import FormulaResult, formula_corollary12, formula_wheel2_rvc, formula_wheel2_srvc
from .suites import SUITES, SuiteParams, SuiteReport, verify_suite

__all__ = [
    "ColoringSpec", "Which", "paper_coloring", "FormulaResult", "formula_corollary12",
    "formula_wheel2_rvc", "formula_wheel2_srvc", "SUITES", "SuiteParams", "SuiteReport", "verify_suite",
]
