"""Closed-form values for the two-layer wheel and the classic families.

Formulas return the closed-form value as stated. Where that value is wrong for a
degenerate input, the result carries a caveat instead of a corrected value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import FamilyError
from ..families import FamilySpec, Kind


@dataclass(frozen=True)
class FormulaResult:
    value: int
    caveat: str | None = None


def formula_wheel2_rvc(n: int) -> FormulaResult:
    if n < 3:
        raise ValueError("the two-layer wheel needs n >= 3")
    if n == 3:
        return FormulaResult(1)
    if n <= 6:
        return FormulaResult(2)
    if n <= 10:
        return FormulaResult(3)
    return FormulaResult(4)


def formula_wheel2_srvc(n: int) -> FormulaResult:
    if n < 3:
        raise ValueError("the two-layer wheel needs n >= 3")
    base = math.ceil(n / 5)
    return FormulaResult(base if n in (3, 6) else base + 1)


W3_CAVEAT = "degenerate: W_3 = K_4 has srvc 0 (complete graph)"
SINGLETON_CAVEAT = "degenerate: all parts of size 1 give a complete graph with srvc 0"


def formula_corollary12(spec: FamilySpec) -> FormulaResult:
    """srvc of a complete bipartite, complete multipartite, wheel or path graph."""
    k = spec.kind
    if k is Kind.BIPARTITE:
        if max(spec.s, spec.t) < 2:
            raise FamilyError("K_{s,t} needs one side of size at least 2")
        return FormulaResult(1)
    if k is Kind.MULTIPARTITE:
        if len(spec.parts) < 3:
            raise FamilyError("complete multipartite needs at least 3 parts")
        if max(spec.parts) == 1:
            return FormulaResult(1, SINGLETON_CAVEAT)
        return FormulaResult(1)
    if k is Kind.WHEEL:
        return FormulaResult(1, W3_CAVEAT if spec.n == 3 else None)
    if k is Kind.PATH:
        if spec.n < 3:
            raise FamilyError("path needs n >= 3")
        return FormulaResult(spec.n - 2)
    raise FamilyError(f"no closed form for family {k.value}")
