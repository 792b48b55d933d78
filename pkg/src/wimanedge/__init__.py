"""Exact computations around the A5-invariant Wiman-Edge pencil of plane sextics."""

from .exactfield import FieldElement, NumberField, get_field, nf_arith, nf_embed, nf_make
from .mpoly import BinaryForm, MPoly, PolyMap
from .report import ReportEntry, Verdict
from .suites import SUITES, run_suites

__version__ = "0.1.0"

__all__ = [
    "FieldElement", "NumberField", "get_field", "nf_arith", "nf_embed", "nf_make",
    "BinaryForm", "MPoly", "PolyMap", "ReportEntry", "Verdict", "SUITES", "run_suites",
]
