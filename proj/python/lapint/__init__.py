"""Exact Laplacian spectra and integrality checks for the two-hub graph families."""

from ._core import (
    BudgetExceeded,
    InvalidPartition,
    UnknownCase,
    canonical_form,
    case_ids,
    classify,
    enumerate_family,
    erratum_report,
    graph6,
    quotient,
    refine,
    spectrum,
    verify_case,
    verify_theorem,
)

__all__ = [
    "BudgetExceeded",
    "InvalidPartition",
    "UnknownCase",
    "canonical_form",
    "case_ids",
    "classify",
    "enumerate_family",
    "erratum_report",
    "graph6",
    "quotient",
    "refine",
    "spectrum",
    "verify_case",
    "verify_theorem",
]
