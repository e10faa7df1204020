"""Exact generating functions for cohomological invariants of determinantal varieties."""

from .geometry import Case, Space, codim_orbit, dim_orbit
from .invariants import (
    INVARIANT_NAMES,
    bm_poincare,
    cdr_intro_form,
    cdr_section_form,
    derham_simple,
    evaluate,
    ih_poincare,
    loccoh_series,
    np_total,
    orbit_cohomology,
    total_betti,
)
from .polyring import MPoly
from .qcomb import qbinom
from .verify import VerificationReport, run_all

__version__ = "0.1.0"

__all__ = [
    "Case",
    "INVARIANT_NAMES",
    "MPoly",
    "Space",
    "VerificationReport",
    "bm_poincare",
    "cdr_intro_form",
    "cdr_section_form",
    "codim_orbit",
    "derham_simple",
    "dim_orbit",
    "evaluate",
    "ih_poincare",
    "loccoh_series",
    "np_total",
    "orbit_cohomology",
    "qbinom",
    "run_all",
    "total_betti",
]
