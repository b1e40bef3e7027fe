"""Polynomial assignment modules of Bott-Samelson graphs."""

from .assignmod import (
    Assignment,
    BasisMatrix,
    RREFObstruction,
    assignment_basis,
    cohomology_basis,
    defect_report,
    delta_vertex,
    express_in_cohomology,
    integrate,
    is_assignment,
    is_cohomological,
)
from .bsgraph import BSGraph, build_graph, export_dot
from .gb import BudgetExceeded
from .morse import morse_generators, orient
from .polyring import Poly, RationalFunction
from .rootsys import LieType, NotPolarizing, RootSystem

__all__ = [
    "Assignment",
    "BSGraph",
    "BasisMatrix",
    "BudgetExceeded",
    "LieType",
    "NotPolarizing",
    "Poly",
    "RREFObstruction",
    "RationalFunction",
    "RootSystem",
    "assignment_basis",
    "build_graph",
    "cohomology_basis",
    "defect_report",
    "delta_vertex",
    "export_dot",
    "express_in_cohomology",
    "integrate",
    "is_assignment",
    "is_cohomological",
    "morse_generators",
    "orient",
]
