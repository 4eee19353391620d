"""Boundary heat invariants for operators of Dirac type with spectral boundary conditions."""

from .clifford import CliffordRep, clifford_rep
from .density import (
    BoundaryGeometryData,
    DensityValue,
    a0_density,
    a1_density,
    a2_density,
    a3_density,
    adjoint_data,
    boundary_prefactor,
    sphere_volume,
)
from .normal_form import laplace_normal_form
from .relations import RelationLine, RelationReport, lemma2_verify
from .table import CoefficientTable, coefficient_table

__all__ = [
    "CliffordRep",
    "clifford_rep",
    "BoundaryGeometryData",
    "DensityValue",
    "a0_density",
    "a1_density",
    "a2_density",
    "a3_density",
    "adjoint_data",
    "boundary_prefactor",
    "sphere_volume",
    "laplace_normal_form",
    "RelationLine",
    "RelationReport",
    "lemma2_verify",
    "CoefficientTable",
    "coefficient_table",
]
