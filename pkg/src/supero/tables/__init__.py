"""Closed-form Verma flag and composition tables for gl(3|1) and gl(2|2)."""

from ..flags import CompositionSeries, VermaFlag
from ..lattice import Shape, Weight
from .core import (
    Branch,
    MalformedEntryError,
    Match,
    NoBranchError,
    Table,
    TableDomainError,
    TableError,
)
from .data import GL22_COMPOSITIONS, GL22_PROJECTIVES, GL31_PROJECTIVES

GL31 = Table("gl(3|1) projectives", Shape(3, 1), 1, "M", GL31_PROJECTIVES)
GL22 = Table("gl(2|2) projectives", Shape(2, 2), 2, "M", GL22_PROJECTIVES)
GL22_JH = Table("gl(2|2) composition series", Shape(2, 2), 2, "L", GL22_COMPOSITIONS)

TABLES = (GL31, GL22, GL22_JH)


def table_gl31(lam: Weight) -> VermaFlag:
    return GL31(lam)


def table_gl22(lam: Weight) -> VermaFlag:
    return GL22(lam)


def composition_gl22(mu: Weight) -> CompositionSeries:
    return CompositionSeries(GL22_JH(mu).counter(), mu.shape)


def table_for(lam: Weight):
    """The projective table covering ``lam``'s algebra, or None."""
    for table in (GL31, GL22):
        if table.shape == lam.shape:
            return table
    return None


def validate_tables():
    from .validate import validate_tables as run

    return run()


__all__ = [
    "Branch",
    "GL22",
    "GL22_JH",
    "GL31",
    "MalformedEntryError",
    "Match",
    "NoBranchError",
    "TABLES",
    "Table",
    "TableDomainError",
    "TableError",
    "composition_gl22",
    "table_for",
    "table_gl22",
    "table_gl31",
    "validate_tables",
]
