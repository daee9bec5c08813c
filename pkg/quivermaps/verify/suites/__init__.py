"""Verification suites, one module per group of identities."""

from . import closedform, conjugacy, integrals, periodicity, symplectic, varieties

SUITE_MODULES = {
    periodicity.NAME: periodicity,
    conjugacy.NAME: conjugacy,
    closedform.NAME: closedform,
    integrals.NAME: integrals,
    varieties.NAME: varieties,
    symplectic.NAME: symplectic,
}
