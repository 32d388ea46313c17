"""Shared numeric tolerances.

Matrices and states here are exact algebraic objects evaluated in double
precision, so a single entrywise tolerance covers construction checks.
"""

TOL_ENTRY = 1e-9      # entrywise checks on unimodular entries, witnesses, flags
TOL_NORM = 1e-9       # state vector normalization
TOL_EXACT = 1e-12     # checks the math makes exact, up to double-precision roundoff


def tol_unitary(d: int) -> float:
    # H^dagger H = d*I is checked entrywise; the natural scale grows with d.
    return 1e-9 * d
