"""
orthorec - recurrences for orthogonal-polynomial expansion coefficients.

Converts a linear differential operator with polynomial coefficients into
a linear recurrence satisfied by the coefficients of its solutions in a
classical orthogonal basis (or the monomial basis).
"""

__version__ = "1.0.0"
