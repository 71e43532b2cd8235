"""
Chebyshev polynomials of the first kind.

Coefficient sequences use the doubled-index-0 convention: the stored
value at index 0 is twice the coefficient of T_0.
"""

from fractions import Fraction
from typing import Mapping, Tuple

from ..algebra.scalars import Scalar, ScalarDomain
from ..algebra.shift import ShiftOperator
from .base import ClassicalFamily, shift_op


class Family(ClassicalFamily):
    name = "chebyshev"
    parameter_names = ()
    doubled_zero = True
    supports_endpoint = True

    def sigma(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return 1 - X.gen ** 2

    def tau(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return -X.gen

    def eigenvalue(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return N.gen ** 2

    def x_numerator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        half = N(Fraction(1, 2))
        return shift_op(N, half, 0, half)

    def d_denominator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        c = 1 / (2 * (N.gen + 1))
        return shift_op(N, c, 0, -c)

    def three_term(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
        return N(2), N.zero, N.one

    def seeds(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar]:
        return X.one, X.gen

    def h_ratio(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return N.one

    def endpoint_pair(
        self, N: ScalarDomain, p: Mapping[str, Scalar], eps: int
    ) -> Tuple[ShiftOperator, ShiftOperator]:
        n = N.gen
        return shift_op(N, eps * n, n + 1), shift_op(N, 1, -eps)
