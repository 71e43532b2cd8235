"""
Hermite polynomials H_n (physicists' normalization).
"""

from fractions import Fraction
from typing import Mapping, Optional, Tuple

from ..algebra.scalars import Scalar, ScalarDomain
from ..algebra.shift import ShiftOperator
from .base import ClassicalFamily, shift_op


class Family(ClassicalFamily):
    name = "hermite"
    parameter_names = ()

    def sigma(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return X.one

    def tau(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return -2 * X.gen

    def eigenvalue(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return 2 * N.gen

    def x_numerator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        return shift_op(N, Fraction(1, 2), 0, N.gen + 2)

    def d_denominator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        return shift_op(N, 1 / (2 * (N.gen + 1)))

    def three_term(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
        return N(2), N.zero, 2 * N.gen

    def seeds(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar]:
        return X.one, 2 * X.gen

    def h_ratio(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return 2 * (N.gen + 1)

    def theta_pair(
        self,
        N: ScalarDomain,
        p: Mapping[str, Scalar],
        x_num: ShiftOperator,
        d_den: ShiftOperator,
        tau: Scalar,
        X: ScalarDomain,
    ) -> Optional[Tuple[ShiftOperator, ShiftOperator]]:
        return None
