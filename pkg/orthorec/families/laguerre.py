"""
Generalized Laguerre polynomials L_n^(alpha).
"""

from fractions import Fraction
from typing import Mapping, Optional, Tuple

from ..algebra.scalars import Scalar, ScalarDomain
from ..algebra.shift import ShiftOperator
from .base import ClassicalFamily, bounded_below, shift_op, to_x


class Family(ClassicalFamily):
    name = "laguerre"
    parameter_names = ("alpha",)

    def check_admissible(self, values: Mapping[str, Fraction]) -> None:
        bounded_below(self.name, values, "alpha", Fraction(-1))

    def sigma(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return X.gen

    def tau(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return to_x(X, p)["alpha"] + 1 - X.gen

    def eigenvalue(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return N.gen

    def x_numerator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        n, a = N.gen, p["alpha"]
        return shift_op(N, -(n + 1), 2 * n + 3 + a, -(n + a + 2))

    def d_denominator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        return shift_op(N, -1, 1)

    def three_term(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
        n, a = N.gen, p["alpha"]
        return -1 / (n + 1), (2 * n + 1 + a) / (n + 1), (n + a) / (n + 1)

    def seeds(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar]:
        return X.one, 1 + to_x(X, p)["alpha"] - X.gen

    def h_ratio(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        n, a = N.gen, p["alpha"]
        return (n + a + 1) / (n + 1)

    def theta_pair(
        self,
        N: ScalarDomain,
        p: Mapping[str, Scalar],
        x_num: ShiftOperator,
        d_den: ShiftOperator,
        tau: Scalar,
        X: ScalarDomain,
    ) -> Optional[Tuple[ShiftOperator, ShiftOperator]]:
        # the generic formula gives a pair with the common left factor S
        n, a = N.gen, p["alpha"]
        return shift_op(N, n, -(n + 1 + a)), ShiftOperator.one(N)
