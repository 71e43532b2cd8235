"""
Gegenbauer (ultraspherical) polynomials C_n^(lambda).
"""

from fractions import Fraction
from typing import Mapping, Tuple

from ..algebra.scalars import Scalar, ScalarDomain
from ..algebra.shift import ShiftOperator
from ..exceptions import FamilyError
from .base import ClassicalFamily, bounded_below, shift_op, to_x


class Family(ClassicalFamily):
    name = "gegenbauer"
    parameter_names = ("lambda",)
    supports_endpoint = True

    def check_admissible(self, values: Mapping[str, Fraction]) -> None:
        bounded_below(self.name, values, "lambda", Fraction(-1, 2))
        if values.get("lambda") == 0:
            raise FamilyError(
                "gegenbauer requires lambda != 0",
                family=self.name,
                parameter="lambda",
                subtype="inadmissible_parameter",
            )

    def sigma(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return 1 - X.gen ** 2

    def tau(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        lam = to_x(X, p)["lambda"]
        return -(2 * lam + 1) * X.gen

    def eigenvalue(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        n, lam = N.gen, p["lambda"]
        return n * (n + 2 * lam)

    def x_numerator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        n, lam = N.gen, p["lambda"]
        return shift_op(
            N,
            (n + 1) / (2 * (n + lam)),
            0,
            (n + 1 + 2 * lam) / (2 * (n + 2 + lam)),
        )

    def d_denominator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        n, lam = N.gen, p["lambda"]
        return shift_op(N, 1 / (2 * (n + lam)), 0, -1 / (2 * (n + 2 + lam)))

    def three_term(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
        n, lam = N.gen, p["lambda"]
        return 2 * (n + lam) / (n + 1), N.zero, (n + 2 * lam - 1) / (n + 1)

    def seeds(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar]:
        lam = to_x(X, p)["lambda"]
        return X.one, 2 * lam * X.gen

    def h_ratio(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        n, lam = N.gen, p["lambda"]
        return (n + 2 * lam) * (n + lam) / ((n + 1) * (n + 1 + lam))

    def endpoint_pair(
        self, N: ScalarDomain, p: Mapping[str, Scalar], eps: int
    ) -> Tuple[ShiftOperator, ShiftOperator]:
        n, lam = N.gen, p["lambda"]
        num = shift_op(N, eps * n * (lam + n + 1), (2 * lam + n + 1) * (lam + n))
        den = shift_op(N, lam + n + 1, -eps * (lam + n))
        return num, den
