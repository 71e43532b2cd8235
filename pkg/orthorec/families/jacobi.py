"""
Jacobi polynomials P_n^(alpha, beta).

Constants are written in terms of s = alpha + beta. Numeric
specializations go through the field arithmetic, so removable
singularities such as s + 1 = 0 cancel before an operator is built.
"""

from fractions import Fraction
from typing import Mapping, Tuple

from ..algebra.rec import right_multiply_by_sequence
from ..algebra.scalars import Scalar, ScalarDomain
from ..algebra.shift import ShiftOperator
from .base import ClassicalFamily, bounded_below, shift_op, to_x


class Family(ClassicalFamily):
    name = "jacobi"
    parameter_names = ("alpha", "beta")
    supports_endpoint = True

    def check_admissible(self, values: Mapping[str, Fraction]) -> None:
        bounded_below(self.name, values, "alpha", Fraction(-1))
        bounded_below(self.name, values, "beta", Fraction(-1))

    def sigma(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        return 1 - X.gen ** 2

    def tau(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        q = to_x(X, p)
        a, b = q["alpha"], q["beta"]
        return b - a - (a + b + 2) * X.gen

    def eigenvalue(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        n, s = N.gen, p["alpha"] + p["beta"]
        return n * (n + s + 1)

    def x_numerator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        n, a, b = N.gen, p["alpha"], p["beta"]
        s = a + b
        return shift_op(
            N,
            2 * (n + 1) * (n + 1 + s) / ((2 * n + 1 + s) * (2 * n + 2 + s)),
            (b ** 2 - a ** 2) / ((2 * n + 2 + s) * (2 * n + 4 + s)),
            2 * (n + a + 2) * (n + b + 2) / ((2 * n + 4 + s) * (2 * n + 5 + s)),
        )

    def d_denominator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        n, a, b = N.gen, p["alpha"], p["beta"]
        s = a + b
        return shift_op(
            N,
            2 * (n + 1 + s) / ((2 * n + 1 + s) * (2 * n + 2 + s)),
            2 * (a - b) / ((2 * n + 2 + s) * (2 * n + 4 + s)),
            -2 * (n + 2 + a) * (n + 2 + b) / ((n + 2 + s) * (2 * n + 4 + s) * (2 * n + 5 + s)),
        )

    def three_term(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar, Scalar]:
        n, a, b = N.gen, p["alpha"], p["beta"]
        s = a + b
        A = (2 * n + s + 1) * (2 * n + s + 2) / (2 * (n + 1) * (n + s + 1))
        B = (2 * n + s + 1) * (a ** 2 - b ** 2) / (2 * (n + 1) * (n + s + 1) * (2 * n + s))
        C = (n + a) * (n + b) * (2 * n + s + 2) / ((n + 1) * (n + s + 1) * (2 * n + s))
        return A, B, C

    def seeds(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar]:
        q = to_x(X, p)
        a, b = q["alpha"], q["beta"]
        return X.one, ((a + b + 2) * X.gen + a - b) / 2

    def h_ratio(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        n, a, b = N.gen, p["alpha"], p["beta"]
        s = a + b
        return (
            (2 * n + s + 1) * (n + a + 1) * (n + b + 1)
            / ((2 * n + s + 3) * (n + s + 1) * (n + 1))
        )

    def endpoint_pair(
        self, N: ScalarDomain, p: Mapping[str, Scalar], eps: int
    ) -> Tuple[ShiftOperator, ShiftOperator]:
        """
        Pair for (1 + eps x) f'. The core pair is written for the
        h_n-weighted coefficients and then right-multiplied by h_n.
        """
        n, a, b = N.gen, p["alpha"], p["beta"]
        s = a + b
        plus, minus = N(Fraction(1 + eps, 2)), N(Fraction(1 - eps, 2))
        c_eps = plus * a - minus * b + eps * (n + 1)
        e_eps = plus * a + minus * b + n + 1
        lam = self.eigenvalue(N, p)
        core_num = shift_op(N, c_eps * lam, (n + s + 1) * N.shift(lam, 1))
        core_den = shift_op(N, (n + s + 1) * e_eps, -eps * (n + s + 1) * (n + 1))
        h = self.h_ratio(N, p)
        return right_multiply_by_sequence(core_num, h), right_multiply_by_sequence(core_den, h)
