"""
Base classes for classical orthogonal families.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union
import logging
import re

from ..algebra.fractions import RecFraction
from ..algebra.scalars import Scalar, ScalarDomain
from ..algebra.shift import ShiftOperator
from ..exceptions import FamilyError, ParseError, UnsupportedModeError
from ..utils.constants import RESERVED_SYMBOLS

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")

ParameterValue = Union[str, Fraction]


@dataclass(frozen=True)
class FamilySpec:
    """Everything the engine and the oracle need about one basis."""
    name: str
    label: str
    parameters: Dict[str, ParameterValue]
    n_domain: ScalarDomain
    x_domain: ScalarDomain
    sigma: Scalar
    tau: Scalar
    eigenvalue: Scalar
    x_num: ShiftOperator
    d_den: ShiftOperator
    three_term: Tuple[Scalar, Scalar, Scalar]
    seeds: Tuple[Scalar, Scalar]
    h_ratio: Scalar
    theta: Optional[Tuple[ShiftOperator, ShiftOperator]] = None
    endpoints: Dict[int, Tuple[ShiftOperator, ShiftOperator]] = field(default_factory=dict)
    doubled_zero: bool = False

    @property
    def x_pair(self) -> RecFraction:
        """(X_num, S): X_num . [psi](f) = S . [psi](x f)."""
        return RecFraction(self.x_num, ShiftOperator.monomial(self.n_domain, 1))

    @property
    def d_pair(self) -> RecFraction:
        """(S, D_den): S . [psi](f) = D_den . [psi](f')."""
        return RecFraction(ShiftOperator.monomial(self.n_domain, 1), self.d_den)

    @property
    def theta_pair(self) -> Optional[RecFraction]:
        if self.theta is None:
            return None
        return RecFraction(*self.theta)

    def endpoint_pair(self, eps: int) -> RecFraction:
        """
        Pair relating [psi](f) and [psi]((1 + eps x) f').

        Raises:
            UnsupportedModeError: If the family has no endpoint data
        """
        if eps not in self.endpoints:
            raise UnsupportedModeError(
                f"Endpoint mode is not available for {self.name}",
                family=self.name,
                mode=f"endpoint:{eps:+d}",
            )
        return RecFraction(*self.endpoints[eps])

    @property
    def has_theta(self) -> bool:
        return self.theta is not None


class ClassicalFamily(ABC):
    """A classical orthogonal family, parametrized by zero or more parameters."""

    name: str = ""
    parameter_names: Tuple[str, ...] = ()
    doubled_zero: bool = False
    supports_endpoint: bool = False

    @abstractmethod
    def sigma(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        """Leading Sturm-Liouville coefficient."""

    @abstractmethod
    def tau(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        """First-order Sturm-Liouville coefficient."""

    @abstractmethod
    def eigenvalue(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        """lambda_n with sigma psi'' + tau psi' + lambda_n psi = 0."""

    @abstractmethod
    def x_numerator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        """X_num of the multiplication-by-x pair."""

    @abstractmethod
    def d_denominator(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> ShiftOperator:
        """D_den of the derivation pair."""

    @abstractmethod
    def three_term(
        self, N: ScalarDomain, p: Mapping[str, Scalar]
    ) -> Tuple[Scalar, Scalar, Scalar]:
        """(A, B, C) with psi_{n+1} = (A x + B) psi_n - C psi_{n-1}, n >= 1."""

    @abstractmethod
    def seeds(self, X: ScalarDomain, p: Mapping[str, Scalar]) -> Tuple[Scalar, Scalar]:
        """psi_0 and psi_1."""

    @abstractmethod
    def h_ratio(self, N: ScalarDomain, p: Mapping[str, Scalar]) -> Scalar:
        """h_{n+1} / h_n."""

    def theta_pair(
        self,
        N: ScalarDomain,
        p: Mapping[str, Scalar],
        x_num: ShiftOperator,
        d_den: ShiftOperator,
        tau: Scalar,
        X: ScalarDomain,
    ) -> Optional[Tuple[ShiftOperator, ShiftOperator]]:
        """(-lambda_{n+1} D_den - a1 X_num - a0 S, S) for tau = a1 x + a0."""
        a1 = N(X.coefficient(tau, 1))
        a0 = N(X.coefficient(tau, 0))
        shift = ShiftOperator.monomial(N, 1)
        lam_next = N.shift(self.eigenvalue(N, p), 1)
        num = -(d_den.left_scale(lam_next)) - x_num.left_scale(a1) - shift.left_scale(a0)
        return num, shift

    def endpoint_pair(
        self, N: ScalarDomain, p: Mapping[str, Scalar], eps: int
    ) -> Tuple[ShiftOperator, ShiftOperator]:
        raise UnsupportedModeError(
            f"Endpoint mode is not available for {self.name}",
            family=self.name,
            mode=f"endpoint:{eps:+d}",
        )

    def check_admissible(self, values: Mapping[str, Fraction]) -> None:
        """Validate numeric parameter values; symbolic ones are always accepted."""

    def describe(self) -> Dict[str, str]:
        """Human readable summary for listings."""
        N = ScalarDomain(self.parameter_names, "n")
        X = ScalarDomain(self.parameter_names, "x")
        p = {name: N(name) for name in self.parameter_names}
        return {
            "name": self.name,
            "parameters": ", ".join(self.parameter_names) or "-",
            "sigma": X.render(self.sigma(X, p)),
            "tau": X.render(self.tau(X, p)),
            "lambda_n": N.render(self.eigenvalue(N, p)),
            "theta": "yes" if self.name != "hermite" else "no",
            "endpoint": "yes" if self.supports_endpoint else "no",
        }

    def parse_arguments(self, arguments: Sequence[str]) -> Dict[str, ParameterValue]:
        """
        Map positional basis arguments to parameter values.

        Raises:
            ParseError: On malformed arguments
            FamilyError: On a wrong number of arguments or inadmissible values
        """
        if not arguments:
            return {name: name for name in self.parameter_names}
        if len(arguments) != len(self.parameter_names):
            raise FamilyError(
                f"{self.name} takes {len(self.parameter_names)} parameter(s), "
                f"got {len(arguments)}",
                family=self.name,
            )
        values: Dict[str, ParameterValue] = {}
        for name, text in zip(self.parameter_names, arguments):
            text = text.strip()
            if RATIONAL.match(text):
                values[name] = Fraction(text)
            elif IDENTIFIER.match(text):
                if text in RESERVED_SYMBOLS:
                    raise FamilyError(
                        f"Parameter name {text!r} is reserved",
                        family=self.name,
                        parameter=name,
                    )
                values[name] = text
            else:
                raise ParseError(f"Invalid parameter {text!r} for {self.name}", text=text)
        self.check_admissible(
            {k: v for k, v in values.items() if isinstance(v, Fraction)}
        )
        return values

    def build(
        self,
        arguments: Sequence[str] = (),
        extra_params: Sequence[str] = (),
        label: Optional[str] = None,
    ) -> FamilySpec:
        """
        Build the FamilySpec for the given arguments.

        Args:
            arguments: Positional parameter values (numerals or symbolic names)
            extra_params: Further symbols, e.g. parameters of the differential operator
            label: Basis string used for reporting

        Returns:
            Fully populated FamilySpec
        """
        values = self.parse_arguments(arguments)
        symbols = {v for v in values.values() if isinstance(v, str)} | set(extra_params)
        params = sorted(symbols)
        N = ScalarDomain(params, "n")
        X = ScalarDomain(params, "x")
        p = {name: N(value) for name, value in values.items()}

        x_num = self.x_numerator(N, p)
        d_den = self.d_denominator(N, p)
        tau = self.tau(X, p)
        theta = self.theta_pair(N, p, x_num, d_den, tau, X)
        endpoints = {}
        if self.supports_endpoint:
            endpoints = {eps: self.endpoint_pair(N, p, eps) for eps in (1, -1)}

        spec = FamilySpec(
            name=self.name,
            label=label or self.name,
            parameters=values,
            n_domain=N,
            x_domain=X,
            sigma=self.sigma(X, p),
            tau=tau,
            eigenvalue=self.eigenvalue(N, p),
            x_num=x_num,
            d_den=d_den,
            three_term=self.three_term(N, p),
            seeds=self.seeds(X, p),
            h_ratio=self.h_ratio(N, p),
            theta=theta,
            endpoints=endpoints,
            doubled_zero=self.doubled_zero,
        )
        logger.debug(f"Built family {spec.label} over parameters {params}")
        return spec


def shift_op(N: ScalarDomain, *coeffs) -> ShiftOperator:
    """ShiftOperator from coefficients in ascending powers of S."""
    return ShiftOperator(N, coeffs)


def to_x(X: ScalarDomain, p: Mapping[str, Scalar]) -> Dict[str, Scalar]:
    """Move parameter values into the x-domain."""
    return {name: X(value) for name, value in p.items()}


def bounded_below(
    family: str, values: Mapping[str, Fraction], name: str, bound: Fraction
) -> None:
    """Raise unless values[name] > bound (when numeric)."""
    value = values.get(name)
    if value is not None and not value > bound:
        raise FamilyError(
            f"{family} requires {name} > {bound}, got {value}",
            family=family,
            parameter=name,
            subtype="inadmissible_parameter",
        )
