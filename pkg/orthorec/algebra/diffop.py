"""
Linear differential operators sum p_i(x) Dx^i over K[x].

Besides the ring operations (with Dx a = a Dx + a'), this module converts
between the right form sum p_i Dx^i and the left form sum Dx^i q_i,
rewrites an operator in powers of t*Dx for t = sigma or t = 1 + eps*x,
and builds the symmetric product of two operators.
"""

from math import comb
from typing import Iterable, List, Sequence, Tuple
import logging

from sympy.polys.matrices import DomainMatrix

from ..exceptions import AlgebraError, HypothesisError
from .scalars import Scalar, ScalarDomain, ScalarLike

logger = logging.getLogger(__name__)


class DiffOperator:
    """A differential operator in right normal form, coefficients in ascending powers of Dx."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain: ScalarDomain, coeffs: Iterable[ScalarLike] = ()):
        values = [domain(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        for c in values:
            if not domain.is_polynomial(c):
                raise AlgebraError(
                    f"Coefficient {c} is not a polynomial in {domain.variable}",
                    operation="DiffOperator",
                )
        self.domain = domain
        self.coeffs: Tuple[Scalar, ...] = tuple(values)

    @classmethod
    def zero(cls, domain: ScalarDomain) -> "DiffOperator":
        return cls(domain, ())

    @classmethod
    def one(cls, domain: ScalarDomain) -> "DiffOperator":
        return cls(domain, (domain.one,))

    @classmethod
    def scalar(cls, domain: ScalarDomain, value: ScalarLike) -> "DiffOperator":
        return cls(domain, (value,))

    @classmethod
    def derivation(cls, domain: ScalarDomain) -> "DiffOperator":
        return cls(domain, (domain.zero, domain.one))

    @property
    def order(self) -> int:
        """Order in Dx; -1 for the zero operator."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.domain.zero

    @property
    def leading_coefficient(self) -> Scalar:
        if not self.coeffs:
            raise AlgebraError("Zero operator has no leading coefficient",
                               operation="leading_coefficient")
        return self.coeffs[-1]

    def is_constant(self) -> bool:
        """True for an element of K (order <= 0 and free of x)."""
        return self.order <= 0 and all(self.domain.is_constant(c) for c in self.coeffs)

    def _coerce(self, other) -> "DiffOperator":
        if isinstance(other, DiffOperator):
            if other.domain != self.domain:
                raise AlgebraError("Operators over different domains", operation="coerce")
            return other
        return DiffOperator.scalar(self.domain, other)

    def __add__(self, other):
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return DiffOperator(
            self.domain,
            [self.coefficient(k) + other.coefficient(k) for k in range(size)],
        )

    __radd__ = __add__

    def __neg__(self) -> "DiffOperator":
        return DiffOperator(self.domain, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return DiffOperator.zero(self.domain)
        domain = self.domain
        result = [domain.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, b in enumerate(other.coeffs):
            if not b:
                continue
            derivatives = [b]
            for _ in range(self.order):
                derivatives.append(domain.derivative(derivatives[-1]))
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for k in range(i + 1):
                    if derivatives[k]:
                        result[i - k + j] += comb(i, k) * a * derivatives[k]
        return DiffOperator(domain, result)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, power: int) -> "DiffOperator":
        result = DiffOperator.one(self.domain)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.domain, self.coeffs))

    def __repr__(self) -> str:
        return f"DiffOperator({render_operator(self)})"

    def apply(self, f: ScalarLike) -> Scalar:
        """L(f) = sum p_i f^(i)."""
        f = self.domain(f)
        total = self.domain.zero
        for c in self.coeffs:
            if c:
                total += c * f
            f = self.domain.derivative(f)
        return total


def to_left_form(op: DiffOperator) -> List[Scalar]:
    """
    Coefficients q_0..q_r with op = sum Dx^i q_i; q_r = p_r.
    """
    domain = op.domain
    rest = op
    result = [domain.zero] * (op.order + 1)
    for i in range(op.order, -1, -1):
        q = rest.coefficient(i)
        result[i] = q
        if q:
            rest = rest - DiffOperator.derivation(domain) ** i * q
    if rest:
        raise AlgebraError("Left form conversion left a remainder", operation="to_left_form")
    return result


def from_left_form(domain: ScalarDomain, coefficients: Sequence[ScalarLike]) -> DiffOperator:
    """Expand sum Dx^i q_i into right normal form."""
    result = DiffOperator.zero(domain)
    derivation = DiffOperator.derivation(domain)
    for i, q in enumerate(coefficients):
        result = result + derivation ** i * DiffOperator.scalar(domain, q)
    return result


def euler_power(t: Scalar, k: int, domain: ScalarDomain) -> DiffOperator:
    """(t Dx)^k in right normal form."""
    step = DiffOperator(domain, (domain.zero, t))
    return step ** k


def _rewrite_powers(op: DiffOperator, t: Scalar, mode: str, label: str) -> List[Scalar]:
    domain = op.domain
    rest = op
    result = [domain.zero] * (op.order + 1)
    for k in range(op.order, -1, -1):
        p = rest.coefficient(k)
        if not p:
            continue
        q = p / t ** k
        if not domain.is_polynomial(q):
            raise HypothesisError(
                f"{label}^{k} does not divide the coefficient of Dx^{k}; "
                f"left-multiply the operator by a power of {label}",
                mode=mode,
                failing_index=k,
            )
        result[k] = q
        rest = rest - DiffOperator.scalar(domain, q) * euler_power(t, k, domain)
    if rest:
        raise AlgebraError(f"Rewrite in powers of {label}*Dx left a remainder",
                           operation="rewrite")
    return result


def rewrite_theta(op: DiffOperator, sigma: Scalar) -> List[Scalar]:
    """
    Coefficients q_0..q_r with op = sum q_i (sigma Dx)^i.

    Raises:
        HypothesisError: If sigma^k does not divide p_k, naming k
    """
    return _rewrite_powers(op, op.domain(sigma), "theta", "sigma")


def rewrite_tau_eps(op: DiffOperator, eps: int) -> List[Scalar]:
    """
    Coefficients q_i with op = sum q_i ((1 + eps x) Dx)^i.

    Raises:
        HypothesisError: If (1 + eps x)^k does not divide p_k
    """
    if eps not in (-1, 1):
        raise AlgebraError(f"Endpoint sign must be +1 or -1, got {eps}",
                           operation="rewrite_tau_eps")
    domain = op.domain
    label = "(1+x)" if eps == 1 else "(1-x)"
    return _rewrite_powers(op, domain.one + eps * domain.gen, "endpoint", label)


def _primitive_operator(domain: ScalarDomain, coeffs: Sequence[Scalar]) -> DiffOperator:
    """Clear x-denominators and divide by the polynomial content."""
    ring = domain.ring
    common = ring.one
    for c in coeffs:
        if c:
            common = common.lcm(c.denom)
    polys = [c.numer * common.exquo(c.denom) if c else ring.zero for c in coeffs]
    content = ring.zero
    for p in polys:
        if p:
            content = p if not content else content.gcd(p)
    polys = [p.exquo(content) if p else p for p in polys]
    lead = next(p for p in reversed(polys) if p)
    sign = -1 if lead.LC < 0 else 1
    return DiffOperator(domain, [domain.field.new(p * sign) for p in polys])


def symmetric_product(first: DiffOperator, second: DiffOperator) -> DiffOperator:
    """
    An operator annihilating y1*y2 for all solutions y1 of ``first`` and y2 of ``second``.

    Derivatives of y1*y2 are reduced to the basis y1^(a) y2^(b), a < r1, b < r2,
    and the first linear dependency over K(x) is returned with polynomial,
    content-free coefficients.

    Raises:
        AlgebraError: If either operator is zero
    """
    if not first or not second:
        raise AlgebraError("Symmetric product with the zero operator",
                           operation="symmetric_product")
    domain = first.domain
    r1, r2 = first.order, second.order
    if r1 == 0 or r2 == 0:
        return DiffOperator.one(domain)

    reduce1 = [-c / first.leading_coefficient for c in first.coeffs[:-1]]
    reduce2 = [-c / second.leading_coefficient for c in second.coeffs[:-1]]
    size = r1 * r2

    def differentiate(vector: List[Scalar]) -> List[Scalar]:
        out = [domain.zero] * size
        for idx, c in enumerate(vector):
            if not c:
                continue
            a, b = divmod(idx, r2)
            out[idx] += domain.derivative(c)
            if a + 1 < r1:
                out[(a + 1) * r2 + b] += c
            else:
                for i, red in enumerate(reduce1):
                    out[i * r2 + b] += c * red
            if b + 1 < r2:
                out[a * r2 + b + 1] += c
            else:
                for j, red in enumerate(reduce2):
                    out[a * r2 + j] += c * red
        return out

    start = [domain.zero] * size
    start[0] = domain.one
    columns = [start]
    matrix_domain = domain.field.to_domain()
    for k in range(1, size + 1):
        columns.append(differentiate(columns[-1]))
        rows = [[columns[j][i] for j in range(k + 1)] for i in range(size)]
        matrix = DomainMatrix(rows, (size, k + 1), matrix_domain)
        if matrix.rank() < k + 1:
            relation = matrix.nullspace().to_list()[0]
            result = _primitive_operator(domain, relation)
            logger.debug(f"Symmetric product of orders {r1} and {r2} has order {result.order}")
            return result
    raise AlgebraError("No linear dependency found", operation="symmetric_product")


def render_operator(op: DiffOperator) -> str:
    """Reparseable text such as ``(1-x**2)*Dx^2 + (-x)*Dx``."""
    if not op:
        return "0"
    parts = []
    for k in range(op.order, -1, -1):
        c = op.coeffs[k]
        if not c:
            continue
        text = op.domain.render(c)
        if k == 0:
            parts.append(f"({text})")
        elif k == 1:
            parts.append(f"({text})*Dx")
        else:
            parts.append(f"({text})*Dx^{k}")
    return " + ".join(parts)
