"""
Shift operators: the Ore ring Sh = K(n)<S> with S q(n) = q(n+1) S.

Provides multiplication, left and right Euclidean division, the extended
right Euclidean algorithm (gcrd, lclm with cofactors) and the left-sided
counterparts obtained through the involution
iota(sum a_k(n) S^k) = sum a_k(-n-k) S^k, an anti-automorphism of Sh.
"""

from typing import Iterable, List, Tuple, Union
import logging

from ..exceptions import AlgebraError
from .scalars import Scalar, ScalarDomain, ScalarLike

logger = logging.getLogger(__name__)


class ShiftOperator:
    """An element sum_k a_k(n) S^k of Sh, coefficients in ascending powers of S."""

    __slots__ = ("domain", "coeffs", "_hash")

    def __init__(self, domain: ScalarDomain, coeffs: Iterable[ScalarLike] = ()):
        values = [domain(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.domain = domain
        self.coeffs: Tuple[Scalar, ...] = tuple(values)
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, domain: ScalarDomain) -> "ShiftOperator":
        return cls(domain, ())

    @classmethod
    def one(cls, domain: ScalarDomain) -> "ShiftOperator":
        return cls(domain, (domain.one,))

    @classmethod
    def scalar(cls, domain: ScalarDomain, value: ScalarLike) -> "ShiftOperator":
        return cls(domain, (value,))

    @classmethod
    def monomial(cls, domain: ScalarDomain, power: int, value: ScalarLike = 1) -> "ShiftOperator":
        """value * S^power."""
        if power < 0:
            raise AlgebraError(f"Negative shift power {power}", operation="monomial")
        return cls(domain, [domain.zero] * power + [domain(value)])

    # structure

    @property
    def degree(self) -> int:
        """Degree in S; -1 for the zero operator."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

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

    @property
    def valuation(self) -> int:
        """Least k with a_k != 0."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise AlgebraError("Valuation of the zero operator", operation="valuation")

    def is_monomial_power(self) -> bool:
        """True if the operator is exactly S^k for some k."""
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one and not any(
            self.coeffs[:-1]
        )

    # ring operations

    def _coerce(self, other: Union["ShiftOperator", ScalarLike]) -> "ShiftOperator":
        if isinstance(other, ShiftOperator):
            if other.domain != self.domain:
                raise AlgebraError("Operators over different domains", operation="coerce")
            return other
        return ShiftOperator.scalar(self.domain, other)

    def __add__(self, other):
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return ShiftOperator(
            self.domain,
            [self.coefficient(k) + other.coefficient(k) for k in range(size)],
        )

    __radd__ = __add__

    def __neg__(self) -> "ShiftOperator":
        return ShiftOperator(self.domain, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return ShiftOperator.zero(self.domain)
        result = [self.domain.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    result[i + j] += a * self.domain.shift(b, i)
        return ShiftOperator(self.domain, result)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, power: int) -> "ShiftOperator":
        result = ShiftOperator.one(self.domain)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShiftOperator):
            return NotImplemented
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.domain, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"ShiftOperator({render_shift(self)})"

    def left_scale(self, a: ScalarLike) -> "ShiftOperator":
        """a(n) * self."""
        a = self.domain(a)
        return ShiftOperator(self.domain, [a * c for c in self.coeffs])

    def right_scale(self, a: ScalarLike) -> "ShiftOperator":
        """self * a(n), i.e. coefficients a_k(n) a(n+k)."""
        a = self.domain(a)
        return ShiftOperator(
            self.domain,
            [c * self.domain.shift(a, k) for k, c in enumerate(self.coeffs)],
        )

    def shift_arg(self, k: int) -> "ShiftOperator":
        """A(n+k, S): every coefficient shifted by k; S^k A = A(n+k) S^k."""
        if k == 0:
            return self
        return ShiftOperator(self.domain, [self.domain.shift(c, k) for c in self.coeffs])

    def monic(self) -> "ShiftOperator":
        if not self.coeffs:
            return self
        return self.left_scale(1 / self.leading_coefficient)

    def involution(self) -> "ShiftOperator":
        """iota(sum a_k(n) S^k) = sum a_k(-n-k) S^k."""
        return ShiftOperator(
            self.domain,
            [self.domain.reflect(c, k) for k, c in enumerate(self.coeffs)],
        )

    def strip_low(self, count: int) -> "ShiftOperator":
        """Formal left quotient by S^count: coefficients a_{j+count}(n-count)."""
        if count and any(self.coeffs[:count]):
            raise AlgebraError(f"Operator is not divisible by S^{count}",
                               operation="strip_low")
        return ShiftOperator(
            self.domain,
            [self.domain.shift(c, -count) for c in self.coeffs[count:]],
        )

    def right_divmod(self, other: "ShiftOperator") -> Tuple["ShiftOperator", "ShiftOperator"]:
        return right_divmod(self, other)


def sh_mul(a: ShiftOperator, b: ShiftOperator) -> ShiftOperator:
    """Product in Sh."""
    return a * b


def right_divmod(a: ShiftOperator, b: ShiftOperator) -> Tuple[ShiftOperator, ShiftOperator]:
    """
    Right Euclidean division.

    Args:
        a: Dividend
        b: Nonzero divisor

    Returns:
        (Q, R) with a = Q*b + R and deg R < deg b

    Raises:
        AlgebraError: If ``b`` is zero
    """
    if not b:
        raise AlgebraError("Right division by the zero operator", operation="right_divmod",
                           subtype="division_by_zero")
    domain = a.domain
    quotient = [domain.zero] * max(a.degree - b.degree + 1, 0)
    rest = a
    lead = b.leading_coefficient
    while rest and rest.degree >= b.degree:
        d = rest.degree - b.degree
        t = rest.leading_coefficient / domain.shift(lead, d)
        quotient[d] += t
        rest = rest - ShiftOperator.monomial(domain, d, t) * b
    return ShiftOperator(domain, quotient), rest


def left_divmod(a: ShiftOperator, b: ShiftOperator) -> Tuple[ShiftOperator, ShiftOperator]:
    """
    Left Euclidean division: a = b*Q + R with deg R < deg b.

    Raises:
        AlgebraError: If ``b`` is zero
    """
    if not b:
        raise AlgebraError("Left division by the zero operator", operation="left_divmod",
                           subtype="division_by_zero")
    q, r = right_divmod(a.involution(), b.involution())
    return q.involution(), r.involution()


def gcrd_ext(
    a: ShiftOperator, b: ShiftOperator
) -> Tuple[ShiftOperator, ShiftOperator, ShiftOperator, ShiftOperator, ShiftOperator]:
    """
    Extended right Euclidean algorithm.

    Returns:
        (G, s, t, s1, t1) with s*a + t*b = G monic, and s1*a + t1*b = 0 where
        s1*a is a least common left multiple.

    Raises:
        AlgebraError: If both operands are zero
    """
    if not a and not b:
        raise AlgebraError("gcrd(0, 0) is undefined", operation="gcrd")
    domain = a.domain
    one, zero = ShiftOperator.one(domain), ShiftOperator.zero(domain)
    r0, s0, t0 = a, one, zero
    r1, s1, t1 = b, zero, one
    if r0:
        c = 1 / r0.leading_coefficient
        r0, s0, t0 = r0.left_scale(c), s0.left_scale(c), t0.left_scale(c)
    steps = 0
    while r1:
        c = 1 / r1.leading_coefficient
        r1, s1, t1 = r1.left_scale(c), s1.left_scale(c), t1.left_scale(c)
        q, r = right_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
        steps += 1
    logger.debug(f"Right Euclid finished after {steps} steps, gcrd degree {r0.degree}")
    return r0, s0, t0, s1, t1


def gcrd(a: ShiftOperator, b: ShiftOperator) -> ShiftOperator:
    """Monic greatest common right divisor."""
    return gcrd_ext(a, b)[0]


def lclm_ext(
    a: ShiftOperator, b: ShiftOperator
) -> Tuple[ShiftOperator, ShiftOperator, ShiftOperator]:
    """
    Monic least common left multiple with cofactors.

    Returns:
        (L, U, V) with L = U*a = V*b monic of degree deg a + deg b - deg gcrd(a, b).
        If one operand is zero, L = 0 with (U, V) = (1, 0) or (0, 1).

    Raises:
        AlgebraError: If both operands are zero
    """
    domain = a.domain
    if not a and not b:
        raise AlgebraError("lclm(0, 0) is undefined", operation="lclm")
    if not a:
        return ShiftOperator.zero(domain), ShiftOperator.one(domain), ShiftOperator.zero(domain)
    if not b:
        return ShiftOperator.zero(domain), ShiftOperator.zero(domain), ShiftOperator.one(domain)
    _, _, _, s1, t1 = gcrd_ext(a, b)
    multiple = s1 * a
    c = 1 / multiple.leading_coefficient
    return multiple.left_scale(c), s1.left_scale(c), (-t1).left_scale(c)


def gcld(a: ShiftOperator, b: ShiftOperator) -> ShiftOperator:
    """Monic greatest common left divisor, iota(gcrd(iota a, iota b))."""
    return gcrd(a.involution(), b.involution()).involution()


def gcld_ext(
    a: ShiftOperator, b: ShiftOperator
) -> Tuple[ShiftOperator, ShiftOperator, ShiftOperator]:
    """
    Left Bezout relation.

    Returns:
        (G, U, V) with a*U + b*V = G, G the monic gcld of a and b
    """
    g, s, t, _, _ = gcrd_ext(a.involution(), b.involution())
    return g.involution(), s.involution(), t.involution()


def gcld_cofactors(
    a: ShiftOperator, b: ShiftOperator
) -> Tuple[ShiftOperator, ShiftOperator, ShiftOperator]:
    """Return (G, A', B') with a = G*A' and b = G*B'."""
    g = gcld(a, b)
    qa, ra = left_divmod(a, g)
    qb, rb = left_divmod(b, g)
    if ra or rb:
        raise AlgebraError("gcld does not divide its arguments", operation="gcld_cofactors")
    return g, qa, qb


def extended_left_gcd_with_Sn_power(
    g: ShiftOperator, ell: int
) -> Tuple[ShiftOperator, ShiftOperator, Scalar]:
    """
    Solve U*g + V*S^ell = 1.

    Args:
        g: Operator not divisible by S
        ell: Power of S

    Returns:
        (U, V, c) where c is the monic lcm of all coefficient denominators of U and V

    Raises:
        AlgebraError: If S divides g (then g and S^ell are not coprime)
    """
    domain = g.domain
    if not g or g.valuation > 0:
        raise AlgebraError(
            "S divides the operator, no Bezout relation with a power of S exists",
            operation="extended_left_gcd_with_Sn_power",
        )
    power = ShiftOperator.monomial(domain, ell)
    unit, u, v, _, _ = gcrd_ext(g, power)
    if unit != ShiftOperator.one(domain):
        raise AlgebraError(
            f"Operator and S^{ell} are not coprime",
            operation="extended_left_gcd_with_Sn_power",
        )
    c = domain.lcm_denominators(list(u.coeffs) + list(v.coeffs))
    return u, v, c


def render_shift(op: ShiftOperator, symbol: str = "S") -> str:
    """Compact form such as ``(n+1)*S^2 - 1``; highest power first."""
    if not op:
        return "0"
    parts: List[str] = []
    for k in range(op.degree, -1, -1):
        c = op.coeffs[k]
        if not c:
            continue
        text = op.domain.render(c)
        power = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
        if not power:
            parts.append(f"({text})")
        elif text == "1":
            parts.append(power)
        elif text == "-1":
            parts.append(f"-{power}")
        else:
            parts.append(f"({text})*{power}")
    return " + ".join(parts)
