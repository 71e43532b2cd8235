"""
Fractions of recurrence operators.

A fraction (N, D) stands for the relation N . u = D . v between two
sequences. Fractions are kept in a normal form of their Z_N-equivalence
class: units of Rec are stripped, integer content removed and the sign
fixed, so that structural equality is equality of classes. Common left
factors are never cancelled.
"""

from dataclasses import dataclass
from math import gcd, lcm
from typing import List, Sequence, Tuple
import logging

from sympy.polys.domains import QQ

from ..exceptions import AlgebraError
from .rec import apply, mclm_rec
from .scalars import Scalar, ScalarDomain
from .shift import ShiftOperator, gcld

logger = logging.getLogger(__name__)


def _normalize_operators(
    domain: ScalarDomain, operators: Sequence[ShiftOperator]
) -> List[ShiftOperator]:
    """
    Normalize a tuple of operators jointly.

    Clears denominators, strips the unit part of the common polynomial
    content, makes the integer content 1 and makes the leading coefficient
    of the highest S-power of the last nonzero operator positive.
    """
    entries = [c for op in operators for c in op.coeffs if c]
    if not entries:
        return [ShiftOperator.zero(domain) for _ in operators]

    ring = domain.ring
    common = ring.one
    for c in entries:
        common = common.lcm(c.denom)
    polys = [
        [c.numer * common.exquo(c.denom) if c else ring.zero for c in op.coeffs]
        for op in operators
    ]

    content = ring.zero
    for row in polys:
        for p in row:
            if p:
                content = p if not content else content.gcd(p)
    unit = domain.zn_unit_part(domain.field.new(content))[0]
    # the natural-root part is a polynomial, so the unit has a ground denominator
    unit_poly = unit.numer.quo_ground(unit.denom.LC)
    polys = [[p.exquo(unit_poly) if p else p for p in row] for row in polys]

    denominators = 1
    numerators = 0
    for row in polys:
        for p in row:
            for coeff in p.itercoeffs():
                denominators = lcm(denominators, int(QQ.denom(coeff)))
    for row in polys:
        for p in row:
            for coeff in p.itercoeffs():
                numerators = gcd(numerators, int(QQ.numer(coeff * denominators)))
    scale = QQ(denominators, numerators)

    reference = next(row for row in reversed(polys) if any(row))
    lead = next(p for p in reversed(reference) if p)
    if lead.LC < 0:
        scale = -scale

    return [
        ShiftOperator(domain, [domain.field.new(p.mul_ground(scale)) for p in row])
        for row in polys
    ]


def normalize_pair(num: ShiftOperator, den: ShiftOperator) -> Tuple[ShiftOperator, ShiftOperator]:
    """Normal form of the class of (num, den); the sign is fixed on den when nonzero."""
    num_n, den_n = _normalize_operators(num.domain, [num, den])
    return num_n, den_n


def recurrence_normal_form(num: ShiftOperator) -> ShiftOperator:
    """Normalize a recurrence alone: units stripped, primitive over Z, leading shift positive."""
    return _normalize_operators(num.domain, [num])[0]


@dataclass(frozen=True)
class RecFraction:
    """An ordered pair (num, den) of recurrence operators in normal form."""
    num: ShiftOperator
    den: ShiftOperator

    def __post_init__(self):
        if self.num.domain != self.den.domain:
            raise AlgebraError("Fraction entries over different domains", operation="fraction")
        num, den = normalize_pair(self.num, self.den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def domain(self) -> ScalarDomain:
        return self.num.domain

    @classmethod
    def of(cls, domain: ScalarDomain, num, den) -> "RecFraction":
        """Build from scalars or operators."""
        def lift(value):
            if isinstance(value, ShiftOperator):
                return value
            return ShiftOperator.scalar(domain, value)
        return cls(lift(num), lift(den))

    @classmethod
    def zero(cls, domain: ScalarDomain) -> "RecFraction":
        return cls(ShiftOperator.zero(domain), ShiftOperator.zero(domain))

    def is_zero(self) -> bool:
        return not self.num and not self.den

    @property
    def degree(self) -> int:
        """Largest S-degree of the two entries."""
        return max(self.num.degree, self.den.degree)

    def __add__(self, other: "RecFraction") -> "RecFraction":
        return frac_add(self, other)

    def __mul__(self, other: "RecFraction") -> "RecFraction":
        return frac_mul(self, other)

    def left_scale(self, c: Scalar) -> "RecFraction":
        return RecFraction(self.num.left_scale(c), self.den.left_scale(c))


def frac_add(p: RecFraction, q: RecFraction) -> RecFraction:
    """
    Sum of fractions: (U p.num + V q.num, M) with (M, U, V) = mclm(p.den, q.den).

    The zero fraction (0, 0) is absorbing.
    """
    if p.is_zero() or q.is_zero():
        return RecFraction.zero(p.domain)
    multiple, u, v = mclm_rec(p.den, q.den)
    return RecFraction(u * p.num + v * q.num, multiple)


def frac_mul(p: RecFraction, q: RecFraction) -> RecFraction:
    """
    Composition, p applied after q: (V q.num, U p.den) with
    (M, U, V) = mclm(p.num, q.den), U p.num = V q.den.
    """
    if p.is_zero() or q.is_zero():
        return RecFraction.zero(p.domain)
    _, u, v = mclm_rec(p.num, q.den)
    return RecFraction(v * q.num, u * p.den)


def is_irreducible(p: RecFraction) -> bool:
    """
    True iff gcld(num, den) has S-degree 0.

    Raises:
        AlgebraError: On the zero fraction
    """
    if p.is_zero():
        raise AlgebraError("The zero fraction has no gcld", operation="is_irreducible")
    return gcld(p.num, p.den).degree == 0


def annihilator_check(
    p: RecFraction, u: Sequence[Scalar], v: Sequence[Scalar], offset: int = 0
) -> bool:
    """
    Membership of (u, -v) in the annihilator of p: num.u - den.v = 0 on the
    common checkable window.

    Raises:
        AlgebraError: If the prefixes leave no checkable index
    """
    if p.is_zero():
        return True
    window = min(len(u) - max(p.num.degree, 0), len(v) - max(p.den.degree, 0))
    if window < 1:
        raise AlgebraError("Prefixes too short for the fraction", operation="annihilator_check",
                           subtype="short_prefix")
    left = apply(p.num, u, offset, window)
    right = apply(p.den, v, offset, window)
    return all(a == b for a, b in zip(left, right))


def fractions_equivalent(p: RecFraction, q: RecFraction) -> bool:
    """Equality of Z_N-classes."""
    return p.num == q.num and p.den == q.den


def fractions_proportional(p: RecFraction, q: RecFraction) -> bool:
    """True iff p = c(n) q entrywise for some nonzero c in K(n)."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    pairs = [
        (a, b)
        for op_p, op_q in ((p.num, q.num), (p.den, q.den))
        for a, b in zip(
            [op_p.coefficient(k) for k in range(max(op_p.degree, op_q.degree) + 1)],
            [op_q.coefficient(k) for k in range(max(op_p.degree, op_q.degree) + 1)],
        )
    ]
    if any(bool(a) != bool(b) for a, b in pairs):
        return False
    ref_a, ref_b = next((a, b) for a, b in pairs if a)
    return all(a * ref_b == b * ref_a for a, b in pairs)
