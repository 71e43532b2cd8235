"""
Recurrence operators: the subring Rec of Sh whose coefficients have no
poles on the natural numbers, so that they act on every sequence.

A recurrence operator is represented by a ShiftOperator that passes
``is_rec``; ``promote`` is the checked entry point.
"""

from typing import List, Optional, Sequence, Tuple
import logging

from ..exceptions import AlgebraError
from .scalars import Scalar, ScalarDomain
from .shift import ShiftOperator, lclm_ext, right_divmod

logger = logging.getLogger(__name__)


def is_rec(op: ShiftOperator) -> bool:
    """True iff no coefficient of ``op`` has a pole at a natural number."""
    return all(not op.domain.natural_poles(c) for c in op.coeffs)


def promote(op: ShiftOperator) -> ShiftOperator:
    """
    Check membership in Rec.

    Raises:
        AlgebraError: Naming the first coefficient with a natural pole
    """
    for k, c in enumerate(op.coeffs):
        poles = op.domain.natural_poles(c)
        if poles:
            root = min(poles)
            raise AlgebraError(
                f"Coefficient of S^{k} has a pole at n={root}",
                operation="promote",
                subtype="natural_pole",
                context={"shift": k, "root": root},
            )
    return op


def apply(
    op: ShiftOperator,
    sequence: Sequence[Scalar],
    offset: int = 0,
    length: Optional[int] = None,
) -> List[Scalar]:
    """
    Apply a recurrence operator to a finite prefix.

    Args:
        op: Operator in Rec
        sequence: Values u_offset, u_offset+1, ...
        offset: Index of the first value
        length: Number of output values (default: as many as the prefix allows)

    Returns:
        v_i = sum_j a_j(i) u_{i+j} for i = offset, offset+1, ...

    Raises:
        AlgebraError: If the prefix is too short
    """
    domain = op.domain
    span = max(op.degree, 0)
    available = len(sequence) - span
    if length is None:
        length = available
    if length < 1 or length > available:
        raise AlgebraError(
            f"Prefix of length {len(sequence)} too short for an operator of degree {op.degree}",
            operation="apply",
            subtype="short_prefix",
        )
    values = [domain(u) for u in sequence]
    result = []
    for i in range(length):
        total = domain.zero
        for j, c in enumerate(op.coeffs):
            if c:
                total += domain.evaluate(c, offset + i) * values[i + j]
        result.append(total)
    return result


def mclm_rec(
    a: ShiftOperator, b: ShiftOperator
) -> Tuple[ShiftOperator, ShiftOperator, ShiftOperator]:
    """
    Minimal common left multiple in Rec with cofactors.

    Computed as d * lclm_Sh(a, b) where d clears the natural poles of the
    Sh cofactors. When one side is a power of S and the other is not
    divisible by S, the product S^j * a is returned directly.

    Returns:
        (M, U, V) with M = U*a = V*b and U, V in Rec

    Raises:
        AlgebraError: If both operands are zero
    """
    domain = a.domain
    if not a and not b:
        raise AlgebraError("mclm(0, 0) is undefined", operation="mclm_rec")
    if b and b.is_monomial_power() and a and a.valuation == 0:
        j = b.degree
        return (
            ShiftOperator.monomial(domain, j) * a,
            ShiftOperator.monomial(domain, j),
            a.shift_arg(j),
        )
    if a and a.is_monomial_power() and b and b.valuation == 0:
        j = a.degree
        return (
            ShiftOperator.monomial(domain, j) * b,
            b.shift_arg(j),
            ShiftOperator.monomial(domain, j),
        )
    multiple, u, v = lclm_ext(a, b)
    if not multiple:
        return multiple, u, v
    d = domain.zn_denominator_lcm(list(u.coeffs) + list(v.coeffs))
    if d != domain.one:
        logger.debug(f"mclm scale factor {domain.render(d)}")
    return multiple.left_scale(d), u.left_scale(d), v.left_scale(d)


def val_Sn(op: ShiftOperator) -> int:
    """S-valuation; errors on the zero operator."""
    return op.valuation


def strip_Sn_left(op: ShiftOperator, ell: int) -> Tuple[ShiftOperator, Scalar]:
    """
    Exact left division by S^ell followed by pole clearing.

    Returns:
        (B, q) with B = q * A_hat in Rec, where S^ell * A_hat = op and q is the
        minimal product of (n-k)^m factors

    Raises:
        AlgebraError: If the valuation of ``op`` is smaller than ``ell``
    """
    if op and op.valuation < ell:
        raise AlgebraError(
            f"Valuation {op.valuation} is smaller than {ell}",
            operation="strip_Sn_left",
        )
    quotient = op.strip_low(ell)
    q = op.domain.zn_denominator_lcm(quotient.coeffs)
    return quotient.left_scale(q), q


def strip_Sn_left_pair(
    a: ShiftOperator, b: ShiftOperator, ell: int
) -> Tuple[ShiftOperator, ShiftOperator, Scalar]:
    """Strip S^ell from both entries with one common pole-clearing factor q."""
    for op in (a, b):
        if op and op.valuation < ell:
            raise AlgebraError(
                f"Valuation {op.valuation} is smaller than {ell}",
                operation="strip_Sn_left",
            )
    qa, qb = a.strip_low(ell), b.strip_low(ell)
    q = a.domain.zn_denominator_lcm(list(qa.coeffs) + list(qb.coeffs))
    return qa.left_scale(q), qb.left_scale(q), q


def exact_right_divide(a: ShiftOperator, b: ShiftOperator) -> Tuple[ShiftOperator, Scalar]:
    """
    Exact right division in Rec.

    Returns:
        (G, scale) with scale*a = G*b, G in Rec and scale minimal

    Raises:
        AlgebraError: If ``b`` does not right-divide ``a``
    """
    quotient, rest = right_divmod(a, b)
    if rest:
        raise AlgebraError("Right division is not exact", operation="exact_right_divide",
                           subtype="nonzero_remainder")
    scale = a.domain.zn_denominator_lcm(quotient.coeffs)
    return quotient.left_scale(scale), scale


def d_den_power(d_den: ShiftOperator, r: int) -> ShiftOperator:
    """D_den,r = D_den(n+r-1, S) * ... * D_den(n+1, S) * D_den(n, S)."""
    result = ShiftOperator.one(d_den.domain)
    for j in range(r):
        result = result * d_den.shift_arg(r - 1 - j)
    return result


def right_multiply_by_sequence(op: ShiftOperator, ratio: Scalar) -> ShiftOperator:
    """
    Return op * h_n for the hypergeometric sequence with h_{n+1}/h_n = ratio,
    up to the common left factor h_n: coefficient k is scaled by
    ratio(n) ratio(n+1) ... ratio(n+k-1).
    """
    domain: ScalarDomain = op.domain
    coeffs = []
    factor = domain.one
    for k, c in enumerate(op.coeffs):
        coeffs.append(c * factor)
        factor = factor * domain.shift(ratio, k)
    return ShiftOperator(domain, coeffs)
