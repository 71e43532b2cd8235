"""
Recurrence engine.

Turns a differential operator L into a fraction (N, D) of recurrence
operators with N . [psi_n](f) = D . [psi_n](L f), where [psi_n](f) is the
coefficient sequence of f in the basis (or its Taylor coefficients).
The standard mode returns an irreducible fraction; the theta and
endpoint modes work on L rewritten in powers of sigma*Dx or (1 + eps x)*Dx.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union
import logging

from .algebra.diffop import DiffOperator, rewrite_tau_eps, rewrite_theta, to_left_form
from .algebra.fractions import (
    RecFraction,
    frac_add,
    frac_mul,
    is_irreducible,
    recurrence_normal_form,
)
from .algebra.rec import d_den_power, exact_right_divide, strip_Sn_left_pair
from .algebra.scalars import Scalar, ScalarDomain
from .algebra.shift import ShiftOperator, extended_left_gcd_with_Sn_power
from .exceptions import AlgebraError, UnsupportedModeError
from .families.base import FamilySpec
from .utils.constants import VARIABLE_N, HornerScheme, Mode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HypothesisReport:
    """Analytic conditions under which the recurrence holds for a solution f."""
    mode: str
    order: int
    family: str
    conditions: Tuple[str, ...] = ()

    def lines(self) -> List[str]:
        return list(self.conditions)


@dataclass(frozen=True)
class RecurrenceResult:
    """Outcome of one engine run."""
    fraction: RecFraction
    recurrence: ShiftOperator
    hypotheses: HypothesisReport
    mode: str
    basis: Optional[FamilySpec] = None
    irreducible: Optional[bool] = None
    path: str = ""
    c: Optional[Scalar] = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return self.recurrence.degree

    @property
    def domain(self) -> ScalarDomain:
        return self.fraction.domain


def _constant(domain: ScalarDomain, value: Scalar) -> RecFraction:
    return RecFraction.of(domain, domain(value), 1)


# Horner evaluation over arbitrary X and D pairs


def _horner_poly(p: Scalar, X: ScalarDomain, N: ScalarDomain, x_pair: RecFraction) -> RecFraction:
    if not p:
        return _constant(N, N.zero)
    coeffs = X.coefficients(p)
    result = _constant(N, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        result = frac_mul(result, x_pair)
        if c:
            result = frac_add(result, _constant(N, c))
    return result


def _left_horner(
    qs: Sequence[Scalar], X: ScalarDomain, N: ScalarDomain, x_pair: RecFraction, d_pair: RecFraction
) -> RecFraction:
    """sum Dx^i q_i, evaluated as q_0 + Dx (q_1 + Dx (q_2 + ...))."""
    result = _horner_poly(qs[-1], X, N, x_pair)
    for q in reversed(qs[:-1]):
        result = frac_mul(d_pair, result)
        if q:
            result = frac_add(result, _horner_poly(q, X, N, x_pair))
    return result


def _right_horner(
    ps: Sequence[Scalar], X: ScalarDomain, N: ScalarDomain, x_pair: RecFraction, d_pair: RecFraction
) -> RecFraction:
    """sum p_i T^i for the derivation-like pair T, evaluated as ((p_r T + p_{r-1}) T + ...)."""
    result = _horner_poly(ps[-1], X, N, x_pair)
    for p in reversed(ps[:-1]):
        result = frac_mul(result, d_pair)
        if p:
            result = frac_add(result, _horner_poly(p, X, N, x_pair))
    return result


def _require_operator(L: DiffOperator, spec: Optional[FamilySpec] = None) -> None:
    if not L:
        raise AlgebraError("The zero operator has no recurrence", operation="recurrence")
    if spec is not None and L.domain != spec.x_domain:
        raise AlgebraError(
            f"Operator domain {L.domain!r} differs from the basis domain {spec.x_domain!r}",
            operation="recurrence",
        )


def horner_poly(p: Scalar, spec: FamilySpec) -> RecFraction:
    """
    Fraction of the multiplication by p(x); its denominator is S^deg(p).
    """
    return _horner_poly(spec.x_domain(p), spec.x_domain, spec.n_domain, spec.x_pair)


def left_horner(L: DiffOperator, spec: FamilySpec) -> RecFraction:
    """Fraction of L evaluated in the left form sum Dx^i q_i(x)."""
    _require_operator(L, spec)
    return _left_horner(to_left_form(L), spec.x_domain, spec.n_domain, spec.x_pair, spec.d_pair)


def right_horner(L: DiffOperator, spec: FamilySpec) -> RecFraction:
    """Fraction of L evaluated in the right form sum p_i(x) Dx^i."""
    _require_operator(L, spec)
    return _right_horner(L.coeffs, spec.x_domain, spec.n_domain, spec.x_pair, spec.d_pair)


def left_horner_closed_form(L: DiffOperator, spec: FamilySpec) -> RecFraction:
    """
    The left Horner fraction built directly:

        (sum_k S^(m - deg q_k + k) D_den,r-k(n + deg q_k, S) Q_k,  S^m D_den,r)

    with m = max(deg q_k - k, 0) and Q_k the numerator of horner_poly(q_k)
    scaled so that its denominator is exactly S^deg(q_k).
    """
    _require_operator(L, spec)
    X, N = spec.x_domain, spec.n_domain
    qs = to_left_form(L)
    r = len(qs) - 1
    m = max([X.degree(q) - k for k, q in enumerate(qs) if q] + [0])
    shift = ShiftOperator.monomial(N, 1)
    num = ShiftOperator.zero(N)
    for k, q in enumerate(qs):
        if not q:
            continue
        deg = X.degree(q)
        pair = horner_poly(q, spec)
        Q = pair.num.left_scale(1 / pair.den.coefficient(deg))
        factor = d_den_power(spec.d_den, r - k).shift_arg(deg)
        num = num + shift ** (m - deg + k) * factor * Q
    den = shift ** m * d_den_power(spec.d_den, r)
    return RecFraction(num, den)


def _standard_report(L: DiffOperator, spec: FamilySpec) -> HypothesisReport:
    conditions = [
        f"the coefficient sequences of f^(j) in the {spec.label} basis exist "
        f"for 0 <= j <= {L.order}",
    ]
    if spec.doubled_zero:
        conditions.append("index 0 of every sequence holds twice the coefficient of T_0")
    return HypothesisReport(Mode.STANDARD.value, L.order, spec.label, tuple(conditions))


def main_recurrence(L: DiffOperator, spec: FamilySpec) -> RecurrenceResult:
    """
    Irreducible fraction for L in the basis of ``spec``.

    Uses left Horner when gcd(p_r, sigma) = 1, otherwise right Horner
    followed by removal of the common left power S^ell.

    Raises:
        AlgebraError: On the zero operator
    """
    _require_operator(L, spec)
    X, N = spec.x_domain, spec.n_domain
    report = _standard_report(L, spec)
    c: Optional[Scalar] = None

    if X.degree(X.gcd(L.leading_coefficient, spec.sigma)) == 0:
        fraction = left_horner(L, spec)
        path = HornerScheme.LEFT.value
        logger.info(f"{spec.label}: gcd(p_r, sigma) = 1, left Horner")
    else:
        path = HornerScheme.RIGHT.value
        pair = right_horner(L, spec)
        A, B = pair.num, pair.den
        ell = min(op.valuation for op in (A, B) if op)
        logger.info(f"{spec.label}: right Horner, S valuation {ell}")
        if ell == 0:
            fraction = pair
        else:
            A_hat, B_hat, q = strip_Sn_left_pair(A, B, ell)
            D_r = d_den_power(spec.d_den, L.order)
            shifted = ShiftOperator.monomial(N, B_hat.valuation) * D_r
            G_hat, _ = exact_right_divide(shifted, B_hat)
            _, _, c = extended_left_gcd_with_Sn_power(G_hat, ell)
            logger.info(f"{spec.label}: c(n) = {N.render(c)}" + (" (trivial)" if N.is_rec_unit(c) else ""))
            fraction = RecFraction(A_hat.left_scale(c), B_hat.left_scale(c))

    return RecurrenceResult(
        fraction=fraction,
        recurrence=recurrence_normal_form(fraction.num),
        hypotheses=report,
        mode=Mode.STANDARD.value,
        basis=spec,
        irreducible=is_irreducible(fraction),
        path=path,
        c=c,
    )


def theta_main(L: DiffOperator, spec: FamilySpec) -> RecurrenceResult:
    """
    Fraction for L = sum q_i (sigma Dx)^i, evaluated by right Horner over the theta pair.

    Raises:
        UnsupportedModeError: For families with constant sigma
        HypothesisError: If sigma^k does not divide p_k
    """
    _require_operator(L, spec)
    theta = spec.theta_pair
    if theta is None:
        raise UnsupportedModeError(
            f"Theta mode needs a non-constant sigma, {spec.name} has sigma = 1",
            family=spec.name,
            mode=Mode.THETA.value,
        )
    qs = rewrite_theta(L, spec.sigma)
    fraction = _right_horner(qs, spec.x_domain, spec.n_domain, spec.x_pair, theta)
    sigma = spec.x_domain.render(spec.sigma)
    report = HypothesisReport(
        Mode.THETA.value,
        L.order,
        spec.label,
        (
            f"sigma^k divides the coefficient of Dx^k for 0 <= k <= {L.order} (checked)",
            f"the coefficient sequences of sigma^k f^(k), sigma = {sigma}, in the "
            f"{spec.label} basis exist for 0 <= k <= {L.order}",
        ),
    )
    logger.info(f"{spec.label}: theta mode, operator in powers of ({sigma})*Dx")
    return RecurrenceResult(
        fraction=fraction,
        recurrence=recurrence_normal_form(fraction.num),
        hypotheses=report,
        mode=Mode.THETA.value,
        basis=spec,
        irreducible=is_irreducible(fraction),
        path=HornerScheme.RIGHT.value,
    )


def endpoint_main(L: DiffOperator, spec: FamilySpec, eps: int) -> RecurrenceResult:
    """
    Fraction for L = sum q_i ((1 + eps x) Dx)^i. Irreducibility is reported, not guaranteed.

    Raises:
        UnsupportedModeError: For laguerre and hermite
        HypothesisError: If (1 + eps x)^k does not divide p_k
    """
    _require_operator(L, spec)
    mode = Mode.ENDPOINT_PLUS.value if eps == 1 else Mode.ENDPOINT_MINUS.value
    pair = spec.endpoint_pair(eps)
    qs = rewrite_tau_eps(L, eps)
    fraction = _right_horner(qs, spec.x_domain, spec.n_domain, spec.x_pair, pair)
    factor = "1+x" if eps == 1 else "1-x"
    report = HypothesisReport(
        mode,
        L.order,
        spec.label,
        (
            f"({factor})^k divides the coefficient of Dx^k for 0 <= k <= {L.order} (checked)",
            f"the coefficient sequences of ({factor})^k f^(k) in the {spec.label} basis "
            f"exist for 0 <= k <= {L.order}",
            "the fraction is not guaranteed to be irreducible",
        ),
    )
    return RecurrenceResult(
        fraction=fraction,
        recurrence=recurrence_normal_form(fraction.num),
        hypotheses=report,
        mode=mode,
        basis=spec,
        irreducible=is_irreducible(fraction),
        path=HornerScheme.RIGHT.value,
    )


def taylor_pairs(N: ScalarDomain) -> Tuple[RecFraction, RecFraction]:
    """X pair (1, S) and D pair ((n+1) S, 1) of the Taylor coefficients at 0."""
    shift = ShiftOperator.monomial(N, 1)
    return (
        RecFraction(ShiftOperator.one(N), shift),
        RecFraction(shift.left_scale(N.gen + 1), ShiftOperator.one(N)),
    )


def taylor_fraction(
    L: DiffOperator, scheme: Union[HornerScheme, str] = HornerScheme.RIGHT
) -> RecFraction:
    """Fraction of L acting on Taylor coefficients at 0."""
    _require_operator(L)
    X = L.domain
    N = ScalarDomain(X.params, VARIABLE_N)
    x_pair, d_pair = taylor_pairs(N)
    if HornerScheme(scheme) is HornerScheme.LEFT:
        return _left_horner(to_left_form(L), X, N, x_pair, d_pair)
    return _right_horner(L.coeffs, X, N, x_pair, d_pair)


def taylor_recurrence(L: DiffOperator) -> RecurrenceResult:
    fraction = taylor_fraction(L, HornerScheme.LEFT)
    report = HypothesisReport(
        Mode.TAYLOR.value,
        L.order,
        "taylor",
        ("f is a formal power series at 0 and u(n) is its coefficient of x^n",),
    )
    return RecurrenceResult(
        fraction=fraction,
        recurrence=recurrence_normal_form(fraction.num),
        hypotheses=report,
        mode=Mode.TAYLOR.value,
        irreducible=is_irreducible(fraction),
        path=HornerScheme.LEFT.value,
    )


def recurrence_for(
    L: DiffOperator, spec: Optional[FamilySpec], mode: Union[Mode, str] = Mode.AUTO
) -> RecurrenceResult:
    """
    Dispatch on the mode.

    Raises:
        UnsupportedModeError: If the mode needs a basis and none is given
    """
    mode = Mode(mode)
    if mode is Mode.TAYLOR:
        return taylor_recurrence(L)
    if spec is None:
        raise UnsupportedModeError(f"Mode {mode.value} needs a basis", mode=mode.value)
    if mode in (Mode.AUTO, Mode.STANDARD):
        return main_recurrence(L, spec)
    if mode is Mode.THETA:
        return theta_main(L, spec)
    return endpoint_main(L, spec, 1 if mode is Mode.ENDPOINT_PLUS else -1)
