"""
Exact verification oracle.

Builds psi_0..psi_N from the three-term recurrence, expands polynomials
in that basis by triangular elimination and checks claimed relations
N . [psi_n](f) = D . [psi_n](g) on the whole prefix. Polynomial inputs
keep everything exact, no integrals are involved.
"""

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence
import logging

from .algebra.diffop import DiffOperator
from .algebra.fractions import RecFraction, annihilator_check
from .algebra.rec import apply
from .algebra.scalars import Scalar, ScalarDomain
from .algebra.shift import ShiftOperator
from .exceptions import OracleError
from .families.base import FamilySpec
from .utils.constants import DEFAULT_ORACLE_SIZE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisPrefix:
    """psi_0..psi_size of one family, as polynomials in x."""
    spec: FamilySpec
    polynomials: List[Scalar]

    @property
    def size(self) -> int:
        return len(self.polynomials) - 1


def sl_residual(spec: FamilySpec, psi: Scalar, n: int) -> Scalar:
    """sigma psi'' + tau psi' + lambda_n psi."""
    X = spec.x_domain
    d1 = X.derivative(psi)
    d2 = X.derivative(d1)
    lam = X(spec.n_domain.evaluate(spec.eigenvalue, n))
    return spec.sigma * d2 + spec.tau * d1 + lam * psi


def build_basis(spec: FamilySpec, size: int) -> BasisPrefix:
    """
    Build psi_0..psi_size and validate each against the Sturm-Liouville equation.

    Raises:
        OracleError: If size < 1, or a polynomial has the wrong degree or fails the equation
    """
    if size < 1:
        raise OracleError(f"Basis size must be at least 1, got {size}", window=size)
    X, N = spec.x_domain, spec.n_domain
    A, B, C = spec.three_term
    polys = list(spec.seeds)
    for n in range(1, size):
        a = X(N.evaluate(A, n))
        b = X(N.evaluate(B, n))
        c = X(N.evaluate(C, n))
        polys.append((a * X.gen + b) * polys[n] - c * polys[n - 1])

    for k, psi in enumerate(polys):
        if X.degree(psi) != k:
            raise OracleError(
                f"{spec.label}: psi_{k} has degree {X.degree(psi)}",
                subtype="basis_degree",
            )
        if sl_residual(spec, psi, k):
            raise OracleError(
                f"{spec.label}: psi_{k} does not satisfy the Sturm-Liouville equation",
                subtype="sturm_liouville",
            )
    logger.debug(f"Built {spec.label} basis up to degree {size}")
    return BasisPrefix(spec, polys)


def expand(f: Scalar, basis: BasisPrefix) -> List[Scalar]:
    """
    Coefficients c_0..c_size of f = sum c_k psi_k, as constants of the n-domain.

    The index 0 entry is doubled for families with that convention.

    Raises:
        OracleError: If deg f exceeds the basis size
    """
    spec = basis.spec
    X, N = spec.x_domain, spec.n_domain
    rest = X(f)
    degree = X.degree(rest)
    if degree > basis.size:
        raise OracleError(
            f"Degree {degree} exceeds the basis size {basis.size}",
            window=basis.size,
            subtype="degree_overflow",
        )
    coeffs = [N.zero] * (basis.size + 1)
    for k in range(degree, -1, -1):
        psi = basis.polynomials[k]
        c = X.coefficient(rest, k) / X.leading_coefficient(psi)
        if c:
            rest = rest - c * psi
            coeffs[k] = N(c)
    if rest:
        raise OracleError("Triangular expansion left a remainder", subtype="expansion")
    if spec.doubled_zero:
        coeffs[0] = 2 * coeffs[0]
    return coeffs


def reconstruct(coeffs: Sequence[Scalar], basis: BasisPrefix) -> Scalar:
    """Inverse of ``expand``."""
    spec = basis.spec
    X = spec.x_domain
    total = X.zero
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0 and spec.doubled_zero:
            c = c / 2
        total += X(c) * basis.polynomials[k]
    return total


def _window(fraction: RecFraction, degrees: Sequence[int], size: Optional[int]) -> int:
    span = max(fraction.degree, 0)
    needed = max(degrees) + span
    if size is None:
        return max(DEFAULT_ORACLE_SIZE, needed + 2)
    if needed > size:
        raise OracleError(
            f"Window of size {size} too small: need degree {max(degrees)} plus shift span {span}",
            window=size,
            subtype="window",
        )
    return size


def check_relation(
    fraction: RecFraction,
    L: DiffOperator,
    f: Scalar,
    spec: FamilySpec,
    size: Optional[int] = None,
) -> bool:
    """
    Check N . [psi_n](f) = D . [psi_n](L f) at every index of the prefix.

    Args:
        size: Basis size; chosen from the degrees when omitted

    Raises:
        OracleError: If an explicit size leaves no room for the shifts
    """
    X = spec.x_domain
    f = X(f)
    g = L.apply(f)
    size = _window(fraction, [X.degree(f), X.degree(g)], size)
    basis = build_basis(spec, size)
    return annihilator_check(fraction, expand(f, basis), expand(g, basis))


def check_pair(
    pair: RecFraction,
    transform: Callable[[Scalar], Scalar],
    basis: BasisPrefix,
    count: Optional[int] = None,
) -> bool:
    """
    Check pair.num . [psi](psi_j) = pair.den . [psi](transform(psi_j)) for j = 0..count.

    Used for the X, D, theta and endpoint pairs of a family.
    """
    spec = basis.spec
    X = spec.x_domain
    span = max(pair.degree, 0)
    if count is None:
        count = basis.size - span - 1
    if count < 0:
        raise OracleError(f"Basis of size {basis.size} too small for the pair", window=basis.size)
    for j in range(count + 1):
        psi = basis.polynomials[j]
        image = transform(psi)
        if X.degree(image) > basis.size - span:
            raise OracleError(
                f"Image of psi_{j} has degree {X.degree(image)}, beyond the window",
                window=basis.size,
            )
        if not annihilator_check(pair, expand(psi, basis), expand(image, basis)):
            logger.debug(f"{spec.label}: pair relation fails at psi_{j}")
            return False
    return True


def annihilates(op: ShiftOperator, sequence: Sequence[Scalar]) -> bool:
    """True iff op . sequence vanishes on the whole checkable prefix."""
    return all(not value for value in apply(op, sequence))


def taylor_coefficients(f: Scalar, domain: ScalarDomain, size: int) -> List[Scalar]:
    """Coefficients of x^0..x^size of the polynomial f, in the n-domain ``domain``."""
    X = ScalarDomain(domain.params, "x")
    f = X(f)
    return [domain(X.coefficient(f, k)) if k <= X.degree(f) else domain.zero
            for k in range(size + 1)]


def check_taylor_relation(
    fraction: RecFraction, L: DiffOperator, f: Scalar, size: Optional[int] = None
) -> bool:
    """Taylor analogue of ``check_relation``."""
    X = L.domain
    f = X(f)
    g = L.apply(f)
    size = _window(fraction, [X.degree(f), X.degree(g)], size)
    return annihilator_check(
        fraction,
        taylor_coefficients(f, fraction.domain, size),
        taylor_coefficients(g, fraction.domain, size),
    )
