"""
Exact scalar arithmetic for operator coefficients.

A ScalarDomain wraps a sympy ``FracField`` over QQ whose first generator is
the main variable (``n`` for recurrence operators, ``x`` for differential
operators) and whose remaining generators are the symbolic parameters.
Parameters are algebraically independent, so an element whose denominator
does not involve the main variable is a polynomial over K = Q(params), and
a polynomial vanishes at a natural number only if it does so identically.

The Z_N machinery (natural roots, unit parts, lcm of the offending
factors) lives here as well since both operator algebras use it.
"""

from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union
import logging

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField
from sympy.polys.polyerrors import GeneratorsError
from sympy.polys.rings import PolyElement

from ..exceptions import AlgebraError
from ..utils.constants import VARIABLE_N

logger = logging.getLogger(__name__)

Scalar = FracElement
ScalarLike = Union[FracElement, PolyElement, Fraction, int, str]


@lru_cache(maxsize=1 << 16)
def _compose_main(a: FracElement, k: int, sign: int) -> FracElement:
    """Return a(sign*v + k) for the main variable v of ``a``'s field."""
    ring = a.field.ring
    v = ring.gens[0]
    image = v * sign + k
    numer = a.numer.compose(v, image)
    denom = a.denom.compose(v, image)
    return a.field.new(numer, denom)


class ScalarDomain:
    """The field K(v) with K = Q(params) and v the main variable."""

    def __init__(self, params: Sequence[str] = (), variable: str = VARIABLE_N):
        """
        Initialize scalar domain.

        Args:
            params: Ordered parameter names
            variable: Name of the main variable

        Raises:
            AlgebraError: If names collide
        """
        names = tuple(params)
        if variable in names or len(set(names)) != len(names):
            raise AlgebraError(
                f"Invalid parameter list {names!r} for variable {variable!r}",
                operation="ScalarDomain",
            )
        self.variable = variable
        self.params = names
        self.field = FracField((variable,) + names, QQ)
        self.ring = self.field.ring
        self.gen = self.field.gens[0]
        self.zero = self.field.zero
        self.one = self.field.one

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ScalarDomain)
            and self.variable == other.variable
            and self.params == other.params
        )

    def __hash__(self) -> int:
        return hash((self.variable, self.params))

    def __repr__(self) -> str:
        return f"ScalarDomain(params={self.params!r}, variable={self.variable!r})"

    # construction and conversion

    def __call__(self, value: ScalarLike) -> Scalar:
        """Convert ``value`` into this domain."""
        if isinstance(value, FracElement):
            if value.field == self.field:
                return value
            try:
                return value.set_field(self.field)
            except GeneratorsError as e:
                raise AlgebraError(
                    f"Cannot move {value} into {self!r}: {e}",
                    operation="convert",
                ) from e
        if isinstance(value, PolyElement):
            try:
                return self.field.new(value.set_ring(self.ring))
            except GeneratorsError as e:
                raise AlgebraError(
                    f"Cannot move {value} into {self!r}: {e}",
                    operation="convert",
                ) from e
        if isinstance(value, bool):
            raise AlgebraError(f"Not a scalar: {value!r}", operation="convert")
        if isinstance(value, Fraction):
            return self.field(QQ(value.numerator, value.denominator))
        if isinstance(value, str):
            return self.symbol(value)
        return self.field(value)

    def symbol(self, name: str) -> Scalar:
        """Return the generator called ``name``."""
        if name == self.variable:
            return self.gen
        try:
            index = self.params.index(name)
        except ValueError:
            raise AlgebraError(
                f"Unknown symbol {name!r} in {self!r}",
                operation="symbol",
            ) from None
        return self.field.gens[index + 1]

    def widen(self, params: Iterable[str]) -> "ScalarDomain":
        """Return a domain with the union of parameters, sorted by name."""
        merged = sorted(set(self.params) | set(params))
        if tuple(merged) == self.params:
            return self
        return ScalarDomain(merged, self.variable)

    # predicates and structure

    def is_constant(self, a: Scalar) -> bool:
        """True if ``a`` lies in K (does not involve the main variable)."""
        return a.numer.degree(0) <= 0 and a.denom.degree(0) <= 0

    def is_polynomial(self, a: Scalar) -> bool:
        """True if ``a`` is a polynomial in the main variable over K."""
        return a.denom.degree(0) <= 0

    def _require_polynomial(self, a: Scalar, operation: str) -> None:
        if not self.is_polynomial(a):
            raise AlgebraError(
                f"{a} is not a polynomial in {self.variable}",
                operation=operation,
            )

    def degree(self, a: Scalar) -> int:
        """Degree in the main variable; -1 for zero."""
        self._require_polynomial(a, "degree")
        if not a:
            return -1
        return int(a.numer.degree(0))

    def coefficient(self, a: Scalar, k: int) -> Scalar:
        """Coefficient of v^k of a polynomial ``a`` as an element of K."""
        self._require_polynomial(a, "coefficient")
        return self.field.new(a.numer.coeff_wrt(0, k), a.denom)

    def coefficients(self, a: Scalar) -> List[Scalar]:
        """Coefficients of ``a`` in ascending powers of v."""
        return [self.coefficient(a, k) for k in range(self.degree(a) + 1)]

    def leading_coefficient(self, a: Scalar) -> Scalar:
        """Leading coefficient of a nonzero polynomial."""
        if not a:
            raise AlgebraError("Zero has no leading coefficient", operation="leading_coefficient")
        return self.coefficient(a, self.degree(a))

    def numerator(self, a: Scalar) -> Scalar:
        return self.field.new(a.numer)

    def denominator(self, a: Scalar) -> Scalar:
        return self.field.new(a.denom)

    # substitutions

    def shift(self, a: Scalar, k: int) -> Scalar:
        """Return a(v + k)."""
        if k == 0 or self.is_constant(a):
            return a
        return _compose_main(a, k, 1)

    def reflect(self, a: Scalar, k: int = 0) -> Scalar:
        """Return a(-v - k)."""
        if self.is_constant(a):
            return a
        return _compose_main(a, -k, -1)

    def evaluate(self, a: Scalar, point: int) -> Scalar:
        """
        Evaluate the main variable at an integer.

        Raises:
            AlgebraError: If ``point`` is a pole of ``a``
        """
        denom = a.denom.subs(0, point)
        if not denom:
            raise AlgebraError(
                f"{a} has a pole at {self.variable}={point}",
                operation="evaluate",
                context={"point": point},
            )
        return self.field.new(a.numer.subs(0, point), denom)

    def derivative(self, a: Scalar) -> Scalar:
        return a.diff(self.gen)

    def specialize(self, a: Scalar, values: Mapping[str, Union[Fraction, int]]) -> Scalar:
        """Substitute numeric values for parameters (an explicit pass, never implicit)."""
        numer, denom = a.numer, a.denom
        for name, value in values.items():
            index = self.params.index(name) + 1
            q = QQ(Fraction(value).numerator, Fraction(value).denominator)
            numer = numer.subs(index, q)
            denom = denom.subs(index, q)
        if not denom:
            raise AlgebraError(
                f"Specialization {dict(values)} makes the denominator of {a} vanish",
                operation="specialize",
            )
        return self.field.new(numer, denom)

    # univariate arithmetic over K

    def divrem(self, a: Scalar, b: Scalar) -> Tuple[Scalar, Scalar]:
        """
        Euclidean division in K[v].

        Returns:
            (q, r) with a = q*b + r and deg r < deg b

        Raises:
            AlgebraError: If ``b`` is zero
        """
        if not b:
            raise AlgebraError("Division by zero polynomial", operation="divrem",
                               subtype="division_by_zero")
        self._require_polynomial(a, "divrem")
        db = self.degree(b)
        lb = self.leading_coefficient(b)
        q, r = self.zero, a
        while r and self.degree(r) >= db:
            t = self.leading_coefficient(r) / lb * self.gen ** (self.degree(r) - db)
            q += t
            r -= t * b
        return q, r

    def monic(self, a: Scalar) -> Scalar:
        if not a:
            return a
        return a / self.leading_coefficient(a)

    def gcd(self, a: Scalar, b: Scalar) -> Scalar:
        """Monic gcd in K[v]."""
        if not a and not b:
            raise AlgebraError("gcd(0, 0) is undefined", operation="gcd")
        if not a:
            return self.monic(b)
        if not b:
            return self.monic(a)
        self._require_polynomial(a, "gcd")
        self._require_polynomial(b, "gcd")
        return self.monic(self.field.new(a.numer.gcd(b.numer)))

    def lcm(self, values: Iterable[Scalar]) -> Scalar:
        """Monic lcm in K[v] of nonzero polynomials."""
        result = self.one
        for v in values:
            if not v:
                raise AlgebraError("lcm with zero", operation="lcm")
            result = self.monic(result * v / self.gcd(result, v))
        return result

    def lcm_denominators(self, values: Iterable[Scalar]) -> Scalar:
        """Monic lcm in K[v] of the denominators of ``values``."""
        return self.lcm(self.denominator(v) for v in values if v)

    # Z_N machinery

    def _natural_roots(self, p: PolyElement) -> Dict[int, int]:
        groups: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = {}
        width = self.ring.ngens
        for monom, coeff in p.iterterms():
            key = monom[1:]
            groups.setdefault(key, {})[(monom[0],) + (0,) * (width - 1)] = coeff
        univariate = [self.ring.from_dict(terms) for terms in groups.values()]
        g = reduce(lambda u, w: u.gcd(w), univariate)
        roots: Dict[int, int] = {}
        if g.degree(0) <= 0:
            return roots
        _, factors = g.factor_list()
        v = self.ring.gens[0]
        for factor, multiplicity in factors:
            if factor.degree(0) != 1:
                continue
            root = -factor.coeff(1) / factor.coeff(v)
            if QQ.denom(root) == 1 and root >= 0:
                roots[int(QQ.numer(root))] = roots.get(int(QQ.numer(root)), 0) + multiplicity
        return roots

    def nonneg_integer_roots(self, p: Scalar) -> Dict[int, int]:
        """
        Natural numbers at which ``p`` vanishes identically, with multiplicities.

        Raises:
            AlgebraError: If ``p`` is zero or not a polynomial
        """
        if not p:
            raise AlgebraError("Every natural number is a root of 0",
                               operation="nonneg_integer_roots")
        self._require_polynomial(p, "nonneg_integer_roots")
        return self._natural_roots(p.numer)

    def in_zn(self, p: Scalar) -> bool:
        """True iff the polynomial ``p`` has no natural root."""
        return not self.nonneg_integer_roots(p)

    def _product_of_roots(self, roots: Mapping[int, int]) -> Scalar:
        result = self.one
        for k, m in sorted(roots.items()):
            result *= (self.gen - k) ** m
        return result

    def zn_unit_part(self, q: Scalar) -> Tuple[Scalar, Scalar]:
        """
        Split q = unit * rest.

        ``unit`` has numerator and denominator free of natural roots;
        ``rest`` is a quotient of products of (v-k)^m with k natural.
        """
        if not q:
            raise AlgebraError("Zero has no unit part", operation="zn_unit_part")
        rest = (
            self._product_of_roots(self._natural_roots(q.numer))
            / self._product_of_roots(self._natural_roots(q.denom))
        )
        return q / rest, rest

    def is_rec_unit(self, q: Scalar) -> bool:
        """True iff ``q`` has neither natural roots nor natural poles."""
        return bool(q) and self.zn_unit_part(q)[1] == self.one

    def zn_denominator_lcm(self, values: Iterable[Scalar]) -> Scalar:
        """Least (v-k)^m product clearing the natural poles of ``values``."""
        merged: Dict[int, int] = {}
        for v in values:
            if not v:
                continue
            for k, m in self._natural_roots(v.denom).items():
                merged[k] = max(merged.get(k, 0), m)
        return self._product_of_roots(merged)

    def natural_poles(self, a: Scalar) -> Dict[int, int]:
        """Natural numbers that are poles of ``a``."""
        if not a:
            return {}
        return self._natural_roots(a.denom)

    # rendering

    def render(self, a: Scalar) -> str:
        """Compact string form, e.g. ``2*n+3`` or ``(n+1)/(2*lambda)``."""
        return str(a).replace(" ", "")
