"""
From input text to an engine run: parsing, basis construction, optional
symmetric product and oracle checks of supplied polynomial solutions.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union
import logging

from .algebra.diffop import DiffOperator, symmetric_product
from .algebra.scalars import ScalarDomain
from .engine import RecurrenceResult, recurrence_for
from .exceptions import ParseError, UnsupportedModeError
from .families.base import FamilySpec
from .families.registry import family
from .oracle import check_relation, check_taylor_relation
from .parser import collect_identifiers, parse_operator, parse_polynomial
from .utils.constants import VARIABLE_X, Mode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Problem:
    """A parsed operator together with its basis and mode."""
    operator: DiffOperator
    spec: Optional[FamilySpec]
    mode: Mode
    source: str

    @property
    def domain(self) -> ScalarDomain:
        return self.operator.domain


def load_problem(
    operator: str,
    basis: Optional[str],
    mode: Union[Mode, str] = Mode.AUTO,
    product: Optional[str] = None,
    polynomials: Sequence[str] = (),
) -> Problem:
    """
    Parse the operator (and optional product factor) over the domain of the basis.

    Identifiers of the operator, the product and the check polynomials become
    parameters of the ground field next to the family parameters.

    Raises:
        ParseError: On malformed text or a zero operator
        FamilyError: On an unknown family or inadmissible parameters
        UnsupportedModeError: If a non-Taylor mode has no basis
    """
    mode = Mode(mode)
    texts = [operator] + ([product] if product else []) + list(polynomials)
    identifiers = sorted(set().union(*(collect_identifiers(t) for t in texts)))

    spec = None
    if basis is not None:
        spec = family(basis, extra_params=identifiers)
        domain = spec.x_domain
    elif mode is Mode.TAYLOR:
        domain = ScalarDomain(identifiers, VARIABLE_X)
    else:
        raise UnsupportedModeError(f"Mode {mode.value} needs a basis", mode=mode.value)

    L = parse_operator(operator, domain)
    if product:
        L = symmetric_product(L, parse_operator(product, domain))
        logger.info(f"Symmetric product has order {L.order}")
    if not L:
        raise ParseError("The operator is zero", text=operator, subtype="zero_operator")
    return Problem(operator=L, spec=spec, mode=mode, source=operator)


def solve(problem: Problem) -> RecurrenceResult:
    return recurrence_for(problem.operator, problem.spec, problem.mode)


def check_solutions(
    problem: Problem,
    result: RecurrenceResult,
    polynomials: Sequence[str],
    size: Optional[int] = None,
) -> List[Tuple[str, bool]]:
    """
    Oracle-check the fraction against each polynomial f: N . [f] = D . [L f].

    Returns:
        (polynomial text, passed) pairs
    """
    outcome = []
    for text in polynomials:
        f = parse_polynomial(text, problem.domain)
        if problem.mode is Mode.TAYLOR:
            passed = check_taylor_relation(result.fraction, problem.operator, f, size)
        else:
            passed = check_relation(result.fraction, problem.operator, f, problem.spec, size)
        logger.info(f"Check {text}: {'pass' if passed else 'FAIL'}")
        outcome.append((text, passed))
    return outcome
