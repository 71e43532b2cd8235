"""
Parser for the input language of differential operators and scalars.

Operators are expressions over ``x``, ``Dx``, integers, parameter
identifiers and ``+ - * / ^ ** ( )``. Multiplication is operator
composition, so ``Dx*x`` is ``x*Dx + 1``. Division is only allowed by
nonzero elements of the parameter field, exponents are integer literals
and juxtaposition is rejected (write ``2*x``, not ``2x``).

Scalars (expected recurrence coefficients, for instance) use the same
grammar over the domain's main variable and parameters, with division by
any nonzero scalar.
"""

import re
from typing import Callable, Generic, List, NamedTuple, Optional, Set, TypeVar

from .algebra.diffop import DiffOperator
from .algebra.scalars import Scalar, ScalarDomain
from .exceptions import ParseError
from .utils.constants import DERIVATION, RESERVED_SYMBOLS, VARIABLE_X

PATTERN = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<number>\d+)
    | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
    | (?P<op>\*\*|[-+*/^()])
    | (?P<error>.)
    """,
    re.VERBOSE | re.DOTALL,
)


class Token(NamedTuple):
    kind: str
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    """
    Split ``text`` into tokens, dropping whitespace.

    Raises:
        ParseError: On a character outside the input language
    """
    tokens = []
    for match in PATTERN.finditer(text):
        kind = match.lastgroup
        if kind == "space":
            continue
        if kind == "error":
            raise ParseError(
                f"Unexpected character {match.group()!r} at position {match.start()}",
                text=text,
                position=match.start(),
            )
        value = "^" if match.group() == "**" else match.group()
        tokens.append(Token(kind, value, match.start()))
    return tokens


def collect_identifiers(text: str) -> Set[str]:
    """All identifiers of ``text`` other than ``x``, ``n`` and ``Dx``."""
    return {
        t.value for t in tokenize(text) if t.kind == "name" and t.value not in RESERVED_SYMBOLS
    }


T = TypeVar("T")


class _Parser(Generic[T]):
    """Recursive descent over one token list; the value algebra is supplied by callbacks."""

    def __init__(
        self,
        text: str,
        atom: Callable[[Token], T],
        number: Callable[[int], T],
        divide: Callable[[T, T, Token], T],
        power: Callable[[T, int, Token], T],
    ):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.atom = atom
        self.number = number
        self.divide = divide
        self.power = power

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        position = token.position if token else len(self.text)
        return ParseError(f"{message} at position {position}", text=self.text, position=position)

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise self.error("Unexpected end of input")
        self.index += 1
        return token

    def expect(self, value: str) -> Token:
        token = self.take()
        if token.value != value:
            raise self.error(f"Expected {value!r}, got {token.value!r}", token)
        return token

    def parse(self) -> T:
        if not self.tokens:
            raise self.error("Empty expression")
        value = self.expression()
        token = self.peek()
        if token is not None:
            if token.kind in ("name", "number") or token.value == "(":
                raise self.error("Implicit multiplication is not allowed, use '*'", token)
            raise self.error(f"Unexpected {token.value!r}", token)
        return value

    def expression(self) -> T:
        value = self.term()
        while (token := self.peek()) is not None and token.value in "+-":
            self.take()
            right = self.term()
            value = value + right if token.value == "+" else value - right
        return value

    def term(self) -> T:
        value = self.unary()
        while (token := self.peek()) is not None and token.value in ("*", "/"):
            self.take()
            right = self.unary()
            value = value * right if token.value == "*" else self.divide(value, right, token)
        return value

    def unary(self) -> T:
        token = self.peek()
        if token is not None and token.value in ("+", "-"):
            self.take()
            value = self.unary()
            return -value if token.value == "-" else value
        return self.factor()

    def factor(self) -> T:
        base = self.primary()
        token = self.peek()
        if token is not None and token.value == "^":
            self.take()
            return self.power(base, self.exponent(), token)
        return base

    def exponent(self) -> int:
        token = self.take()
        if token.value == "(":
            value = self.signed_integer()
            self.expect(")")
            return value
        self.index -= 1
        return self.signed_integer()

    def signed_integer(self) -> int:
        sign = 1
        token = self.take()
        if token.value in ("+", "-"):
            sign = -1 if token.value == "-" else 1
            token = self.take()
        if token.kind != "number":
            raise self.error("Exponent must be an integer literal", token)
        return sign * int(token.value)

    def primary(self) -> T:
        token = self.take()
        if token.kind == "number":
            return self.number(int(token.value))
        if token.kind == "name":
            return self.atom(token)
        if token.value == "(":
            value = self.expression()
            self.expect(")")
            return value
        raise self.error(f"Unexpected {token.value!r}", token)


def parse_operator(text: str, domain: ScalarDomain) -> DiffOperator:
    """
    Parse a differential operator over ``domain`` (main variable ``x``).

    Returns:
        The operator in right normal form sum p_i(x) Dx^i

    Raises:
        ParseError: On syntax errors, unknown identifiers, ``n`` in the text,
            non-scalar divisors or negative exponents
    """
    if domain.variable != VARIABLE_X:
        raise ParseError(f"Operators are parsed over x, not {domain.variable}", text=text)

    def atom(token: Token) -> DiffOperator:
        if token.value == DERIVATION:
            return DiffOperator.derivation(domain)
        if token.value == VARIABLE_X:
            return DiffOperator.scalar(domain, domain.gen)
        if token.value in RESERVED_SYMBOLS or token.value not in domain.params:
            raise ParseError(
                f"Identifier {token.value!r} is not allowed here at position {token.position}",
                text=text,
                position=token.position,
                subtype="identifier",
            )
        return DiffOperator.scalar(domain, domain.symbol(token.value))

    def divide(left: DiffOperator, right: DiffOperator, token: Token) -> DiffOperator:
        if not right.is_constant() or not right:
            raise ParseError(
                f"Division by a non-constant or zero at position {token.position}",
                text=text,
                position=token.position,
                subtype="division",
            )
        return left * DiffOperator.scalar(domain, 1 / right.coefficient(0))

    def power(base: DiffOperator, exponent: int, token: Token) -> DiffOperator:
        if exponent < 0:
            if base.is_constant() and base:
                return DiffOperator.scalar(domain, base.coefficient(0) ** exponent)
            raise ParseError(
                f"Negative exponent at position {token.position}",
                text=text,
                position=token.position,
                subtype="exponent",
            )
        return base ** exponent

    parser = _Parser(
        text, atom, lambda k: DiffOperator.scalar(domain, k), divide, power
    )
    return parser.parse()


def parse_polynomial(text: str, domain: ScalarDomain) -> Scalar:
    """
    Parse a polynomial in x (no ``Dx``).

    Raises:
        ParseError: If the text contains a derivation
    """
    op = parse_operator(text, domain)
    if op.order > 0:
        raise ParseError(f"Expected a polynomial in x, got an operator: {text!r}", text=text)
    return op.coefficient(0)


def parse_scalar(text: str, domain: ScalarDomain) -> Scalar:
    """
    Parse a rational function in the domain's main variable and parameters.

    Raises:
        ParseError: On syntax errors, reserved or unknown identifiers or division by zero
    """

    def atom(token: Token) -> Scalar:
        if token.value == domain.variable or token.value in domain.params:
            return domain.symbol(token.value)
        raise ParseError(
            f"Identifier {token.value!r} is not allowed here at position {token.position}",
            text=text,
            position=token.position,
            subtype="identifier",
        )

    def divide(left: Scalar, right: Scalar, token: Token) -> Scalar:
        if not right:
            raise ParseError(
                f"Division by zero at position {token.position}",
                text=text,
                position=token.position,
                subtype="division",
            )
        return left / right

    def power(base: Scalar, exponent: int, token: Token) -> Scalar:
        if exponent < 0 and not base:
            raise ParseError(
                f"Zero to a negative power at position {token.position}",
                text=text,
                position=token.position,
                subtype="division",
            )
        return base ** exponent

    parser = _Parser(text, atom, lambda k: domain(k), divide, power)
    return parser.parse()
