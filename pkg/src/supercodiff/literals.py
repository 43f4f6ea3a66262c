"""Text form of cochains with symbolic coefficients.

Grammar (whitespace-insensitive):

    expr     := term (('+' | '-') term)*
    term     := [coeff '*'] 'ps' '(' int (',' int)* ';' int ')'
    coeff    := cfactor ('*' cfactor)*
    cfactor  := rational | name | '(' csum ')'
    csum     := cprod (('+' | '-') cprod)*
    cprod    := cfactor ('*' cfactor)*
    rational := ['-'] digits ['/' digits]

ps(i1,...,ik;j) is the basis cochain sending v_{i1}...v_{ik} to e_j.
Coefficient ASTs are plain nested tuples so equality is structural;
print_cochain is the exact inverse of parse_cochain on its own output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .cochains import Cochain
from .spaces import GradedSpace, Monomial

CoeffExpr = tuple  # ('num', Fraction) | ('var', str) | ('add'|'sub'|'mul', a, b) | ('neg', a)


class ParseError(ValueError):
    """Syntax error with source position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class InstantiationError(ValueError):
    pass


@dataclass(frozen=True)
class Term:
    coeff: CoeffExpr
    inputs: Monomial
    output: int


@dataclass(frozen=True)
class CochainExpr:
    terms: tuple[Term, ...]

    def names(self) -> set[str]:
        out: set[str] = set()
        for term in self.terms:
            out |= _names_in(term.coeff)
        return out


_TOKEN_RE = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|[-+*/(),;])")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            if text[pos:].strip() == "":
                break
            raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", pos)
        value = match.group(1)
        if value == "ps":
            kind = "ps"
        elif value.isdigit():
            kind = "int"
        elif value[0].isalpha() or value[0] == "_":
            kind = "name"
        else:
            kind = value
        tokens.append((kind, value, match.start(1)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", len(self.text))
        self.index += 1
        return token

    def expect(self, kind: str) -> tuple[str, str, int]:
        token = self.peek()
        if token is None or token[0] != kind:
            pos = token[2] if token else len(self.text)
            found = token[1] if token else "end of input"
            raise ParseError(f"expected {kind!r}, found {found!r}", pos)
        return self.next()

    def parse(self) -> CochainExpr:
        if not self.tokens:
            raise ParseError("empty expression", 0)
        leading_minus = False
        if self.peek()[0] in ("+", "-"):
            leading_minus = self.next()[0] == "-"
        terms = [self.term(negate=leading_minus)]
        while (token := self.peek()) is not None:
            if token[0] not in ("+", "-"):
                raise ParseError(f"expected '+' or '-', found {token[1]!r}", token[2])
            self.next()
            terms.append(self.term(negate=token[0] == "-"))
        return CochainExpr(tuple(terms))

    def term(self, negate: bool) -> Term:
        token = self.peek()
        if token is None:
            raise ParseError("dangling operator", len(self.text))
        if token[0] == "ps":
            coeff: CoeffExpr = ("num", Fraction(1))
        else:
            coeff = self.coeff()
            self.expect("*")
        inputs, output = self.ps_body()
        if negate:
            coeff = _negate(coeff)
        return Term(coeff, inputs, output)

    def ps_body(self) -> tuple[Monomial, int]:
        self.expect("ps")
        self.expect("(")
        inputs = [int(self.expect("int")[1])]
        while self.peek() and self.peek()[0] == ",":
            self.next()
            inputs.append(int(self.expect("int")[1]))
        self.expect(";")
        output = int(self.expect("int")[1])
        self.expect(")")
        return tuple(inputs), output

    def coeff(self) -> CoeffExpr:
        node = self.cfactor()
        while True:
            token = self.peek()
            if token is None or token[0] != "*":
                break
            after = self.tokens[self.index + 1] if self.index + 1 < len(self.tokens) else None
            if after is not None and after[0] == "ps":
                break
            self.next()
            node = ("mul", node, self.cfactor())
        return node

    def cfactor(self) -> CoeffExpr:
        token = self.peek()
        if token is None:
            raise ParseError("expected coefficient", len(self.text))
        kind, value, pos = token
        if kind == "int":
            self.next()
            return ("num", self.rational_tail(Fraction(int(value))))
        if kind == "-":
            self.next()
            inner = self.cfactor()
            return _negate(inner)
        if kind == "name":
            self.next()
            return ("var", value)
        if kind == "(":
            self.next()
            inner = self.csum()
            self.expect(")")
            return inner
        raise ParseError(f"expected coefficient, found {value!r}", pos)

    def rational_tail(self, numerator: Fraction) -> Fraction:
        token = self.peek()
        if token is not None and token[0] == "/":
            self.next()
            denom = int(self.expect("int")[1])
            if denom == 0:
                raise ParseError("zero denominator", token[2])
            return numerator / denom
        return numerator

    def csum(self) -> CoeffExpr:
        node = self.cprod()
        while (token := self.peek()) is not None and token[0] in ("+", "-"):
            self.next()
            rhs = self.cprod()
            node = ("add" if token[0] == "+" else "sub", node, rhs)
        return node

    def cprod(self) -> CoeffExpr:
        node = self.cfactor()
        while (token := self.peek()) is not None and token[0] == "*":
            self.next()
            node = ("mul", node, self.cfactor())
        return node


def _negate(coeff: CoeffExpr) -> CoeffExpr:
    if coeff[0] == "num":
        return ("num", -coeff[1])
    if coeff[0] == "neg":
        return coeff[1]
    return ("neg", coeff)


def _names_in(coeff: CoeffExpr) -> set[str]:
    kind = coeff[0]
    if kind == "num":
        return set()
    if kind == "var":
        return {coeff[1]}
    if kind == "neg":
        return _names_in(coeff[1])
    return _names_in(coeff[1]) | _names_in(coeff[2])


def parse_cochain(text: str) -> CochainExpr:
    return _Parser(text).parse()


def evaluate_coeff(coeff: CoeffExpr, bindings: dict[str, Fraction]) -> Fraction:
    kind = coeff[0]
    if kind == "num":
        return coeff[1]
    if kind == "var":
        if coeff[1] not in bindings:
            raise InstantiationError(f"unbound parameter {coeff[1]!r}")
        return bindings[coeff[1]]
    if kind == "neg":
        return -evaluate_coeff(coeff[1], bindings)
    left = evaluate_coeff(coeff[1], bindings)
    right = evaluate_coeff(coeff[2], bindings)
    if kind == "add":
        return left + right
    if kind == "sub":
        return left - right
    assert kind == "mul"
    return left * right


def instantiate(expr: CochainExpr, space: GradedSpace, bindings: dict[str, Fraction] | None = None) -> Cochain:
    """Evaluate coefficients and build the exact cochain.

    Errors on unbound names, out-of-range indices, unsorted inputs and
    repeated odd inputs (the latter would silently be the zero map, which a
    table expression never intends).
    """
    bindings = bindings or {}
    terms: dict[tuple[Monomial, int], Fraction] = {}
    for term in expr.terms:
        for idx in term.inputs + (term.output,):
            if not 1 <= idx <= space.dim:
                raise InstantiationError(f"index {idx} out of range for space {space}")
        if tuple(sorted(term.inputs)) != term.inputs:
            raise InstantiationError(f"inputs {term.inputs} must be sorted ascending")
        for pos in range(1, len(term.inputs)):
            if term.inputs[pos] == term.inputs[pos - 1] and space.parity(term.inputs[pos]) == 1:
                raise InstantiationError(f"odd index {term.inputs[pos]} repeated in {term.inputs}")
        value = evaluate_coeff(term.coeff, bindings)
        key = (term.inputs, term.output)
        terms[key] = terms.get(key, Fraction(0)) + value
    return Cochain(space, terms)


def _coeff_text(coeff: CoeffExpr, product_context: bool = False) -> str:
    kind = coeff[0]
    if kind == "num":
        return str(coeff[1])
    if kind == "var":
        return coeff[1]
    if kind == "neg":
        inner = _coeff_text(coeff[1], product_context=True)
        return f"-{inner}"
    if kind == "mul":
        left = _coeff_text(coeff[1], product_context=True)
        right = _coeff_text(coeff[2], product_context=True)
        return f"{left}*{right}"
    body = (
        f"{_coeff_text(coeff[1])}{'+' if kind == 'add' else '-'}{_coeff_text(coeff[2])}"
    )
    return f"({body})" if product_context else body


def print_cochain(expr: "CochainExpr | Cochain") -> str:
    if isinstance(expr, Cochain):
        return str(expr)
    pieces = []
    for term in expr.terms:
        body = f"ps({','.join(map(str, term.inputs))};{term.output})"
        coeff = term.coeff
        sign = ""
        if coeff[0] == "num" and coeff[1] < 0:
            sign, coeff = "-", ("num", -coeff[1])
        elif coeff[0] == "neg":
            sign, coeff = "-", coeff[1]
        if coeff == ("num", Fraction(1)):
            text = body
        else:
            text = f"{_coeff_text(coeff, product_context=True)}*{body}"
        if not pieces:
            pieces.append(sign + text)
        else:
            pieces.append((sign or "+") + text)
    return "".join(pieces)


def parse_bindings(text: str) -> dict[str, Fraction]:
    """Parse 'p=1,q=-1/2' into exact bindings."""
    bindings: dict[str, Fraction] = {}
    if not text.strip():
        return bindings
    for piece in text.split(","):
        name, sep, value = piece.partition("=")
        name = name.strip()
        if not sep or not name.isidentifier():
            raise InstantiationError(f"bad binding {piece!r}, expected name=value")
        try:
            bindings[name] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InstantiationError(f"bad value in {piece!r}: {exc}") from exc
    return bindings
