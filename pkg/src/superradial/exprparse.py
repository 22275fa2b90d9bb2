"""Parser and printer for expressions over the gl(1|2) generators.

The grammar is small: scalar literals (integers and fractions like
``1/2``), the nine generator names ``z k k1 k2 e' f' p e f``, binary
``+ - *``, unary ``-``, and ``^`` with a nonnegative integer exponent.
``*`` is noncommutative concatenation in U(g); precedence is
``^`` above unary ``-`` above ``*`` above binary ``+``/``-``.

ASTs are plain nested tuples, e.g. ``("mul", ("gen", "p"), ("gen", "e"))``,
so structural equality is tuple equality.  `to_text` prints an AST with
minimal parentheses and `parse(to_text(parse(s))) == parse(s)` holds.
Powers of odd generators are accepted here; the rewriting engine turns
e.g. ``e^2`` into its even normal form when the AST is elaborated.
"""

import re
from fractions import Fraction
from typing import Optional

from .enveloping import Enveloping, UElement

GENERATOR_NAMES = ("z", "k", "k1", "k2", "e'", "f'", "p", "e", "f")

Expr = tuple

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9]*'?)|([+*^()/-]))")

# Operator precedence used both for parsing decisions and for deciding
# where `to_text` needs parentheses.  Higher binds tighter.
_PREC = {"add": 1, "sub": 1, "mul": 2, "neg": 3, "pow": 4, "num": 5, "gen": 5}


class ExprError(ValueError):
    """Parse or elaboration failure, carrying a 0-based source position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(source: str):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None or m.end() == m.start():
            stripped = source[pos:].lstrip()
            if not stripped:
                break
            at = len(source) - len(stripped)
            raise ExprError(f"unexpected character {stripped[0]!r}", at)
        number, name, op = m.groups()
        start = m.end() - len(number or name or op)
        if number is not None:
            tokens.append(("num", number, start))
        elif name is not None:
            if name not in GENERATOR_NAMES:
                raise ExprError(f"unknown generator {name!r}", start)
            tokens.append(("gen", name, start))
        else:
            tokens.append((op, op, start))
        pos = m.end()
    tokens.append(("end", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str) -> None:
        self.tokens = _tokenize(source)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def fail(self, expected: str):
        kind, text, pos = self.peek()
        got = "end of input" if kind == "end" else repr(text)
        raise ExprError(f"syntax error: expected {expected}, got {got}", pos)

    def expression(self) -> Expr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            node = ("mul", node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.peek()[0] == "-":
            self.advance()
            return ("neg", self.factor())
        return self.power()

    def power(self) -> Expr:
        node = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            if self.peek()[0] != "num":
                self.fail("a nonnegative integer exponent")
            node = ("pow", node, int(self.advance()[1]))
        return node

    def atom(self) -> Expr:
        kind, text, _ = self.peek()
        if kind == "num":
            self.advance()
            value = Fraction(int(text))
            # A '/' directly after an integer makes a fraction literal.
            if self.peek()[0] == "/":
                self.advance()
                if self.peek()[0] != "num":
                    self.fail("an integer denominator")
                value /= int(self.advance()[1])
            return ("num", value)
        if kind == "gen":
            self.advance()
            return ("gen", text)
        if kind == "(":
            self.advance()
            node = self.expression()
            if self.peek()[0] != ")":
                self.fail("')'")
            self.advance()
            return node
        self.fail("a scalar, a generator, or '('")


def parse(source: str) -> Expr:
    """Parse `source` into an AST, or raise ExprError with a position."""
    parser = _Parser(source)
    node = parser.expression()
    if parser.peek()[0] != "end":
        parser.fail("end of input")
    return node


def _render(node: Expr, slot_floor: int) -> str:
    head = node[0]
    if head == "num":
        text = str(node[1])
        if "/" in text and slot_floor > _PREC["mul"]:
            return f"({text})"
        return text
    if head == "gen":
        text = node[1]
    elif head == "neg":
        text = "-" + _render(node[1], _PREC["neg"])
    elif head == "pow":
        text = _render(node[1], _PREC["pow"] + 1) + f"^{node[2]}"
    elif head == "mul":
        text = _render(node[1], _PREC["mul"]) + "*" + _render(node[2], _PREC["mul"] + 1)
    else:
        op = " + " if head == "add" else " - "
        text = _render(node[1], _PREC["add"]) + op + _render(node[2], _PREC["add"] + 1)
    if _PREC[head] < slot_floor:
        return f"({text})"
    return text


def to_text(node: Expr) -> str:
    """Print an AST so that reparsing gives back the identical AST."""
    return _render(node, 0)


def elaborate(node: Expr, U: Enveloping) -> UElement:
    """Evaluate an AST inside the enveloping algebra.

    Scalars become multiples of 1; products are taken in order.  Powers
    expand to repeated products, so odd squares normalize through the
    engine instead of being rejected.
    """
    head = node[0]
    if head == "num":
        return node[1] * U.one()
    if head == "gen":
        return U.gen(node[1])
    if head == "neg":
        return -elaborate(node[1], U)
    if head == "pow":
        out = U.one()
        base = elaborate(node[1], U)
        for _ in range(node[2]):
            out = out * base
        return out
    left = elaborate(node[1], U)
    right = elaborate(node[2], U)
    if head == "mul":
        return left * right
    if head == "add":
        return left + right
    return left - right


def parse_to_element(source: str, U: Enveloping) -> UElement:
    return elaborate(parse(source), U)
