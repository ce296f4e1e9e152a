"""Public scalar interface: the field Q(q) with its literal grammar.

Literals follow

    expr := integer | 'q' | '-' expr | expr '+' expr | expr '*' expr
          | expr '^' nat | expr '/' expr | '(' expr ')'

with the usual precedence (unary minus > ^ > * and / > + and -), e.g.
``(q^2-1)/(q+1)`` or ``-2*q^3``.  Conjugation is the identity on Q(q):
q is treated as a real deformation parameter, so hermiticity conditions
reduce to linear conditions over the field.

The Scalar class itself comes from the selected kernel backend
(qpb._backend); this module adds parsing, formatting and small helpers.
"""

from __future__ import annotations

from ._backend import kernel
from .errors import ParseError

Scalar = kernel.Scalar
ZERO = kernel.ZERO
ONE = kernel.ONE
Q = kernel.Q
KERNEL_BACKEND = kernel.BACKEND


def integer(n: int) -> Scalar:
    return Scalar.from_int(n)


def rational(n: int, d: int) -> Scalar:
    return Scalar.from_fraction(n, d)


def q_power(k: int) -> Scalar:
    return Scalar((0,) * k + (1,), (1,))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN_CHARS = {"+", "-", "*", "/", "^", "(", ")"}


def _tokenize(text, line=None, col0=0):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _TOKEN_CHARS:
            tokens.append((ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((int(text[i:j]), i))
            i = j
        elif ch == "q":
            tokens.append(("q", i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} in scalar literal", line, col0 + i + 1)
    return tokens


class _Parser:
    def __init__(self, tokens, line=None, col0=0):
        self.tokens = tokens
        self.pos = 0
        self.line = line
        self.col0 = col0

    def _fail(self, message):
        col = self.col0 + (self.tokens[self.pos][1] + 1 if self.pos < len(self.tokens) else self.col0 + 1)
        raise ParseError(message, self.line, col)

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        value = self.sum()
        if self.pos != len(self.tokens):
            self._fail("trailing tokens in scalar literal")
        return value

    def sum(self):
        value = self.product()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.product()
            value = value + rhs if op == "+" else value - rhs
        return value

    def product(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op == "/":
                if not rhs:
                    self._fail("division by zero in scalar literal")
                value = value / rhs
            else:
                value = value * rhs
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            exponent = self.peek()
            if not isinstance(exponent, int):
                self._fail("exponent must be a natural number")
            self.take()
            return base ** exponent
        return base

    def atom(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            value = self.sum()
            if self.peek() != ")":
                self._fail("expected ')'")
            self.take()
            return value
        if tok == "q":
            self.take()
            return Q
        if isinstance(tok, int):
            self.take()
            return Scalar.from_int(tok)
        self._fail("expected a scalar atom")


def parse_scalar(text: str, line: int | None = None, col0: int = 0) -> Scalar:
    tokens = _tokenize(text, line, col0)
    if not tokens:
        raise ParseError("empty scalar literal", line, col0 + 1)
    return _Parser(tokens, line, col0).parse()


# ---------------------------------------------------------------------------
# formatting (round-trips through parse_scalar)
# ---------------------------------------------------------------------------

def _format_poly(coeffs):
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            term = str(abs(c))
        else:
            qpow = "q" if k == 1 else f"q^{k}"
            term = qpow if abs(c) == 1 else f"{abs(c)}*{qpow}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if c > 0 else f"-{term}")
    return "".join(parts)


def _is_monomial(coeffs):
    return sum(1 for c in coeffs if c) == 1


def format_scalar(s: Scalar) -> str:
    num, den = s.num, s.den
    if den == (1,):
        return _format_poly(num)
    num_str = _format_poly(num)
    if not (_is_monomial(num) and num[-1] > 0):
        num_str = f"({num_str})"
    den_str = _format_poly(den)
    if not (_is_monomial(den) and den[-1] > 0 and (len(den) == 1 or den[-1] == 1)):
        den_str = f"({den_str})"
    return f"{num_str}/{den_str}"
