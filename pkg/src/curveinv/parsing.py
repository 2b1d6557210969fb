"""Parser for polynomial curve expressions.

Grammar (whitespace ignored, offsets reported 1-based):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' INT)?
    atom   := NUMBER | VARIABLE | '(' expr ')'
    NUMBER := INT ('/' INT)?

Variables are single names from the allowed set; multiplication is always
explicit.  The result is an exponent-tuple -> Fraction dict over QQ, later
coerced into the requested coefficient field.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CurveSyntaxError, ZeroPolynomial


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        pos = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), pos))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(_Token("name", text[i:j], pos))
            i = j
        elif ch in "+-*^()/":
            tokens.append(_Token(ch, ch, pos))
            i += 1
        else:
            raise CurveSyntaxError("unexpected character %r" % ch, pos)
    tokens.append(_Token("end", None, n + 1))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = tuple(variables)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind, what):
        tok = self.peek()
        if tok.kind != kind:
            raise CurveSyntaxError("expected %s" % what, tok.pos)
        return self.advance()

    def parse(self):
        result = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise CurveSyntaxError("unexpected %r" % (tok.value,), tok.pos)
        return result

    def expr(self):
        acc = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            acc = _add(acc, rhs) if op.kind == "+" else _add(acc, _neg(rhs))
        return acc

    def term(self):
        acc = self.factor()
        while self.peek().kind == "*":
            self.advance()
            acc = _mul(acc, self.factor())
        return acc

    def factor(self):
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            return _neg(self.factor())
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            etok = self.expect("int", "an integer exponent")
            base = _pow(base, etok.value, len(self.variables))
        return base

    def atom(self):
        tok = self.advance()
        if tok.kind == "int":
            value = Fraction(tok.value)
            if self.peek().kind == "/":
                self.advance()
                dtok = self.expect("int", "an integer denominator")
                if dtok.value == 0:
                    raise CurveSyntaxError("zero denominator", dtok.pos)
                value = Fraction(tok.value, dtok.value)
            zero = (0,) * len(self.variables)
            return {zero: value} if value else {}
        if tok.kind == "name":
            try:
                idx = self.variables.index(tok.value)
            except ValueError:
                raise CurveSyntaxError(
                    "unknown variable %r (allowed: %s)"
                    % (tok.value, ", ".join(self.variables)), tok.pos) from None
            e = tuple(1 if i == idx else 0
                      for i in range(len(self.variables)))
            return {e: Fraction(1)}
        if tok.kind == "(":
            inner = self.expr()
            self.expect(")", "a closing parenthesis")
            return inner
        if tok.kind == "end":
            raise CurveSyntaxError("unexpected end of input", tok.pos)
        raise CurveSyntaxError("unexpected %r" % (tok.value,), tok.pos)


def _add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, Fraction(0)) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _neg(a):
    return {e: -c for e, c in a.items()}


def _mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(i + j for i, j in zip(e1, e2))
            s = out.get(e, Fraction(0)) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _pow(a, n, nvars):
    result = {(0,) * nvars: Fraction(1)}
    for _ in range(n):
        result = _mul(result, a)
    return result


def parse_polynomial(text, variables=("x", "y")):
    """Parse an expression into an exponent dict over the rationals.

    Raises CurveSyntaxError with a 1-based offset for malformed input and
    ZeroPolynomial when the expression simplifies to zero.
    """
    result = _Parser(text, variables).parse()
    if not result:
        raise ZeroPolynomial("expression %r simplifies to zero" % text)
    return result
