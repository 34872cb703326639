"""
Polynomial text: ``y2*x2 - y1*x3``, ``3/2 x1^2 y2``, ``(x1 + y1)*(x1 - y1)``.

Variables are ``x1..xn`` and ``y1..ym``; coefficients are integers or
``a/b``; ``*`` between factors is optional.
"""

import re

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[xy]\d+)|(?P<op>[-+*^()]))")


def _tokenize(text, line):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"Unexpected character '{text[col - 1]}'", line=line, column=col)
        kind = match.lastgroup
        start = match.start(kind) + 1
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    tokens.append(('end', '', len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, signature, line):
        self.signature = signature
        self.ring = signature.poly_ring()
        self.domain = self.ring.domain
        self.tokens = _tokenize(text, line)
        self.pos = 0
        self.line = line

    def error(self, message):
        _, _, col = self.tokens[self.pos]
        raise ParseError(message, line=self.line, column=col)

    @property
    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse(self):
        if self.peek[0] == 'end':
            self.error("Empty polynomial")
        result = self.expression()
        if self.peek[0] != 'end':
            self.error(f"Unexpected '{self.peek[1]}'")
        return result

    def expression(self):
        sign = 1
        if self.peek[1] in ('+', '-') and self.peek[0] == 'op':
            sign = -1 if self.take()[1] == '-' else 1
        result = self.term() * sign
        while self.peek[0] == 'op' and self.peek[1] in ('+', '-'):
            op = self.take()[1]
            value = self.term()
            result = result + value if op == '+' else result - value
        return result

    def _starts_factor(self):
        kind, value, _ = self.peek
        return kind in ('num', 'var') or (kind == 'op' and value == '(')

    def term(self):
        result = self.factor()
        while True:
            if self.peek[0] == 'op' and self.peek[1] == '*':
                self.take()
                result = result * self.factor()
            elif self._starts_factor():
                result = result * self.factor()
            else:
                return result

    def factor(self):
        base = self.atom()
        if self.peek[0] == 'op' and self.peek[1] == '^':
            self.take()
            kind, value, _ = self.peek
            if kind != 'num' or '/' in value:
                self.error("Exponent must be a nonnegative integer")
            self.take()
            base = base ** int(value)
        return base

    def atom(self):
        kind, value, _ = self.peek
        if kind == 'num':
            self.take()
            if '/' in value:
                a, b = value.split('/')
                if int(b) == 0:
                    self.error("Division by zero in coefficient")
                coeff = self.domain.convert(int(a)) / self.domain.convert(int(b))
            else:
                coeff = self.domain.convert(int(value))
            return self.ring.ground_new(coeff)
        if kind == 'var':
            if value not in self.signature.symbols:
                self.error(f"Unknown variable '{value}' for {self.signature.describe()}")
            self.take()
            return self.ring.gens[self.signature.symbols.index(value)]
        if kind == 'op' and value == '(':
            self.take()
            inner = self.expression()
            if not (self.peek[0] == 'op' and self.peek[1] == ')'):
                self.error("Missing ')'")
            self.take()
            return inner
        self.error(f"Unexpected '{value}'" if value else "Unexpected end of input")


def parse_polynomial(text, signature, line=1):
    """Parse ``text`` into an element of ``signature.poly_ring()``"""
    return _Parser(text, signature, line).parse()


def _format_coeff(domain, c):
    return str(domain.to_sympy(c))


def _format_monomial(symbols, monom):
    factors = []
    for name, e in zip(symbols, monom):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return '*'.join(factors)


def format_polynomial(p):
    """Inverse of ``parse_polynomial``; terms in descending order"""
    if not p:
        return '0'
    ring = p.ring
    domain = ring.domain
    symbols = [str(s) for s in ring.symbols]
    parts = []
    for monom, c in p.terms():
        text = _format_coeff(domain, c)
        negative = text.startswith('-')
        if negative:
            text = text[1:]
        mono = _format_monomial(symbols, monom)
        if mono and text == '1':
            body = mono
        elif mono:
            body = f"{text}*{mono}"
        else:
            body = text
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return ' '.join(parts)


def format_monomial(signature, monom):
    return _format_monomial(signature.symbols, monom) or '1'
