"""
Coefficient fields, bigraded monomials and polynomials, and term orders.

Monomials are exponent tuples laid out as ``(x_1..x_n, y_1..y_m)``,
optionally followed by auxiliary variables used for elimination.
Polynomials are sympy ``PolyElement`` objects over a ring built from a
``RingSignature``; they are treated as immutable.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyRing

from ._compat import StrEnum
from .errors import MathError, ParseError, RingMismatchError

FAST_PRIME = 2147483647


@lru_cache(maxsize=None)
def _prime_domain(p):
    return GF(p)


@dataclass(frozen=True)
class Field:
    """Rationals (``characteristic == 0``) or the prime field of that size."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p and not isprime(p)):
            raise MathError(f"Fp needs a prime, got {p}", characteristic=p)

    @classmethod
    def parse(cls, text):
        """Read ``Q`` or ``Fp:<p>``"""
        text = text.strip()
        if text == 'Q':
            return cls()
        if text.startswith('Fp:'):
            try:
                return cls(int(text[3:]))
            except ValueError:
                pass
        raise ParseError(f"Unknown field '{text}' (expected Q or Fp:<p>)")

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def domain(self):
        if self.is_rational:
            return QQ
        return _prime_domain(self.characteristic)

    def __str__(self):
        return 'Q' if self.is_rational else f"Fp:{self.characteristic}"


@lru_cache(maxsize=None)
def _poly_ring(symbols, domain, order):
    return PolyRing(list(symbols), domain, order)


@dataclass(frozen=True)
class RingSignature:
    """S = K[x_1..x_n, y_1..y_m] with deg x = (1,0) and deg y = (0,1)."""

    n: int
    m: int
    field: Field = Field()

    def __post_init__(self):
        if self.n < 0 or self.m < 0 or self.n + self.m < 1:
            raise MathError(f"Invalid ring signature n={self.n}, m={self.m}")

    @property
    def nvars(self):
        return self.n + self.m

    @property
    def domain(self):
        return self.field.domain

    @cached_property
    def symbols(self):
        xs = tuple(f"x{i}" for i in range(1, self.n + 1))
        ys = tuple(f"y{j}" for j in range(1, self.m + 1))
        return xs + ys

    @property
    def x_indices(self):
        return tuple(range(self.n))

    @property
    def y_indices(self):
        return tuple(range(self.n, self.n + self.m))

    def indices(self, direction):
        """Positions of the variables of degree (1,0) or (0,1)"""
        return self.x_indices if Direction(direction) is Direction.X else self.y_indices

    def poly_ring(self, order=None):
        """The sympy ring of S, by default under the bigraded reverse order"""
        return _poly_ring(self.symbols, self.domain, order or PaperOrder(self.n, self.m))

    def aux_ring(self, names, order=None):
        """S with extra variables appended; the default order eliminates them"""
        names = tuple(names)
        if order is None:
            order = elimination_order(self.nvars + len(names),
                                      range(self.nvars, self.nvars + len(names)),
                                      PaperOrder(self.n, self.m))
        return _poly_ring(self.symbols + names, self.domain, order)

    def x_ring(self):
        """Signature of S_x"""
        return RingSignature(self.n, 0, self.field)

    def with_y(self, m):
        """Same x-block and field with ``m`` y-variables"""
        return RingSignature(self.n, m, self.field)

    def bidegree_of(self, monom):
        return (sum(monom[:self.n]), sum(monom[self.n:self.n + self.m]))

    def split(self, monom):
        return tuple(monom[:self.n]), tuple(monom[self.n:self.n + self.m])

    def element(self, poly):
        """Move ``poly`` into ``poly_ring()``, checking the variables agree"""
        ring = self.poly_ring()
        if poly.ring == ring:
            return poly
        if tuple(str(s) for s in poly.ring.symbols) != self.symbols or poly.ring.domain != self.domain:
            raise RingMismatchError(
                f"Polynomial over {poly.ring.symbols} does not belong to {self.describe()}")
        return poly.set_ring(ring)

    def describe(self):
        return f"K[{','.join(self.symbols)}] over {self.field}"

    def to_json(self):
        return {'n': self.n, 'm': self.m, 'field': str(self.field)}


def signature_of(ring):
    """Recover the signature of a sympy ring built by ``RingSignature``"""
    names = [str(s) for s in ring.symbols]
    n = sum(1 for s in names if s.startswith('x'))
    m = sum(1 for s in names if s.startswith('y'))
    domain = ring.domain
    field = Field() if domain == QQ else Field(int(domain.mod))
    return RingSignature(n, m, field)


class Direction(StrEnum):
    X = 'x'
    Y = 'y'


class Comparison(Enum):
    LT = -1
    EQ = 0
    GT = 1


class Degree(StrEnum):
    """Answers of ``bidegree`` that are not a pair."""

    ZERO = 'zero'
    NOT_BIHOMOGENEOUS = 'not bihomogeneous'


# Term orders

class TermOrder(MonomialOrder):
    """Sort key on exponent tuples; larger key means larger monomial."""

    is_global = True
    is_default = False

    def __call__(self, monom):
        raise NotImplementedError


@dataclass(frozen=True, eq=True)
class PaperOrder(TermOrder):
    """(|u|+|v|, |v|, |u|) lexicographically, then revlex with y_1>..>y_m>x_1>..>x_n."""

    n: int
    m: int

    alias = 'bigrevlex'

    @cached_property
    def _tail(self):
        # smallest variable first: x_n..x_1, then y_m..y_1
        return tuple(range(self.n - 1, -1, -1)) + tuple(range(self.n + self.m - 1, self.n - 1, -1))

    def __call__(self, monom):
        su = sum(monom[:self.n])
        sv = sum(monom[self.n:self.n + self.m])
        return (su + sv, sv, su, tuple(-monom[i] for i in self._tail))


@dataclass(frozen=True, eq=True)
class RevLexOrder(TermOrder):
    """Degree reverse lexicographic order; ``variables`` lists positions from largest to smallest."""

    variables: tuple

    alias = 'grevlex'

    def __call__(self, monom):
        return (sum(monom[i] for i in self.variables),
                tuple(-monom[i] for i in reversed(self.variables)))


def revlex_x(n, m):
    """Degrevlex with x_1 > .. > x_n > y_1 > .. > y_m"""
    return RevLexOrder(tuple(range(n + m)))


def revlex_y(n, m):
    """Degrevlex with y_1 > .. > y_m > x_1 > .. > x_n"""
    return RevLexOrder(tuple(range(n, n + m)) + tuple(range(n)))


@dataclass(frozen=True, eq=True)
class WeightOrder(TermOrder):
    """Weight vectors first, then ``base``, then plain lex as a final tie-break."""

    weights: tuple
    base: TermOrder

    alias = 'weighted'

    def __call__(self, monom):
        graded = tuple(sum(w * e for w, e in zip(row, monom)) for row in self.weights)
        return (graded, self.base(monom), tuple(monom))


def elimination_order(nvars, positions, base):
    """Any monomial involving ``positions`` beats every monomial free of them"""
    positions = set(positions)
    row = tuple(1 if i in positions else 0 for i in range(nvars))
    return WeightOrder((row,), base)


def compare(m1, m2, order):
    """Compare two exponent tuples under ``order``"""
    if len(m1) != len(m2):
        raise RingMismatchError(f"Monomials of lengths {len(m1)} and {len(m2)} are not comparable")
    if m1 == m2:
        return Comparison.EQ
    return Comparison.GT if order(m1) > order(m2) else Comparison.LT


# Monomial helpers

def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def max_index(u):
    """m(u): largest 1-based index with a positive entry, 0 for the zero vector"""
    for i in range(len(u), 0, -1):
        if u[i - 1] > 0:
            return i
    return 0


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def monomials_of_bidegree(n, m, a, b):
    """All exponent tuples of bidegree (a, b) in n x- and m y-variables"""
    if a < 0 or b < 0:
        return ()
    xs = list(_compositions(a, n))
    ys = list(_compositions(b, m))
    return tuple(u + v for u in xs for v in ys)


# Polynomial helpers

def bidegree(p):
    """(a, b) when all terms share that bidegree, otherwise a ``Degree`` marker"""
    if not p:
        return Degree.ZERO
    sig = signature_of(p.ring)
    degrees = {sig.bidegree_of(monom) for monom in p.itermonoms()}
    if len(degrees) > 1:
        return Degree.NOT_BIHOMOGENEOUS
    return degrees.pop()


def is_bihomogeneous(p):
    return isinstance(bidegree(p), tuple)


def _check_same_ring(p, q):
    if p.ring != q.ring:
        raise RingMismatchError("Operands live in different rings")


def add(p, q):
    _check_same_ring(p, q)
    return p + q


def multiply(p, q):
    _check_same_ring(p, q)
    return p * q


def scale(p, c):
    return p * p.ring.domain.convert(c)


def monomial_poly(ring, monom, coeff=1):
    return ring.from_dict({tuple(monom): coeff})


def linear_form(ring, coefficients, positions):
    """sum c_k * var_{positions[k]}"""
    zero = (0,) * ring.ngens
    terms = {}
    for c, pos in zip(coefficients, positions):
        if c:
            monom = list(zero)
            monom[pos] = 1
            terms[tuple(monom)] = c
    return ring.from_dict(terms)
