"""
Bigeneric initial ideals, bistability and the invariants m_x, m_y.

A generic element of GL(n) x GL(m) is simulated by integer matrices drawn
uniformly from [-bound, bound] (from F_p itself over a prime field); several
independent draws must agree.
"""

import warnings
from collections import Counter
from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from .errors import ConsensusError, MathError, RetriesExhaustedError
from .groebner import BigradedIdeal, MonomialIdeal, initial_ideal
from .linalg import determinant
from .ring import RingSignature, max_index

GENERIC_BOUND = 10**6
DEFAULT_TRIALS = 3
MAX_DRAWS = 100


def random_coefficients(rng, field, shape, bound=GENERIC_BOUND):
    """Integers uniform in [-bound, bound] over Q, uniform on [0, p) over F_p"""
    if field.is_rational:
        return rng.integers(-bound, bound + 1, size=shape)
    return rng.integers(0, field.characteristic, size=shape)


def _random_invertible(rng, size, bound, field):
    for _ in range(MAX_DRAWS):
        matrix = tuple(tuple(int(c) for c in row)
                       for row in random_coefficients(rng, field, (size, size), bound))
        if determinant(matrix, field.domain):
            return matrix
    raise RetriesExhaustedError(f"No invertible {size}x{size} matrix in {MAX_DRAWS} draws",
                                bound=bound)


@dataclass(frozen=True)
class CoordinateChange:
    """g = (D, E): x_j -> sum_i D[i][j] x_i and y_l -> sum_k E[k][l] y_k."""

    D: tuple
    E: tuple
    seed: int | None = None

    @classmethod
    def identity(cls, ring):
        eye = lambda k: tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
        return cls(eye(ring.n), eye(ring.m))

    @classmethod
    def random(cls, ring, seed, bound=GENERIC_BOUND):
        rng = np.random.default_rng(seed)
        return cls(_random_invertible(rng, ring.n, bound, ring.field),
                   _random_invertible(rng, ring.m, bound, ring.field),
                   seed)

    def is_invertible(self, ring):
        return bool(determinant(self.D, ring.domain)) and bool(determinant(self.E, ring.domain))

    def images(self, ring):
        """Image of every variable of S, in variable order"""
        target = ring.poly_ring()
        gens = target.gens
        xs = [sum((gens[i] * self.D[i][j] for i in range(ring.n)), target.zero)
              for j in range(ring.n)]
        ys = [sum((gens[ring.n + k] * self.E[k][l] for k in range(ring.m)), target.zero)
              for l in range(ring.m)]
        return xs + ys


def substitute(p, images, target):
    """p(images) in ``target``; ``images`` lists one polynomial per variable"""
    powers = [{0: target.one, 1: img} for img in images]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * images[i]
        return cache[e]

    result = target.zero
    for monom, c in p.items():
        term = target.ground_new(c)
        for i, e in enumerate(monom):
            if e:
                term = term * power(i, e)
        result = result + term
    return result


def apply_change(ideal, change):
    """g.J; bidegrees of generators are preserved"""
    ring = ideal.ring
    if len(change.D) != ring.n or len(change.E) != ring.m:
        raise MathError("Coordinate change does not match the ring", n=ring.n, m=ring.m)
    if not change.is_invertible(ring):
        raise MathError("Singular coordinate change", seed=change.seed)
    images = change.images(ring)
    target = ring.poly_ring()
    return BigradedIdeal.from_polys(ring, [substitute(g, images, target) for g in ideal.gens])


@dataclass(frozen=True)
class BiginResult:
    ideal: MonomialIdeal
    trials: tuple
    agreed: bool


def bigin(ideal, trials=DEFAULT_TRIALS, seed=0, bound=GENERIC_BOUND):
    """bigin(J) = in(gJ) for generic g, by consensus over ``trials`` seeds"""
    ring = ideal.ring
    if not ring.field.is_rational:
        warnings.warn("bigin over a prime field is heuristic; strong bistability is only "
                      "guaranteed in characteristic 0", stacklevel=2)
    if ideal.is_zero:
        zero = MonomialIdeal(ring, ())
        return BiginResult(zero, tuple((seed + t, zero) for t in range(trials)), True)

    outcomes = []
    for t in range(trials):
        change = CoordinateChange.random(ring, seed + t, bound)
        outcomes.append((seed + t, initial_ideal(apply_change(ideal, change))))

    counts = Counter(result for _, result in outcomes)
    winner, votes = counts.most_common(1)[0]
    if trials > 1 and votes == 1:
        raise ConsensusError("All bigin trials disagree",
                             trials=[{'seed': s, 'generators': [list(g) for g in r.gens]}
                                     for s, r in outcomes])
    if votes < trials:
        tqdm.write(f"bigin: {trials - votes} of {trials} trials disagree with the majority")
    return BiginResult(winner, tuple(outcomes), votes == trials)


# Bistability

def _exchanges(ring, monom, strong):
    """Monomials reached by one exchange move toward smaller indices"""
    u, v = ring.split(monom)
    moves = []
    for block, offset in ((u, 0), (v, ring.n)):
        if strong:
            sources = [s for s in range(len(block)) if block[s] > 0]
        else:
            top = max_index(block)
            sources = [top - 1] if top else []
        for s in sources:
            for i in range(s):
                new = list(monom)
                new[offset + s] -= 1
                new[offset + i] += 1
                moves.append(tuple(new))
    return moves


def _closed(ideal, strong):
    return all(ideal.contains(w)
               for g in ideal.gens for w in _exchanges(ideal.ring, g, strong))


def is_bistable(ideal):
    """Closed under x_i z / x_{m_x(z)} and y_j z / y_{m_y(z)}"""
    return _closed(ideal, strong=False)


def is_strongly_bistable(ideal):
    """Closed under x_i z / x_s and y_j z / y_t for every dividing x_s, y_t"""
    return _closed(ideal, strong=True)


def exchange_closure(ring, monomials, strong=False):
    """Smallest (strongly) bistable ideal containing ``monomials``"""
    ideal = MonomialIdeal.from_monomials(ring, monomials)
    while True:
        missing = [w for g in ideal.gens for w in _exchanges(ring, g, strong)
                   if not ideal.contains(w)]
        if not missing:
            return ideal
        ideal = MonomialIdeal.from_monomials(ring, list(ideal.gens) + missing)


def m_invariants(ideal):
    """(m_x(J), m_y(J)): largest x- and y-degree of a minimal generator"""
    if ideal.is_zero:
        raise MathError("m_x and m_y are not defined for the zero ideal")
    degrees = ideal.bidegrees()
    return max(a for a, _ in degrees), max(b for _, b in degrees)


def restrict_to_ydeg(ideal, v):
    """I_v in S_x, generated by x^u for the generators x^u y^w of J with w <= v"""
    ring = ideal.ring
    if len(v) != ring.m:
        raise MathError(f"Expected a y-exponent of length {ring.m}")
    if not is_bistable(ideal):
        warnings.warn("restrict_to_ydeg called on a non-bistable ideal", stacklevel=2)
    sx = RingSignature(ring.n, 0, ring.field)
    chosen = []
    for g in ideal.gens:
        u, w = ring.split(g)
        if all(a <= b for a, b in zip(w, v)):
            chosen.append(u)
    result = MonomialIdeal.from_monomials(sx, chosen)
    if is_bistable(ideal):
        assert is_bistable(result), "I_v of a bistable ideal must be stable"
    return result
