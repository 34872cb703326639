"""
Deterministic test ideals: random corpora per flavor plus pinned fixtures.
"""

from dataclasses import dataclass
from ._compat import StrEnum
from pathlib import Path

import numpy as np
from tqdm import tqdm

from .documents import IdealDocument
from .errors import MathError
from .gin import exchange_closure
from .groebner import BigradedIdeal
from .parser import parse_polynomial
from .ring import RingSignature, monomials_of_bidegree

MAX_VARIABLES = 4


class Flavor(StrEnum):
    BISTABLE = 'bistable'
    STRONGLY_BISTABLE = 'strongly-bistable'
    BINOMIAL = 'binomial'
    GENERIC = 'generic'
    EQUIGENERATED_X = 'equigenerated-x'


@dataclass(frozen=True)
class CorpusSpec:
    seed: int
    n: int
    m: int
    flavor: Flavor
    count: int = 20
    max_degree: tuple = (2, 2)
    generators: tuple = (1, 3)
    degree: int = 2

    def validate(self):
        if not (0 <= self.n <= MAX_VARIABLES and 0 <= self.m <= MAX_VARIABLES):
            raise MathError(f"Corpus rings have at most {MAX_VARIABLES} variables per block",
                            n=self.n, m=self.m)
        lo, hi = self.generators
        if self.count < 1 or lo < 1 or lo > hi:
            raise MathError("Empty corpus range", count=self.count, generators=list(self.generators))
        if Flavor(self.flavor) is Flavor.EQUIGENERATED_X:
            if self.n < 1 or self.degree < 1:
                raise MathError("Equigenerated ideals need n >= 1 and degree >= 1")
        elif self.n + self.m < 1 or tuple(self.max_degree) == (0, 0) or min(self.max_degree) < 0:
            raise MathError("Empty bidegree range", max_degree=list(self.max_degree))

    @property
    def ring(self):
        if Flavor(self.flavor) is Flavor.EQUIGENERATED_X:
            return RingSignature(self.n, 0)
        return RingSignature(self.n, self.m)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    ideal: BigradedIdeal
    flavor: str


def _parse_all(ring, texts):
    return BigradedIdeal.from_polys(ring, [parse_polynomial(text, ring) for text in texts])


def pinned_fixtures():
    """Worked examples shipped with every corpus"""
    return {
        'xbi': _parse_all(RingSignature(3, 3), ['y2*x2 - y1*x3', 'y3*x1 - y1*x3']),
        'principal': _parse_all(RingSignature(1, 1), ['x1*y1']),
        'staircase': _parse_all(RingSignature(1, 2), ['x1*y1', 'x1^2*y2']),
        'msquare': _parse_all(RingSignature(2, 0), ['x1^2', 'x1*x2', 'x2^2']),
        'linear': _parse_all(RingSignature(2, 0), ['x1', 'x2']),
        'ci': _parse_all(RingSignature(2, 0), ['x1^2', 'x2^2']),
    }


def _pick(rng, items):
    return items[int(rng.integers(len(items)))]


def _random_bidegree(rng, ring, max_degree):
    while True:
        a = int(rng.integers(max_degree[0] + 1)) if ring.n else 0
        b = int(rng.integers(max_degree[1] + 1)) if ring.m else 0
        if (a, b) != (0, 0):
            return a, b


def _monomials(ring, degree):
    return monomials_of_bidegree(ring.n, ring.m, *degree)


def _random_generator(rng, ring, flavor, max_degree):
    poly_ring = ring.poly_ring()
    degree = _random_bidegree(rng, ring, max_degree)
    monomials = _monomials(ring, degree)
    if flavor is Flavor.BINOMIAL and len(monomials) > 1:
        first, second = rng.choice(len(monomials), size=2, replace=False)
        c = int(rng.choice([-3, -2, -1, 1, 2, 3]))
        return poly_ring.from_dict({monomials[int(first)]: 1, monomials[int(second)]: c})
    if flavor is Flavor.GENERIC:
        while True:
            terms = {mon: int(c) for mon, c in zip(monomials, rng.integers(-5, 6, size=len(monomials))) if c}
            if terms:
                return poly_ring.from_dict(terms)
    return poly_ring.from_dict({_pick(rng, monomials): 1})


def _draw(rng, spec):
    ring = spec.ring
    flavor = Flavor(spec.flavor)
    lo, hi = spec.generators
    size = int(rng.integers(lo, hi + 1))
    if flavor is Flavor.EQUIGENERATED_X:
        monomials = _monomials(ring, (spec.degree, 0))
        chosen = rng.choice(len(monomials), size=min(size, len(monomials)), replace=False)
        return BigradedIdeal.from_polys(ring, [ring.poly_ring().from_dict({monomials[int(k)]: 1})
                                               for k in sorted(chosen)])
    if flavor in (Flavor.BISTABLE, Flavor.STRONGLY_BISTABLE):
        seeds = [_pick(rng, _monomials(ring, _random_bidegree(rng, ring, spec.max_degree)))
                 for _ in range(size)]
        closure = exchange_closure(ring, seeds, strong=flavor is Flavor.STRONGLY_BISTABLE)
        return closure.to_ideal()
    return BigradedIdeal.from_polys(ring, [_random_generator(rng, ring, flavor, spec.max_degree)
                                           for _ in range(size)])


def generate(spec):
    """Corpus for ``spec``; a pure function of it"""
    spec.validate()
    flavor = Flavor(spec.flavor)
    rng = np.random.default_rng(spec.seed)
    entries = []
    if flavor is Flavor.BINOMIAL:
        entries.append(CorpusEntry('xbi', pinned_fixtures()['xbi'], str(flavor)))
    for k in range(spec.count):
        entries.append(CorpusEntry(f"{flavor}-{spec.seed}-{k:03d}", _draw(rng, spec), str(flavor)))
    return entries


def write_corpus(entries, out_dir, progress=True):
    """One ideal document per entry; returns the written paths"""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for entry in tqdm(entries, desc="Writing corpus", unit="ideal", disable=not progress):
        path = out / f"{entry.name}.json"
        IdealDocument.from_ideal(entry.ideal, name=entry.name, flavor=entry.flavor).dump(path)
        paths.append(path)
    return paths
