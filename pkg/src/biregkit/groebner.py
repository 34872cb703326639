"""
Gröbner bases and the ideal operations built on them.

Everything here works on sympy ``PolyElement`` objects of a ring produced
by ``RingSignature``. Orders other than the bigraded default are reached by
moving polynomials to ``signature.poly_ring(order)``.
"""

from dataclasses import dataclass, field
from itertools import combinations, groupby

from sympy.polys.groebnertools import groebner as _sympy_groebner

from .errors import MathError, RingMismatchError
from .linalg import Span
from .ring import (
    Degree,
    PaperOrder,
    RingSignature,
    bidegree,
    divides,
    elimination_order,
    lcm,
    monomials_of_bidegree,
    signature_of,
)


@dataclass(frozen=True)
class BigradedIdeal:
    """Ideal of S given by generators; reduced bases are cached per order."""

    ring: RingSignature
    gens: tuple
    _bases: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @classmethod
    def from_polys(cls, ring, polys):
        elements = tuple(p for p in (ring.element(q) for q in polys) if p)
        return cls(ring, elements)

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    @property
    def is_zero(self):
        return not self.gens

    @property
    def is_bigraded(self):
        return all(isinstance(bidegree(g), tuple) for g in self.gens)

    @property
    def is_monomial(self):
        return all(len(g) == 1 for g in self.gens)

    def groebner(self, order=None):
        """Reduced Gröbner basis under ``order`` (bigraded default)"""
        order = order or PaperOrder(self.ring.n, self.ring.m)
        if order not in self._bases:
            target = self.ring.poly_ring(order)
            self._bases[order] = tuple(buchberger([g.set_ring(target) for g in self.gens], target))
        return self._bases[order]

    def leading_monomials(self, order=None):
        return [g.LM for g in self.groebner(order)]

    def __len__(self):
        return len(self.gens)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (exponent tuples)."""

    ring: RingSignature
    gens: tuple

    @classmethod
    def from_monomials(cls, ring, monomials):
        candidates = sorted(set(tuple(mon) for mon in monomials), key=sum)
        minimal = []
        for mon in candidates:
            if not any(divides(g, mon) for g in minimal):
                minimal.append(mon)
        order = PaperOrder(ring.n, ring.m)
        return cls(ring, tuple(sorted(minimal, key=order, reverse=True)))

    @classmethod
    def of(cls, ideal):
        """The monomial ideal generated by the leading monomials of ``ideal.gens``"""
        return cls.from_monomials(ideal.ring, [g.LM for g in ideal.gens])

    @property
    def is_zero(self):
        return not self.gens

    def contains(self, monom):
        return any(divides(g, monom) for g in self.gens)

    def to_ideal(self):
        ring = self.ring.poly_ring()
        return BigradedIdeal(self.ring, tuple(ring.from_dict({g: 1}) for g in self.gens))

    def bidegrees(self):
        return [self.ring.bidegree_of(g) for g in self.gens]

    def lcm_all(self):
        result = (0,) * self.ring.nvars
        for g in self.gens:
            result = lcm(result, g)
        return result

    def __len__(self):
        return len(self.gens)


# S-polynomials

def _spoly(p1, p2, ring):
    lm1, lm2 = p1.LM, p2.LM
    both = ring.monomial_lcm(lm1, lm2)
    m1 = ring.monomial_div(both, lm1)
    m2 = ring.monomial_div(both, lm2)
    return p1.mul_term((m1, p2.LC)) - p2.mul_term((m2, p1.LC))


def buchberger(polys, ring):
    """Reduced Gröbner basis of ``polys`` under ``ring.order``, largest leading monomial first"""
    polys = [p for p in polys if p]
    if not polys:
        return []
    return _sympy_groebner(polys, ring, method='buchberger')


def groebner_basis(ideal, order=None):
    return ideal.groebner(order)


def normal_form(p, basis):
    """Remainder of ``p`` modulo a Gröbner basis"""
    basis = list(basis)
    if not basis or not p:
        return p
    target = basis[0].ring
    if p.ring != target:
        p = p.set_ring(target)
    return p.rem(basis)


def contains(ideal, p):
    return not normal_form(ideal.ring.element(p), ideal.groebner())


def is_subideal(small, big):
    return all(contains(big, g) for g in small.gens)


def ideals_equal(first, second):
    if first.ring != second.ring:
        raise RingMismatchError("Ideals live in different rings")
    return first.groebner() == second.groebner()


def ideal_sum(ideal, polys):
    return BigradedIdeal.from_polys(ideal.ring, list(ideal.gens) + list(polys))


def spoly_residues(basis):
    """Remainders of all S-polynomials of ``basis``; empty iff it is a Gröbner basis"""
    basis = list(basis)
    if not basis:
        return []
    ring = basis[0].ring
    residues = []
    for p, q in combinations(basis, 2):
        r = _spoly(p, q, ring).rem(basis)
        if r:
            residues.append(r)
    return residues


# Elimination

def embed(p, target, extra):
    """Pad exponents of ``p`` with ``extra`` zeros and move it to ``target``"""
    return target.from_dict({monom + (0,) * extra: c for monom, c in p.items()})


def _project(p, target, keep):
    return target.from_dict({monom[:keep]: c for monom, c in p.items()})


def eliminate_auxiliary(ring_sig, aux_polys):
    """Intersect an ideal of S[aux] with S; ``aux_polys`` live in ``ring_sig.aux_ring``"""
    aux_ring = aux_polys[0].ring
    basis = buchberger(aux_polys, aux_ring)
    nvars = ring_sig.nvars
    target = ring_sig.poly_ring()
    kept = [g for g in basis if all(not any(monom[nvars:]) for monom in g.itermonoms())]
    return BigradedIdeal(ring_sig, tuple(_project(g, target, nvars) for g in kept))


def intersect(first, second):
    """first ∩ second by the t-trick"""
    if first.ring != second.ring:
        raise RingMismatchError("Ideals live in different rings")
    sig = first.ring
    if first.is_zero or second.is_zero:
        return BigradedIdeal.zero(sig)
    aux = sig.aux_ring(('t0',))
    t = aux.gens[-1]
    polys = [t * embed(g, aux, 1) for g in first.gens]
    polys += [(aux.one - t) * embed(h, aux, 1) for h in second.gens]
    return eliminate_auxiliary(sig, polys)


def colon(ideal, f):
    """J : f, computed as (J ∩ (f)) / f"""
    f = ideal.ring.element(f)
    if not f:
        raise MathError("Colon by the zero polynomial")
    sig = ideal.ring
    if ideal.is_zero:
        return BigradedIdeal.zero(sig)
    meet = intersect(ideal, BigradedIdeal(sig, (f,)))
    quotients = []
    for g in meet.gens:
        q, r = g.div([f])
        if r:
            raise MathError("Intersection element not divisible by f")
        quotients.append(q[0])
    return BigradedIdeal.from_polys(sig, quotients)


def eliminate(ideal, keep):
    """J ∩ K[keep] for ``keep`` a collection of variable names"""
    sig = ideal.ring
    keep = set(keep)
    unknown = keep - set(sig.symbols)
    if unknown:
        raise RingMismatchError(f"Unknown variables {sorted(unknown)}")
    drop = [i for i, name in enumerate(sig.symbols) if name not in keep]
    if not drop:
        return ideal
    order = elimination_order(sig.nvars, drop, PaperOrder(sig.n, sig.m))
    basis = ideal.groebner(order)
    kept = [g for g in basis if all(not any(monom[i] for i in drop) for monom in g.itermonoms())]
    return BigradedIdeal.from_polys(sig, [g.set_ring(sig.poly_ring()) for g in kept])


# Syzygies and minimal generators

def _vector_degree(vector, shifts):
    for comp, shift in zip(vector, shifts):
        if comp:
            deg = bidegree(comp)
            if not isinstance(deg, tuple):
                raise MathError("Module element is not bihomogeneous")
            return (deg[0] + shift[0], deg[1] + shift[1])
    return None


def _coordinates(vector, ring, monom):
    coords = {}
    for i, comp in enumerate(vector):
        for term, c in comp.items():
            coords[(i, ring.monomial_mul(term, monom))] = c
    return coords


def minimal_vectors(vectors, shifts, signature):
    """Drop elements of a graded submodule of S^r that the others generate"""
    ring = signature.poly_ring()
    graded = []
    for v in vectors:
        deg = _vector_degree(v, shifts)
        if deg is not None:
            graded.append((deg, v))
    graded.sort(key=lambda item: (sum(item[0]), item[0]))

    kept = []
    for deg, group in groupby(graded, key=lambda item: item[0]):
        span = Span(ring.domain)
        multiples = []
        for kdeg, w in kept:
            da, db = deg[0] - kdeg[0], deg[1] - kdeg[1]
            if da < 0 or db < 0:
                continue
            for monom in monomials_of_bidegree(signature.n, signature.m, da, db):
                multiples.append(_coordinates(w, ring, monom))
        span.extend(multiples)
        for _, v in group:
            if span.add(_coordinates(v, ring, ring.zero_monom)):
                kept.append((deg, v))
    return [v for _, v in kept]


def minimal_generators(ideal):
    """Minimal homogeneous generators, each made monic"""
    if not ideal.is_bigraded:
        raise MathError("Minimal generators need bihomogeneous generators")
    vectors = minimal_vectors([(g,) for g in ideal.gens], [(0, 0)], ideal.ring)
    return BigradedIdeal(ideal.ring, tuple(v[0].monic() for v in vectors))


def _tracked_basis(polys, ring):
    """Gröbner basis together with the expression of each element in ``polys``"""
    r = len(polys)
    domain = ring.domain
    basis, reps = [], []
    for i, p in enumerate(polys):
        if p:
            rep = [ring.zero] * r
            rep[i] = ring.ground_new(domain.one / p.LC)
            basis.append(p.monic())
            reps.append(rep)

    def reduce(p, rep):
        while p:
            lm, lc = p.LM, p.LC
            for g, grep in zip(basis, reps):
                q = ring.monomial_div(lm, g.LM)
                if q is not None:
                    p = p - g.mul_term((q, lc))
                    rep = [a - b.mul_term((q, lc)) for a, b in zip(rep, grep)]
                    break
            else:
                break
        return p, rep

    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        pairs.sort(key=lambda pr: ring.order(ring.monomial_lcm(basis[pr[0]].LM, basis[pr[1]].LM)))
        i, j = pairs.pop(0)
        gi, gj = basis[i], basis[j]
        both = ring.monomial_lcm(gi.LM, gj.LM)
        mi, mj = ring.monomial_div(both, gi.LM), ring.monomial_div(both, gj.LM)
        s = gi.mul_monom(mi) - gj.mul_monom(mj)
        srep = [a.mul_monom(mi) - b.mul_monom(mj) for a, b in zip(reps[i], reps[j])]
        h, hrep = reduce(s, srep)
        if h:
            lc = h.LC
            basis.append(h.monic())
            reps.append([a.quo_ground(lc) for a in hrep])
            k = len(basis) - 1
            pairs.extend((l, k) for l in range(k))
    return basis, reps


def syzygies(polys):
    """Minimal generators of the first syzygy module of bihomogeneous ``polys``"""
    polys = list(polys)
    if not polys:
        return []
    ring = polys[0].ring
    signature = signature_of(ring)
    if any(p.ring != ring for p in polys):
        raise RingMismatchError("Syzygies need polynomials from one ring")
    shifts = []
    for p in polys:
        deg = bidegree(p)
        if deg is Degree.ZERO:
            deg = (0, 0)
        elif deg is Degree.NOT_BIHOMOGENEOUS:
            raise MathError("Syzygies need bihomogeneous polynomials")
        shifts.append(deg)

    r = len(polys)
    basis, reps = _tracked_basis(polys, ring)
    candidates = []

    def pull_back(coeffs):
        vector = [ring.zero] * r
        for c, rep in zip(coeffs, reps):
            if c:
                vector = [v + c * e for v, e in zip(vector, rep)]
        return tuple(vector)

    for i, j in combinations(range(len(basis)), 2):
        gi, gj = basis[i], basis[j]
        both = ring.monomial_lcm(gi.LM, gj.LM)
        mi, mj = ring.monomial_div(both, gi.LM), ring.monomial_div(both, gj.LM)
        s = gi.mul_monom(mi) - gj.mul_monom(mj)
        quotients, remainder = s.div(basis) if s else ([ring.zero] * len(basis), ring.zero)
        if remainder:
            raise MathError("Tracked basis is not a Gröbner basis")
        coeffs = [-q for q in quotients]
        coeffs[i] = coeffs[i] + ring.from_dict({mi: 1})
        coeffs[j] = coeffs[j] - ring.from_dict({mj: 1})
        candidates.append(pull_back(coeffs))

    for k, p in enumerate(polys):
        unit = [ring.zero] * r
        unit[k] = ring.one
        if p:
            quotients, _ = p.div(basis)
            back = pull_back(quotients)
            candidates.append(tuple(u - b for u, b in zip(unit, back)))
        else:
            candidates.append(tuple(unit))

    candidates = [v for v in candidates if any(v)]
    return minimal_vectors(candidates, shifts, signature)


# Standard monomials

def quotient_basis(ideal, degree):
    """Monomials of bidegree ``degree`` outside in(J): a K-basis of (S/J)_(a,b)"""
    a, b = degree
    leading = ideal.leading_monomials()
    monomials = monomials_of_bidegree(ideal.ring.n, ideal.ring.m, a, b)
    return [mon for mon in monomials if not any(divides(lm, mon) for lm in leading)]


def hilbert_dimension(ideal, degree):
    return len(quotient_basis(ideal, degree))


def initial_ideal(ideal, order=None):
    return MonomialIdeal.from_monomials(ideal.ring, ideal.leading_monomials(order))


def krull_dimension(monomial_ideal):
    """dim S/M: the largest set of variables containing no generator's support"""
    nvars = monomial_ideal.ring.nvars
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in monomial_ideal.gens]
    if any(not s for s in supports):
        return -1
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0
