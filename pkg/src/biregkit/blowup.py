"""
Rees and symmetric algebras of equigenerated ideals of S_x, regularity of
powers and symmetric powers, and the thresholds after which it is linear.

For I = (f_1..f_m) generated in degree d the presentation S/J of R(I) or
S(I) lives in K[x_1..x_n, y_1..y_m]; its strand (*, j) is I^j (resp.
S^j(I)) shifted by jd, so reg(I^j) = jd + reg(R_(*,j)).
"""

import math
from dataclasses import dataclass
from ._compat import StrEnum
from itertools import combinations_with_replacement

import numpy as np
import pandas as pd
from tqdm import tqdm

from .errors import MathError
from .gin import DEFAULT_TRIALS, bigin, is_bistable, m_invariants, restrict_to_ydeg
from .groebner import (
    BigradedIdeal,
    MonomialIdeal,
    colon,
    eliminate_auxiliary,
    embed,
    hilbert_dimension,
    ideal_sum,
    ideals_equal,
    initial_ideal,
    krull_dimension,
    minimal_generators,
    syzygies,
)
from .linalg import rank
from .parser import format_monomial, format_polynomial
from .regularity import (
    almost_regular_sequence,
    colon_chain,
    colon_degree_support,
    is_d_sequence,
    random_form,
    reg_via_s_values,
)
from .resolve import StrandBuilder, graded_regularity, koszul_betti, reg_from_betti
from .ring import Direction, RingSignature, bidegree, max_index, monomials_of_bidegree


class PresentationKind(StrEnum):
    REES = 'rees'
    SYMMETRIC = 'sym'


class LinearType(StrEnum):
    ASSUMED = 'assumed'
    VERIFIED = 'verified'
    FAILS = 'fails'


def _equigenerated(base):
    """Check that ``base`` is a nonzero ideal of S_x generated in one degree; return that degree"""
    if base.ring.m != 0:
        raise MathError("Expected an ideal of S_x (no y-variables)", m=base.ring.m)
    if base.is_zero:
        raise MathError("Expected a nonzero ideal")
    degrees = {bidegree(g) for g in base.gens}
    if any(not isinstance(deg, tuple) for deg in degrees):
        raise MathError("Generators must be homogeneous")
    if len(degrees) > 1:
        raise MathError("Generators have unequal degrees",
                        degrees=sorted(deg[0] for deg in degrees))
    d = degrees.pop()[0]
    if d < 1:
        raise MathError("Generators must have positive degree")
    return d


@dataclass(frozen=True)
class ReesPresentation:
    base: BigradedIdeal
    degree: int
    ideal: BigradedIdeal
    kind: PresentationKind

    @property
    def ring(self):
        return self.ideal.ring

    def strand_dimension(self, a, j):
        """dim_K (S/J)_(a,j), which is dim (I^j)_(a+jd) for the Rees kind"""
        return hilbert_dimension(self.ideal, (a, j))

    def to_json(self):
        return {
            'kind': str(self.kind),
            'degree': self.degree,
            'ring': self.ring.to_json(),
            'generators': [format_polynomial(g) for g in self.ideal.gens],
        }


def _target(base):
    return RingSignature(base.ring.n, len(base.gens), base.ring.field)


def rees_ideal(base):
    """Ker(x_i -> x_i, y_j -> f_j t) by eliminating t"""
    d = _equigenerated(base)
    signature = _target(base)
    if len(base.gens) == 1:
        return ReesPresentation(base, d, BigradedIdeal.zero(signature), PresentationKind.REES)
    aux = signature.aux_ring(('t0',))
    t = aux.gens[-1]
    m = len(base.gens)
    relations = [aux.gens[base.ring.n + j] - embed(f, aux, m + 1) * t
                 for j, f in enumerate(base.gens)]
    ideal = minimal_generators(eliminate_auxiliary(signature, relations))
    assert ideal.is_bigraded, "Rees relations of an equigenerated ideal are bihomogeneous"
    return ReesPresentation(base, d, ideal, PresentationKind.REES)


def symmetric_ideal(base):
    """(sum_i b_ij y_i) over the columns of a syzygy matrix of f_1..f_m"""
    d = _equigenerated(base)
    signature = _target(base)
    ring = signature.poly_ring()
    m = len(base.gens)
    ys = ring.gens[base.ring.n:]
    polys = []
    for column in syzygies(list(base.gens)):
        polys.append(sum((embed(b, ring, m) * y for b, y in zip(column, ys)), ring.zero))
    ideal = BigradedIdeal.from_polys(signature, polys)
    if not ideal.is_zero:
        ideal = minimal_generators(ideal)
    return ReesPresentation(base, d, ideal, PresentationKind.SYMMETRIC)


def presentation(base, kind):
    return rees_ideal(base) if PresentationKind(kind) is PresentationKind.REES else symmetric_ideal(base)


def power_ideal(base, j):
    """I^j, minimally generated"""
    if j < 1:
        raise MathError("Powers start at j = 1", j=j)
    products = []
    for factors in combinations_with_replacement(base.gens, j):
        p = factors[0]
        for f in factors[1:]:
            p = p * f
        products.append(p)
    return minimal_generators(BigradedIdeal.from_polys(base.ring, products))


# Strands

def strand_regularities(ideal, strands, seed=0, certificate=None):
    """reg of the S_x-modules R_(*,j) for R = S/J, j in ``strands``.

    reg(R_(*,j)) is the largest x-degree where a colon module of an almost
    regular x-sequence is nonzero in y-degree j, and 0 when there is none.
    Zero strands map to None.
    """
    certificate = certificate or almost_regular_sequence(ideal, Direction.X, seed)
    strands = list(strands)
    values = {j: 0 for j in strands if hilbert_dimension(ideal, (0, j))}
    for prefix, quotient in colon_chain(ideal, certificate.forms):
        for j in values:
            support = colon_degree_support(prefix, quotient, Direction.X, fixed=j)
            if support is None:
                raise MathError("Colon module does not vanish in high x-degree", strand=j)
            values[j] = max(values[j], support.top)
    return {j: values.get(j) for j in strands}


def strand_regularity(ideal, j, seed=0):
    return strand_regularities(ideal, [j], seed)[j]


@dataclass(frozen=True)
class SymmetricPower:
    """S^j(I) as the strand (*, j) of S(I), shifted by jd."""

    presentation: ReesPresentation
    j: int
    hilbert: tuple

    @property
    def shift(self):
        return self.j * self.presentation.degree

    def regularity(self, seed=0):
        return self.shift + strand_regularity(self.presentation.ideal, self.j, seed)


def symmetric_power_data(base, j, window=4):
    """S^j(I) with dim S^j(I)_(jd+a) for a < ``window``"""
    if j < 1:
        raise MathError("Symmetric powers start at j = 1", j=j)
    sym = symmetric_ideal(base)
    hilbert = tuple(sym.strand_dimension(a, j) for a in range(window))
    return SymmetricPower(sym, j, hilbert)


# Power tables

@dataclass(frozen=True)
class PowerFit:
    slope: int
    intercept: int
    onset: int


@dataclass(frozen=True)
class PowerRegularityTable:
    degree: int
    kind: PresentationKind
    route: str
    rows: dict

    def fit(self):
        """reg = d j + c on the longest tail ending at the last row"""
        js = sorted(self.rows)
        last = js[-1]
        c = self.rows[last] - self.degree * last
        onset = last
        for j in reversed(js):
            if self.rows[j] != self.degree * j + c:
                break
            onset = j
        return PowerFit(self.degree, c, onset)

    def to_frame(self):
        rows = [{'j': j, 'reg': reg, 'jd': j * self.degree, 'excess': reg - j * self.degree}
                for j, reg in sorted(self.rows.items())]
        return pd.DataFrame(rows, columns=['j', 'reg', 'jd', 'excess'])

    def to_json(self):
        fit = self.fit()
        return {
            'kind': str(self.kind),
            'route': self.route,
            'degree': self.degree,
            'rows': [{'j': j, 'reg': reg} for j, reg in sorted(self.rows.items())],
            'fit': {'slope': fit.slope, 'intercept': fit.intercept, 'onset': fit.onset},
        }


def _rows_from_bigin(pres, j_max, trials, seed):
    d = pres.degree
    if pres.ideal.is_zero:
        return {j: j * d for j in range(1, j_max + 1)}
    table = m_table(bigin(pres.ideal, trials=trials, seed=seed).ideal, j_max)
    return {j: j * d + max(table.values[(i, j)] for i in range(1, table.n + 1))
            for j in range(1, j_max + 1)}


def power_reg_table(base, j_max, kind=PresentationKind.REES, route='direct', seed=0,
                    trials=DEFAULT_TRIALS, progress=False):
    """reg(I^j) (or reg(S^j(I))) for j = 1..j_max.

    Routes: ``direct`` resolves each power in S_x, ``strand`` reads the
    strands of the presentation, ``bigin`` uses m^i_j of its bigin. Symmetric
    powers are not ideals, so the symmetric kind has no direct route.
    """
    kind = PresentationKind(kind)
    d = _equigenerated(base)
    if j_max < 1:
        raise MathError("j_max must be at least 1", j_max=j_max)
    if kind is PresentationKind.SYMMETRIC and route == 'direct':
        route = 'strand'

    if route == 'direct':
        rows = {j: graded_regularity(power_ideal(base, j))
                for j in tqdm(range(1, j_max + 1), desc="Powers", unit="power", disable=not progress)}
    elif route == 'strand':
        pres = presentation(base, kind)
        regs = strand_regularities(pres.ideal, range(1, j_max + 1), seed)
        rows = {j: j * d + regs[j] for j in regs}
    elif route == 'bigin':
        rows = _rows_from_bigin(presentation(base, kind), j_max, trials, seed)
    else:
        raise MathError(f"Unknown route '{route}'", route=route)
    return PowerRegularityTable(d, kind, route, rows)


@dataclass(frozen=True)
class LinearityThreshold:
    """reg = jd + c for j >= onset, with 0 <= c <= intercept_bound = reg_x(S/J)."""

    kind: PresentationKind
    onset: int
    intercept_bound: int
    bigin: tuple
    agreed: bool

    def to_json(self):
        return {
            'kind': str(self.kind),
            'j0_bigin': self.onset,
            'c_bracket': [0, self.intercept_bound],
            'bigin': list(self.bigin),
            'agreed': self.agreed,
        }


def linearity_threshold_bigin(base, kind=PresentationKind.REES, trials=DEFAULT_TRIALS, seed=0):
    """j0 = m_y(bigin(J)) and the bound reg_x(S/J) = max(m_x(bigin J) - 1, 0)"""
    kind = PresentationKind(kind)
    pres = presentation(base, kind)
    if pres.ideal.is_zero:
        return LinearityThreshold(kind, 0, 0, (), True)
    result = bigin(pres.ideal, trials=trials, seed=seed)
    m_x, m_y = m_invariants(result.ideal)
    generators = tuple(format_monomial(pres.ring, g) for g in result.ideal.gens)
    return LinearityThreshold(kind, m_y, max(m_x - 1, 0), generators, result.agreed)


# m^i_j

@dataclass(frozen=True)
class MTable:
    n: int
    m_x: int
    m_y: int
    j_max: int
    values: dict
    stable: dict

    @property
    def bound(self):
        return max(self.m_x - 1, 0)

    def is_bounded(self):
        return all(value <= self.bound for value in self.values.values())

    def is_stable(self):
        """m^i_j equals the generator constant c^i for every j >= m_y"""
        return all(self.values[(i, j)] == self.stable[i]
                   for (i, j) in self.values if j >= self.m_y)

    def to_frame(self):
        rows = [{'i': i, 'j': j, 'm': value} for (i, j), value in sorted(self.values.items())]
        return pd.DataFrame(rows, columns=['i', 'j', 'm'])

    def to_json(self):
        return {
            'm_x': self.m_x,
            'm_y': self.m_y,
            'values': [{'i': i, 'j': j, 'm': value} for (i, j), value in sorted(self.values.items())],
            'stable': {str(i): c for i, c in sorted(self.stable.items())},
        }


def _generator_constants(ideal, top):
    """c^i from the minimal generators of J truncated at y-degree ``top``"""
    ring = ideal.ring
    truncated = []
    for g in ideal.gens:
        u, w = ring.split(g)
        if sum(w) <= top:
            for z in monomials_of_bidegree(0, ring.m, 0, top - sum(w)):
                truncated.append(u + tuple(a + b for a, b in zip(w, z)))
    constants = {i: 0 for i in range(1, ring.n + 1)}
    for g in MonomialIdeal.from_monomials(ring, truncated).gens:
        u, _ = ring.split(g)
        i = max_index(u)
        if i:
            constants[i] = max(constants[i], sum(u) - 1)
    return constants


def m_table(ideal, j_max=None):
    """m^i_j = max{|u| - 1 : x^u in G(I_v), m(u) = i, |v| = j}, 0 when empty"""
    if not is_bistable(ideal):
        raise MathError("m_table needs a bistable ideal")
    ring = ideal.ring
    m_x, m_y = m_invariants(ideal)
    j_max = m_y + 2 if j_max is None else j_max
    values = {}
    for j in range(j_max + 1):
        row = {i: 0 for i in range(1, ring.n + 1)}
        for v in monomials_of_bidegree(0, ring.m, 0, j):
            for u in restrict_to_ydeg(ideal, v).gens:
                i = max_index(u)
                if i:
                    row[i] = max(row[i], sum(u) - 1)
        values.update({(i, j): value for i, value in row.items()})
    return MTable(ring.n, m_x, m_y, j_max, values, _generator_constants(ideal, m_y))


def m_table_by_colons(ideal, j_max):
    """m^i_j from the colon modules ((x_n..x_{i+1}) + J : x_i) / ((x_n..x_{i+1}) + J)"""
    ring = ideal.ring
    polys = ideal.to_ideal()
    gens = ring.poly_ring().gens
    values = {}
    for i in range(1, ring.n + 1):
        prefix = ideal_sum(polys, [gens[k] for k in range(i, ring.n)])
        quotient = colon(prefix, gens[i - 1])
        for j in range(j_max + 1):
            support = colon_degree_support(prefix, quotient, Direction.X, fixed=j)
            if support is None:
                raise MathError("Colon module does not vanish in high x-degree", i=i, j=j)
            values[(i, j)] = support.top
    return values


# w(R) and the thresholds

@dataclass(frozen=True)
class WInvariant:
    """Largest b with a nonzero kernel of a generic y-form on Tor_i(S/m_x, R)_(*,b), i >= 1."""

    value: int | None
    b_max: int
    complete: bool
    witnesses: tuple
    form: object

    def to_json(self):
        return {
            'w': self.value,
            'b_max': self.b_max,
            'complete': self.complete,
            'witnesses': [{'i': i, 'a': a, 'b': b} for i, a, b in self.witnesses],
            'form': format_polynomial(self.form),
            'indices': 'i in 1..n',
        }


def w_invariant(ideal, b_max=None, seed=0, table=None):
    """w(R) for R = S/J, scanning y-degrees up to ``b_max``"""
    signature = ideal.ring
    if signature.m == 0:
        raise MathError("w(R) needs y-variables")
    table = table or koszul_betti(ideal)
    if b_max is None:
        reg_y = reg_from_betti(table, Direction.Y)
        if not isinstance(reg_y, int):
            raise MathError("Cannot pick a default b_max from an incomplete Betti table")
        b_max = reg_y + 2 * signature.m + 2

    form = random_form(np.random.default_rng(seed), signature, Direction.Y)
    builder = StrandBuilder(ideal)
    xs = signature.x_indices
    strands = {}

    def strand(a, b):
        if (a, b) not in strands:
            strands[(a, b)] = builder.strand((a, b), xs)
        return strands[(a, b)]

    domain = signature.domain
    witnesses = []
    for i in range(1, signature.n + 1):
        for a in sorted({deg[0] for (k, deg) in table.entries if k == i}):
            for b in range(b_max + 1):
                here = strand(a, b)
                cycles = here.cycles(i)
                boundaries = here.rank(i + 1)
                if len(cycles) == boundaries:
                    continue
                above = strand(a, b + 1)
                index = {element: k for k, element in enumerate(above.bases[i])}
                images = [builder.multiply(z, here.bases[i], form, index) for z in cycles]
                upper = above.rows[i + 1] if i + 1 < len(above.rows) else []
                combined = rank(images + list(upper), above.dim(i), domain)
                kernel_dim = len(cycles) - (combined - above.rank(i + 1)) - boundaries
                if kernel_dim > 0:
                    witnesses.append((i, a, b))

    value = max((b for _, _, b in witnesses), default=None)
    complete = b_max >= signature.m and all(b <= b_max - signature.m for _, _, b in witnesses)
    return WInvariant(value, b_max, complete, tuple(witnesses), form)


@dataclass(frozen=True)
class FourthThreshold:
    """reg(I^{j+1}) = reg(I^j) + d for j >= value."""

    value: int
    reg_y: int
    w: WInvariant
    m: int

    def to_json(self):
        return {'j0_fourth': self.value, 'reg_y': self.reg_y, 'm': self.m, 'w': self.w.to_json()}


def fourth_threshold(ideal, seed=0, b_max=None):
    """max(reg_y(R) + m, w(R) + m); an undefined w drops out"""
    table = koszul_betti(ideal)
    reg_y = reg_from_betti(table, Direction.Y)
    if not isinstance(reg_y, int):
        raise MathError("reg_y is not certified by the Betti table", reg_y=str(reg_y))
    m = ideal.ring.m
    w = w_invariant(ideal, b_max=b_max, seed=seed, table=table)
    value = reg_y + m if w.value is None else max(reg_y + m, w.value + m)
    return FourthThreshold(value, reg_y, w, m)


@dataclass(frozen=True)
class KoszulVanishing:
    j: int
    a_max: int
    nonzero: tuple

    @property
    def vanishes(self):
        return not self.nonzero


def koszul_y_vanishing(ideal, j, a_max=None):
    """H_i(y_1..y_m; R)_(a,j) for all i and a <= a_max"""
    signature = ideal.ring
    if a_max is None:
        a_max = max((bidegree(g)[0] for g in ideal.groebner()), default=0) + signature.n
    builder = StrandBuilder(ideal)
    nonzero = []
    for a in range(a_max + 1):
        strand = builder.strand((a, j), signature.y_indices)
        for i in range(signature.m + 1):
            if strand.homology(i):
                nonzero.append((i, a))
    return KoszulVanishing(j, a_max, tuple(nonzero))


def exact_sequence_defect(ideal, e, j):
    """sum_k (-1)^k C(m,k) dim R_(e, j-k); zero once the y-Koszul homology vanishes"""
    m = ideal.ring.m
    return sum((-1) ** k * math.comb(m, k) * hilbert_dimension(ideal, (e, j - k))
               for k in range(m + 1) if j - k >= 0)


def lemma_first_tail(table, start):
    """Rows j >= start where reg(I^{j+1}) < reg(I^j) + d"""
    rows = table.rows
    return [j for j in sorted(rows) if j >= start and j + 1 in rows
            and rows[j + 1] < rows[j] + table.degree]


# Complete intersections and Hilbert-Burch

def ci_reg_formula(bidegrees):
    """max_i (sum of the i largest x-degrees) - i for generators of y-degree 1"""
    bidegrees = list(bidegrees)
    if any(a <= 0 or b != 1 for a, b in bidegrees):
        raise MathError("Need deg_x > 0 and deg_y = 1 for every generator",
                        bidegrees=[list(z) for z in bidegrees])
    xs = sorted((a for a, _ in bidegrees), reverse=True)
    return max((sum(xs[:i]) - i for i in range(1, len(xs) + 1)), default=0)


@dataclass(frozen=True)
class CompleteIntersection:
    """reg(R_(*,j)) = value for every j >= onset."""

    value: int
    onset: int
    bidegrees: tuple


def ci_reg_from_ideal(ideal):
    """Apply ``ci_reg_formula`` after checking the minimal generators form a regular sequence"""
    gens = minimal_generators(ideal).gens if not ideal.is_zero else ()
    bidegrees = tuple(bidegree(g) for g in gens)
    t = len(gens)
    if t and krull_dimension(initial_ideal(ideal)) != ideal.ring.nvars - t:
        raise MathError("Minimal generators are not a regular sequence", generators=t)
    return CompleteIntersection(ci_reg_formula(bidegrees), t, bidegrees)


@dataclass(frozen=True)
class HilbertBurchReport:
    is_codim2_cm: bool
    matrix: tuple
    linear_case: bool
    threshold: int | None
    linear_type: LinearType

    def to_json(self):
        return {
            'is_codim2_CM': self.is_codim2_cm,
            'B': [[format_polynomial(b) for b in row] for row in self.matrix],
            'linear_case': self.linear_case,
            'burch_threshold': self.threshold,
            'linear_type': str(self.linear_type),
        }


def hilbert_burch_analysis(base, assume_linear_type=False):
    """Detect codimension-2 Cohen-Macaulay ideals and read off their Hilbert-Burch matrix"""
    _equigenerated(base)
    gens = list(minimal_generators(base).gens)
    k = len(gens)
    columns = syzygies(gens)
    codim = base.ring.n - krull_dimension(initial_ideal(base))
    is_cm = k >= 2 and len(columns) == k - 1 and codim == 2
    matrix = tuple(tuple(column[i] for column in columns) for i in range(k))
    entries = [b for row in matrix for b in row if b]
    linear = bool(entries) and all(bidegree(b) == (1, 0) for b in entries)
    threshold = (1 if linear else k - 1) if is_cm else None

    if assume_linear_type:
        linear_type = LinearType.ASSUMED
    else:
        same = ideals_equal(rees_ideal(base).ideal, symmetric_ideal(base).ideal)
        linear_type = LinearType.VERIFIED if same else LinearType.FAILS
    return HilbertBurchReport(is_cm, matrix, linear, threshold, linear_type)


@dataclass(frozen=True)
class GenerationReport:
    reg_y_rees: int
    reg_y_symmetric: int
    d_sequence: object

    @property
    def d_sequence_generated(self):
        return self.reg_y_rees == 0

    @property
    def s_sequence_generated(self):
        return self.reg_y_symmetric == 0

    def to_json(self):
        return {
            'reg_y_rees': self.reg_y_rees,
            'reg_y_sym': self.reg_y_symmetric,
            'd_sequence_generated': self.d_sequence_generated,
            's_sequence_generated': self.s_sequence_generated,
            'generators_form_d_sequence': self.d_sequence.is_d_sequence,
        }


def generation_report(base, seed=0):
    """d-sequence generation via reg_y(R(I)) = 0 and s-sequence generation via reg_y(S(I)) = 0"""
    rees = rees_ideal(base)
    sym = symmetric_ideal(base)
    reg_rees = reg_via_s_values(rees.ideal, seed, directions=(Direction.Y,)).reg_y
    reg_sym = reg_via_s_values(sym.ideal, seed, directions=(Direction.Y,)).reg_y
    return GenerationReport(reg_rees, reg_sym, is_d_sequence(list(base.gens), BigradedIdeal.zero(base.ring)))
