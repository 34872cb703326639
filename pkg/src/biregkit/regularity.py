"""
Almost regular sequences, s-values and the regularity reports built on them,
plus the d-sequence predicates.

For a form l and P = J + (earlier forms), the colon module (P : l)/P is
measured degreewise by comparing Hilbert functions of P and P : l. Its
direction-degrees are scanned upward; once past the generators of P : l a
single vanishing degree certifies vanishing from there on.
"""

from dataclasses import dataclass

import numpy as np
from tqdm import tqdm

from .errors import ConsensusError, MathError, RetriesExhaustedError
from .gin import DEFAULT_TRIALS, GENERIC_BOUND, bigin, is_bistable, m_invariants, random_coefficients
from .groebner import (
    BigradedIdeal,
    MonomialIdeal,
    colon,
    hilbert_dimension,
    ideal_sum,
    intersect,
    is_subideal,
    normal_form,
)
from .linalg import Span
from .parser import format_monomial, format_polynomial
from .resolve import betti_witnesses, koszul_betti, reg_from_betti, taylor_betti
from .ring import Direction, bidegree, linear_form, signature_of

SCAN_SLACK = 32
MAX_RETRIES = 10


def _axis(direction):
    return 0 if Direction(direction) is Direction.X else 1


def _degree(axis, e, other):
    return (e, other) if axis == 0 else (other, e)


@dataclass(frozen=True)
class ColonSupport:
    """Direction-degrees where (P : l)/P is nonzero; zero from ``bound`` on."""

    degrees: tuple
    bound: int

    @property
    def top(self):
        return max(self.degrees, default=0)


def colon_degree_support(prefix, colon_ideal, direction, fixed=None, slack=SCAN_SLACK):
    """Scan the degrees of colon_ideal/prefix in ``direction``.

    With ``fixed`` only the component of that other-direction degree is
    measured. Returns None when no vanishing degree shows up within
    ``slack`` steps past the generator degrees.
    """
    axis = _axis(direction)
    if colon_ideal.is_zero:
        return ColonSupport((), 0)
    degrees = [bidegree(g) for g in colon_ideal.gens]
    start = max(d[axis] for d in degrees)
    others = {fixed} if fixed is not None else {d[1 - axis] for d in degrees}

    support = []
    e = 0
    while e <= start + slack:
        nonzero = any(hilbert_dimension(prefix, _degree(axis, e, o))
                      > hilbert_dimension(colon_ideal, _degree(axis, e, o))
                      for o in others)
        if nonzero:
            support.append(e)
        elif e >= start:
            return ColonSupport(tuple(support), e)
        e += 1
    return None


def colon_chain(ideal, forms):
    """Pairs (P_i, P_i : l_i) with P_1 = J and P_{i+1} = P_i + (l_i)"""
    prefix = ideal
    for form in forms:
        yield prefix, colon(prefix, form)
        prefix = ideal_sum(prefix, [form])


@dataclass(frozen=True)
class AlmostRegularCertificate:
    direction: Direction
    forms: tuple
    bounds: tuple
    s_values: tuple
    seed: int | None = None
    retries: int = 0

    @property
    def regularity(self):
        return max(self.s_values, default=0)

    def to_json(self):
        return {
            'direction': str(self.direction),
            'forms': [format_polynomial(f) for f in self.forms],
            'bounds': list(self.bounds),
            's_values': list(self.s_values),
            'seed': self.seed,
            'retries': self.retries,
        }


def random_form(rng, signature, direction, bound=GENERIC_BOUND):
    """Nonzero linear form with coefficients drawn by ``random_coefficients``"""
    positions = signature.indices(direction)
    ring = signature.poly_ring()
    domain = signature.domain
    while True:
        coefficients = [domain.convert(int(c))
                        for c in random_coefficients(rng, signature.field, len(positions), bound)]
        form = linear_form(ring, coefficients, positions)
        if form:
            return form


def almost_regular_sequence(ideal, direction, seed=0, bound=GENERIC_BOUND, coordinate=None):
    """An almost regular sequence of (1,0)- or (0,1)-forms with its s-values.

    Bistable monomial ideals use the coordinate sequence x_n, .., x_1
    (resp. y_m, .., y_1); otherwise forms are drawn at random and redrawn
    when the colon module does not vanish in high degrees.
    """
    direction = Direction(direction)
    signature = ideal.ring
    positions = signature.indices(direction)
    if coordinate is None:
        coordinate = ideal.is_monomial and is_bistable(MonomialIdeal.of(ideal))
    rng = np.random.default_rng(seed)
    ring = signature.poly_ring()

    prefix = ideal
    forms, bounds, s_values = [], [], []
    retries = 0
    for step in range(len(positions)):
        for attempt in range(MAX_RETRIES):
            if coordinate:
                form = ring.gens[positions[len(positions) - 1 - step]]
            else:
                form = random_form(rng, signature, direction, bound)
            support = colon_degree_support(prefix, colon(prefix, form), direction)
            if support is not None:
                break
            if coordinate:
                raise MathError("Coordinate sequence is not almost regular", step=step + 1)
            retries += 1
            tqdm.write(f"almost regular sequence: redrawing form {step + 1} ({direction})")
        else:
            raise RetriesExhaustedError(f"No almost regular form found after {MAX_RETRIES} draws",
                                        direction=str(direction), step=step + 1)
        forms.append(form)
        bounds.append(support.bound)
        s_values.append(support.top)
        prefix = ideal_sum(prefix, [form])

    return AlmostRegularCertificate(direction, tuple(forms), tuple(bounds), tuple(s_values),
                                    None if coordinate else seed, retries)


@dataclass(frozen=True)
class RegularityReport:
    """reg_x and reg_y of S/J with the evidence of the method used."""

    method: str
    reg_x: object
    reg_y: object
    certificates: dict

    def to_json(self):
        def plain(value):
            return value.to_json() if hasattr(value, 'to_json') else value

        return {
            'method': self.method,
            'reg_x': self.reg_x if not isinstance(self.reg_x, str) else str(self.reg_x),
            'reg_y': self.reg_y if not isinstance(self.reg_y, str) else str(self.reg_y),
            'certificates': {key: plain(value) for key, value in self.certificates.items()},
        }


def reg_via_s_values(ideal, seed=0, directions=(Direction.X, Direction.Y)):
    """reg_x = max s^x_i and reg_y = max s^y_i"""
    values = {Direction.X: None, Direction.Y: None}
    certificates = {}
    for direction in map(Direction, directions):
        certificate = almost_regular_sequence(ideal, direction, seed)
        certificates[str(direction)] = certificate
        values[direction] = certificate.regularity
    return RegularityReport('svalues', values[Direction.X], values[Direction.Y], certificates)


def reg_via_betti(ideal, box=None, method='koszul'):
    """Regularities read off a Betti table of S/J"""
    if method == 'taylor':
        if not ideal.is_monomial:
            raise MathError("The Taylor route needs a monomial ideal")
        table = taylor_betti(MonomialIdeal.of(ideal))
    else:
        table = koszul_betti(ideal, box)
    return RegularityReport(
        'betti',
        reg_from_betti(table, Direction.X),
        reg_from_betti(table, Direction.Y),
        {'table': table,
         'x': betti_witnesses(table, Direction.X),
         'y': betti_witnesses(table, Direction.Y)})


def reg_via_bigin(ideal, trials=DEFAULT_TRIALS, seed=0):
    """reg_x(S/J) = reg_x(S/bigin(J)) = max(m_x(bigin J) - 1, 0); reg_y is not determined"""
    result = bigin(ideal, trials=trials, seed=seed)
    reg_x = 0 if result.ideal.is_zero else max(m_invariants(result.ideal)[0] - 1, 0)
    generators = [format_monomial(ideal.ring, g) for g in result.ideal.gens]
    return RegularityReport('bigin', reg_x, None,
                            {'bigin': generators, 'agreed': result.agreed})


# d-sequences

@dataclass(frozen=True)
class DSequenceReport:
    sequence: tuple
    minimal_generation: bool
    colon_conditions: tuple

    @property
    def is_d_sequence(self):
        return self.minimal_generation and all(self.colon_conditions)

    def to_json(self):
        return {
            'sequence': [format_polynomial(f) for f in self.sequence],
            'minimal_generation': self.minimal_generation,
            'colon_conditions': list(self.colon_conditions),
            'is_d_sequence': self.is_d_sequence,
        }


def _minimally_generates(ideal, elements):
    """Images of ``elements`` are K-independent in I/mI for I = their ideal in S/J"""
    products = [var * f for f in elements for var in ideal.ring.poly_ring().gens]
    basis = ideal_sum(ideal, products).groebner()
    groups = {}
    for f in elements:
        groups.setdefault(bidegree(f), []).append(f)
    for group in groups.values():
        span = Span(ideal.ring.domain)
        if not all(span.add(dict(normal_form(f, basis).items())) for f in group):
            return False
    return True


def is_d_sequence(elements, ideal=None):
    """Check f_1..f_r in S/J: minimal generation and (f_<i) : f_i ∩ I = (f_<i)"""
    elements = list(elements)
    if ideal is None:
        if not elements:
            raise MathError("An empty sequence needs the ambient ideal")
        ideal = BigradedIdeal.zero(signature_of(elements[0].ring))
    signature = ideal.ring
    elements = [signature.element(f) for f in elements]
    if any(not f for f in elements):
        raise MathError("d-sequences cannot contain zero")
    if any(not isinstance(bidegree(f), tuple) for f in elements):
        raise MathError("d-sequence elements must be bihomogeneous")

    minimal = _minimally_generates(ideal, elements) if elements else True
    total = ideal_sum(ideal, elements)
    conditions = []
    for (prefix, quotient) in colon_chain(ideal, elements):
        conditions.append(is_subideal(intersect(quotient, total), prefix))
    return DSequenceReport(tuple(elements), minimal, tuple(conditions))


def _spans_component(ideal, forms, degree):
    basis = ideal.groebner()
    span = Span(ideal.ring.domain)
    span.extend(dict(normal_form(f, basis).items()) for f in forms)
    return len(span) == hilbert_dimension(ideal, degree)


def generic_forms_d_sequence(ideal, direction, seed=0, trials=DEFAULT_TRIALS, bound=GENERIC_BOUND):
    """Whether a generic minimal system of (1,0)- (resp. (0,1)-) forms is a d-sequence"""
    direction = Direction(direction)
    unit = _degree(_axis(direction), 1, 0)
    size = hilbert_dimension(ideal, unit)
    if size == 0:
        return True

    outcomes = []
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        for _ in range(MAX_RETRIES):
            forms = [random_form(rng, ideal.ring, direction, bound) for _ in range(size)]
            if _spans_component(ideal, forms, unit):
                break
        else:
            raise RetriesExhaustedError("Random forms never spanned the degree-one component",
                                        direction=str(direction))
        outcomes.append((seed + t, is_d_sequence(forms, ideal)))

    verdicts = {report.is_d_sequence for _, report in outcomes}
    if len(verdicts) > 1:
        raise ConsensusError("Generic form systems disagree on the d-sequence property",
                             trials=[{'seed': s, **report.to_json()} for s, report in outcomes])
    return verdicts.pop()
