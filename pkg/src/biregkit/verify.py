"""
The acceptance battery behind ``biregkit verify --suite paper``.

Every check returns (passed, detail); ``run_suite`` times them and the
summary is a pandas DataFrame. Corpus sizes follow ``limit_count``.
"""

import time
from dataclasses import dataclass

import numpy as np
import pandas as pd
from tqdm import tqdm

from .blowup import (
    ci_reg_from_ideal,
    exact_sequence_defect,
    hilbert_burch_analysis,
    koszul_y_vanishing,
    linearity_threshold_bigin,
    m_table,
    m_table_by_colons,
    power_reg_table,
    rees_ideal,
)
from .corpus import CorpusSpec, Flavor, generate, pinned_fixtures
from .errors import BiregkitError, MathError
from .gin import bigin, is_strongly_bistable, m_invariants
from .groebner import (
    MonomialIdeal,
    colon,
    contains,
    hilbert_dimension,
    normal_form,
    spoly_residues,
)
from .regularity import generic_forms_d_sequence, is_d_sequence, reg_via_betti, reg_via_s_values
from .resolve import StrandBuilder, koszul_betti, reg_from_betti, taylor_betti
from .ring import Direction, monomials_of_bidegree
from .utils import limit_count
from .veronese import veronese_bound, veronese_zero_thresholds

XBI_BIGIN = ((1, 0, 0, 1, 0, 0), (1, 0, 0, 0, 1, 0), (0, 1, 0, 2, 0, 0))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float


def _corpus(flavor, seed, count, n=2, m=2, **options):
    spec = CorpusSpec(seed=seed, n=n, m=m, flavor=flavor, count=limit_count(count), **options)
    return generate(spec)


def _betti_set(table):
    return sorted((i, degree, beta) for (i, degree), beta in table.entries.items() if i > 0)


def check_xbi(seed):
    """Worked example: bigin, both Betti tables and the four regularities"""
    ideal = pinned_fixtures()['xbi']
    result = bigin(ideal, trials=3, seed=seed)
    if not result.agreed or set(result.ideal.gens) != set(XBI_BIGIN):
        return False, f"bigin = {result.ideal.gens}, agreed = {result.agreed}"
    table = koszul_betti(ideal)
    expected = [(1, (1, 1), 2), (2, (2, 2), 1)]
    if _betti_set(table) != expected:
        return False, f"Betti table of S/J = {_betti_set(table)}"
    gin_table = taylor_betti(result.ideal)
    expected = [(1, (1, 1), 2), (1, (1, 2), 1), (2, (1, 2), 1), (2, (2, 2), 1)]
    if _betti_set(gin_table) != expected:
        return False, f"Betti table of S/bigin(J) = {_betti_set(gin_table)}"
    svalues = reg_via_s_values(ideal, seed)
    regs = (svalues.reg_x, svalues.reg_y,
            reg_from_betti(gin_table, Direction.X), reg_from_betti(gin_table, Direction.Y))
    return regs == (0, 0, 0, 1), f"reg_x, reg_y of S/J and S/bigin(J): {regs}"


def check_yreg(seed):
    """reg via s-values equals reg via Koszul and Taylor Betti tables"""
    entries = (_corpus(Flavor.BISTABLE, seed, 20, max_degree=(2, 2))
               + _corpus(Flavor.BINOMIAL, seed, 10, max_degree=(2, 1))
               + _corpus(Flavor.BINOMIAL, seed + 7, 5, n=3, m=3, max_degree=(2, 2), generators=(1, 2)))
    for entry in entries:
        svalues = reg_via_s_values(entry.ideal, seed)
        betti = reg_via_betti(entry.ideal)
        pairs = [(svalues.reg_x, betti.reg_x), (svalues.reg_y, betti.reg_y)]
        if entry.ideal.is_monomial:
            taylor = reg_via_betti(entry.ideal, method='taylor')
            pairs += [(betti.reg_x, taylor.reg_x), (betti.reg_y, taylor.reg_y)]
        if any(a != b for a, b in pairs):
            return False, f"{entry.name}: {pairs}"
    return True, f"{len(entries)} ideals agree"


def check_bistable_generators(seed):
    """reg_x(J) = m_x(J) and reg_y(J) = m_y(J) for bistable J"""
    entries = _corpus(Flavor.BISTABLE, seed + 1, 20, max_degree=(2, 2))
    for entry in entries:
        monomial = MonomialIdeal.of(entry.ideal)
        table = taylor_betti(monomial)
        regs = (reg_from_betti(table, Direction.X, ideal=True), reg_from_betti(table, Direction.Y, ideal=True))
        if regs != m_invariants(monomial):
            return False, f"{entry.name}: reg {regs} vs m {m_invariants(monomial)}"
    return True, f"{len(entries)} ideals"


def check_m_table(seed):
    """m^i_j is bounded by m_x - 1 and constant from m_y on"""
    entries = _corpus(Flavor.BISTABLE, seed + 2, 20, max_degree=(3, 2))
    for entry in entries:
        monomial = MonomialIdeal.of(entry.ideal)
        table = m_table(monomial)
        if not (table.is_bounded() and table.is_stable()):
            return False, f"{entry.name}: {table.to_json()}"
        if m_table_by_colons(monomial, table.j_max) != table.values:
            return False, f"{entry.name}: colon modules disagree with I_v"
    return True, f"{len(entries)} ideals"


def check_powers(seed):
    """reg(I^j) = jd + c from j0 = m_y(bigin(J_Rees)) on, with 0 <= c <= reg_x(R(I))"""
    fixtures = pinned_fixtures()
    details = []
    for name, expected_c in (('linear', 0), ('msquare', 0), ('ci', 1)):
        base = fixtures[name]
        threshold = linearity_threshold_bigin(base, seed=seed)
        j_max = max(threshold.onset + 2, 4)
        table = power_reg_table(base, j_max)
        d = table.degree
        constants = {table.rows[j] - d * j for j in table.rows if j >= max(threshold.onset, 1)}
        if len(constants) != 1:
            return False, f"{name}: rows {table.rows} not linear from {threshold.onset}"
        c = constants.pop()
        if not 0 <= c <= threshold.intercept_bound or c != expected_c:
            return False, f"{name}: c = {c}, bracket [0, {threshold.intercept_bound}]"
        if threshold.intercept_bound == 0 and any(reg != d * j for j, reg in table.rows.items()):
            return False, f"{name}: reg_x(R(I)) = 0 but rows {table.rows}"
        details.append(f"{name}: c={c}")
    return True, ', '.join(details)


def check_d_sequences(seed):
    """reg = 0 iff generic forms give a d-sequence; regular sequences give reg_y(R(I)) = 0"""
    entries = _corpus(Flavor.BINOMIAL, seed + 3, 5, n=2, m=1, max_degree=(1, 1)) \
        + _corpus(Flavor.BISTABLE, seed + 3, 5, n=2, m=1, max_degree=(2, 1))
    for entry in entries:
        report = reg_via_s_values(entry.ideal, seed)
        for direction, reg in ((Direction.X, report.reg_x), (Direction.Y, report.reg_y)):
            verdict = generic_forms_d_sequence(entry.ideal, direction, seed)
            if verdict != (reg == 0):
                return False, f"{entry.name} ({direction}): d-sequence {verdict}, reg {reg}"
    for name in ('linear', 'ci'):
        base = pinned_fixtures()[name]
        if not is_d_sequence(list(base.gens), None).is_d_sequence:
            return False, f"{name}: generators are not a d-sequence"
        reg_y = reg_via_s_values(rees_ideal(base).ideal, seed, directions=(Direction.Y,)).reg_y
        if reg_y != 0:
            return False, f"{name}: reg_y(R(I)) = {reg_y}"
    return True, f"{len(entries)} ideals"


def check_koszul_y(seed):
    """H.(y; R)_(*,j) vanishes for j = reg_y + m + 1, + 2"""
    entries = _corpus(Flavor.BISTABLE, seed + 4, 5, max_degree=(2, 2)) \
        + _corpus(Flavor.BINOMIAL, seed + 4, 5, max_degree=(1, 1))
    for entry in entries:
        reg_y = reg_via_betti(entry.ideal).reg_y
        m = entry.ideal.ring.m
        for j in (reg_y + m + 1, reg_y + m + 2):
            check = koszul_y_vanishing(entry.ideal, j)
            if not check.vanishes:
                return False, f"{entry.name}: H nonzero at j={j}: {check.nonzero}"
            if any(exact_sequence_defect(entry.ideal, a, j) for a in range(check.a_max + 1)):
                return False, f"{entry.name}: alternating sum nonzero at j={j}"
    return True, f"{len(entries)} ideals"


def check_ci_burch(seed):
    """m^2 has a linear Hilbert-Burch matrix: reg grows by 2 from j = 1; ci formula on (x1, x2) is 0"""
    fixtures = pinned_fixtures()
    report = hilbert_burch_analysis(fixtures['msquare'])
    if not (report.is_codim2_cm and report.linear_case and report.threshold == 1):
        return False, f"Hilbert-Burch report {report.to_json()}"
    rows = power_reg_table(fixtures['msquare'], 4).rows
    if any(rows[j + 1] != rows[j] + 2 for j in range(1, 4)):
        return False, f"rows {rows}"
    value = ci_reg_from_ideal(rees_ideal(fixtures['linear']).ideal).value
    return value == 0, f"ci formula on R((x1,x2)) = {value}"


def check_veronese(seed):
    """Veronese bounds decrease in (s, t) and vanish from (s*, t*) on"""
    entries = _corpus(Flavor.BISTABLE, seed + 5, 10, max_degree=(3, 3))
    tables = [taylor_betti(MonomialIdeal.of(entry.ideal)) for entry in entries]
    tables.append(taylor_betti(MonomialIdeal.of(pinned_fixtures()['principal'])))
    for table in tables:
        s_star, t_star = veronese_zero_thresholds(table)
        previous = None
        for step in range(1, max(s_star, t_star) + 3):
            bounds = veronese_bound(table, step, step)
            current = (bounds.bound_x, bounds.bound_y)
            if previous and (current[0] > previous[0] or current[1] > previous[1]):
                return False, f"bounds increase at step {step}"
            previous = current
        final = veronese_bound(table, s_star, t_star)
        if (final.bound_x, final.bound_y) != (0, 0):
            return False, f"bounds at (s*, t*) = {(final.bound_x, final.bound_y)}"
    principal = veronese_zero_thresholds(tables[-1])
    return principal == (1, 1), f"{len(tables)} tables, S/(x1y1) thresholds {principal}"


KERNEL_BOX = (2, 2)


def _random_polynomial(rng, ring, degrees):
    """Nonzero integer combination of all monomials of the given bidegrees"""
    poly_ring = ring.poly_ring()
    monomials = [mon for a, b in degrees for mon in monomials_of_bidegree(ring.n, ring.m, a, b)]
    while True:
        terms = {mon: int(c) for mon, c in zip(monomials, rng.integers(-5, 6, size=len(monomials))) if c}
        if terms:
            return poly_ring.from_dict(terms)


def check_kernel(seed, instances=100):
    """NF idempotence, S-pairs, colon soundness, boundary maps and Hilbert functions under bigin"""
    entries = _corpus(Flavor.GENERIC, seed + 6, instances, max_degree=(2, 1), generators=(1, 2))
    rng = np.random.default_rng(seed + 6)
    box = [(a, b) for a in range(KERNEL_BOX[0] + 1) for b in range(KERNEL_BOX[1] + 1)]
    for entry in entries:
        ideal = entry.ideal
        basis = ideal.groebner()
        p = _random_polynomial(rng, ideal.ring, box)
        nf = normal_form(p, basis)
        if normal_form(nf, basis) != nf or not contains(ideal, p - nf):
            return False, f"{entry.name}: normal form of {p} is not unique"
        if spoly_residues(basis):
            return False, f"{entry.name}: S-pair residues do not vanish"
        f = _random_polynomial(rng, ideal.ring, [(1, 1)])
        if any(not contains(ideal, g * f) for g in colon(ideal, f).gens):
            return False, f"{entry.name}: colon generator times f not in J"
        builder = StrandBuilder(ideal)
        variables = range(ideal.ring.nvars)
        for degree in box:
            if not builder.strand(degree, variables).boundary_squared_is_zero():
                return False, f"{entry.name}: boundary squared is not zero in {degree}"
        result = bigin(ideal, trials=2, seed=seed)
        if not is_strongly_bistable(result.ideal):
            return False, f"{entry.name}: bigin is not strongly bistable"
        gin_ideal = result.ideal.to_ideal()
        for degree in box:
            if hilbert_dimension(ideal, degree) != hilbert_dimension(gin_ideal, degree):
                return False, f"{entry.name}: Hilbert function differs at {degree}"
    return True, f"{len(entries)} instances, five properties each, box {KERNEL_BOX}"


PAPER_SUITE = (
    ('xbi end to end', check_xbi),
    ('reg three ways', check_yreg),
    ('bistable generator degrees', check_bistable_generators),
    ('m table bound and stability', check_m_table),
    ('powers linear from bigin onset', check_powers),
    ('d-sequences and reg zero', check_d_sequences),
    ('y-Koszul vanishing', check_koszul_y),
    ('ci formula and Hilbert-Burch', check_ci_burch),
    ('Veronese bounds', check_veronese),
    ('kernel properties', check_kernel),
)

SUITES = {'paper': PAPER_SUITE}


def run_suite(suite='paper', seed=0, progress=True):
    if suite not in SUITES:
        raise MathError(f"Unknown suite '{suite}'", suites=sorted(SUITES))
    results = []
    for name, check in tqdm(SUITES[suite], desc="Verifying", unit="check", disable=not progress):
        start = time.time()
        try:
            passed, detail = check(seed)
        except BiregkitError as e:
            passed, detail = False, f"{type(e).__name__}: {e.message}"
        elapsed = time.time() - start
        if not passed:
            tqdm.write(f"✗ {name}: {detail}")
        results.append(CheckResult(name, passed, detail, elapsed))
    return results


def summary_frame(results):
    return pd.DataFrame([{'check': r.name, 'passed': r.passed, 'seconds': round(r.elapsed, 1),
                          'detail': r.detail} for r in results],
                        columns=['check', 'passed', 'seconds', 'detail'])
