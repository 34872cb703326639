"""
Bigraded Betti numbers and the regularities read off them.

Two independent routes: degreewise Koszul homology of S/J over K, and the
Taylor complex of a monomial ideal minimalized by cancelling unit entries.
"""

from dataclasses import dataclass, field
from ._compat import StrEnum
from itertools import combinations

import numpy as np
import pandas as pd

from .errors import MathError
from .groebner import initial_ideal, quotient_basis
from .linalg import kernel, rank
from .ring import Direction, lcm

TAYLOR_LIMIT = 20
LATTICE_LIMIT = 50000


class RegStatus(StrEnum):
    """Non-numeric answers of ``reg_from_betti``."""

    INCOMPLETE = 'incomplete'
    UNDEFINED = 'undefined'


@dataclass(frozen=True)
class BettiTable:
    """beta_{i,(a,b)} of S/J on a finite box of bidegrees."""

    entries: dict
    box: tuple
    complete: bool = True

    @classmethod
    def from_counts(cls, counts, box, complete=True):
        return cls({key: value for key, value in sorted(counts.items()) if value}, tuple(box), complete)

    def betti(self, i, degree):
        return self.entries.get((i, tuple(degree)), 0)

    @property
    def is_empty(self):
        return not self.entries

    def indices(self):
        return sorted({i for i, _ in self.entries})

    def total(self, i):
        return sum(beta for (k, _), beta in self.entries.items() if k == i)

    def to_frame(self):
        rows = [{'i': i, 'a': a, 'b': b, 'beta': beta}
                for (i, (a, b)), beta in sorted(self.entries.items())]
        return pd.DataFrame(rows, columns=['i', 'a', 'b', 'beta'])

    def to_json(self):
        return {
            'entries': [{'i': i, 'a': a, 'b': b, 'beta': beta}
                        for (i, (a, b)), beta in sorted(self.entries.items())],
            'box': list(self.box),
            'complete': self.complete,
        }

    @classmethod
    def from_json(cls, data):
        entries = {(e['i'], (e['a'], e['b'])): e['beta'] for e in data['entries']}
        return cls(entries, tuple(data['box']), data['complete'])


# Koszul strands

def _subset_degree(signature, subset):
    nx = sum(1 for k in subset if k < signature.n)
    return (nx, len(subset) - nx)


@dataclass
class KoszulStrand:
    """K.(V; S/J) in one bidegree, for a subset V of the variables.

    ``bases[i]`` lists the pairs (T, z) with |T| = i and z a standard
    monomial of bidegree ``degree - deg T``; ``rows[i]`` holds the image
    of each basis element of K_i as a sparse vector over ``bases[i-1]``.
    """

    degree: tuple
    variables: tuple
    bases: list
    rows: list
    domain: object
    _ranks: dict = field(default_factory=dict, repr=False)

    def dim(self, i):
        return len(self.bases[i]) if 0 <= i < len(self.bases) else 0

    def rank(self, i):
        """Rank of the differential K_i -> K_{i-1}"""
        if i <= 0 or i >= len(self.bases):
            return 0
        if i not in self._ranks:
            self._ranks[i] = rank(self.rows[i], self.dim(i - 1), self.domain)
        return self._ranks[i]

    def homology(self, i):
        return self.dim(i) - self.rank(i) - self.rank(i + 1)

    def cycles(self, i):
        """Basis of ker(K_i -> K_{i-1}) as sparse vectors over ``bases[i]``"""
        if i <= 0:
            return [{s: self.domain.one} for s in range(self.dim(i))] if i == 0 else []
        columns = {}
        for s, row in enumerate(self.rows[i]):
            for t, value in row.items():
                columns.setdefault(t, {})[s] = value
        return kernel(list(columns.values()), self.dim(i), self.domain)

    def boundary_squared_is_zero(self):
        for i in range(2, len(self.bases)):
            lower = self.rows[i - 1]
            for row in self.rows[i]:
                total = {}
                for t, value in row.items():
                    for u, inner in lower[t].items():
                        total[u] = total.get(u, self.domain.zero) + value * inner
                if any(total.values()):
                    return False
        return True


class StrandBuilder:
    """Shares normal forms of monomials between strands of one ideal."""

    def __init__(self, ideal):
        self.ideal = ideal
        self.signature = ideal.ring
        self.ring = ideal.ring.poly_ring()
        self.basis = list(ideal.groebner())
        self._standard = {}
        self._normal = {}

    def standard(self, degree):
        if degree not in self._standard:
            if degree[0] < 0 or degree[1] < 0:
                self._standard[degree] = ()
            else:
                self._standard[degree] = tuple(quotient_basis(self.ideal, degree))
        return self._standard[degree]

    def normal(self, monom):
        """NF of a monomial as {standard monomial: coefficient}"""
        if monom not in self._normal:
            p = self.ring.from_dict({monom: 1})
            if self.basis:
                p = p.rem(self.basis)
            self._normal[monom] = dict(p.items())
        return self._normal[monom]

    def strand(self, degree, variables):
        degree = tuple(degree)
        variables = tuple(sorted(variables))
        bases, indexes, rows = [], [], []
        for i in range(len(variables) + 1):
            basis = []
            for subset in combinations(variables, i):
                dx, dy = _subset_degree(self.signature, subset)
                for z in self.standard((degree[0] - dx, degree[1] - dy)):
                    basis.append((subset, z))
            bases.append(basis)
            indexes.append({element: k for k, element in enumerate(basis)})

        rows.append([])
        domain = self.ring.domain
        for i in range(1, len(bases)):
            level = []
            for subset, z in bases[i]:
                row = {}
                for k, var in enumerate(subset):
                    sign = domain.one if k % 2 == 0 else -domain.one
                    rest = subset[:k] + subset[k + 1:]
                    shifted = list(z)
                    shifted[var] += 1
                    for mono, c in self.normal(tuple(shifted)).items():
                        col = indexes[i - 1][(rest, mono)]
                        row[col] = row.get(col, domain.zero) + sign * c
                level.append({col: value for col, value in row.items() if value})
            rows.append(level)
        return KoszulStrand(degree, variables, bases, rows, domain)

    def multiply(self, vector, basis, form, target_index):
        """Image of sum c_s (T, z) under multiplication by a linear ``form``"""
        result = {}
        for s, c in vector.items():
            subset, z = basis[s]
            for var_monom, coeff in form.items():
                var = var_monom.index(1)
                shifted = list(z)
                shifted[var] += 1
                for mono, value in self.normal(tuple(shifted)).items():
                    col = target_index[(subset, mono)]
                    result[col] = result.get(col, self.ring.domain.zero) + c * coeff * value
        return {col: value for col, value in result.items() if value}


def koszul_strand(ideal, degree, variables=None):
    """The Koszul complex of S/J on ``variables`` (default all) in ``degree``"""
    variables = range(ideal.ring.nvars) if variables is None else variables
    return StrandBuilder(ideal).strand(degree, variables)


def koszul_homology_dim(ideal, degree, i, variables=None):
    return koszul_strand(ideal, degree, variables).homology(i)


# Betti tables

def _lcm_lattice(monomial_ideal, limit=LATTICE_LIMIT):
    """All lcms of subsets of G(M), or None past ``limit`` points"""
    points = {(0,) * monomial_ideal.ring.nvars}
    for g in monomial_ideal.gens:
        points |= {lcm(p, g) for p in points}
        if len(points) > limit:
            return None
    return points


def _multidegree_betti(monomial_ideal, alpha, domain):
    """beta_{i,alpha}(S/M) from the Koszul complex in the fine degree alpha"""
    support = [k for k, e in enumerate(alpha) if e]
    bases = []
    for i in range(len(support) + 1):
        level = []
        for subset in combinations(support, i):
            rest = list(alpha)
            for k in subset:
                rest[k] -= 1
            if not monomial_ideal.contains(tuple(rest)):
                level.append(subset)
        bases.append(level)
    index = [{subset: k for k, subset in enumerate(level)} for level in bases]

    ranks = [0]
    for i in range(1, len(bases)):
        rows = []
        for subset in bases[i]:
            row = {}
            for k in range(len(subset)):
                face = subset[:k] + subset[k + 1:]
                if face in index[i - 1]:
                    row[index[i - 1][face]] = domain.one if k % 2 == 0 else -domain.one
            rows.append(row)
        ranks.append(rank(rows, len(bases[i - 1]), domain))
    ranks.append(0)
    return {i: len(bases[i]) - ranks[i] - ranks[i + 1] for i in range(len(bases))}


def _in_box(degree, box):
    return box is None or (degree[0] <= box[0] and degree[1] <= box[1])


def koszul_betti(ideal, box=None):
    """Bigraded Betti numbers of S/J from Koszul homology.

    Betti numbers of S/J are bounded by those of S/in(J), which vanish
    outside the bidegrees of the lcm lattice of G(in(J)). Those bidegrees
    are the only ones evaluated, and the table is complete when ``box``
    covers all of them.
    """
    signature = ideal.ring
    if ideal.is_zero:
        return BettiTable({(0, (0, 0)): 1}, tuple(box or (0, 0)), True)

    leading = initial_ideal(ideal)
    lattice = _lcm_lattice(leading)
    if lattice is None:
        top = signature.bidegree_of(leading.lcm_all())
        candidates = {(a, b) for a in range(top[0] + 1) for b in range(top[1] + 1)}
    else:
        candidates = {signature.bidegree_of(p) for p in lattice}
    full_box = (max(a for a, _ in candidates), max(b for _, b in candidates))
    box = tuple(box) if box is not None else full_box
    complete = all(_in_box(degree, box) for degree in candidates)

    counts = {}
    if ideal.is_monomial and lattice is not None:
        domain = signature.domain
        for alpha in lattice:
            degree = signature.bidegree_of(alpha)
            if _in_box(degree, box):
                for i, beta in _multidegree_betti(leading, alpha, domain).items():
                    if beta:
                        counts[(i, degree)] = counts.get((i, degree), 0) + beta
    else:
        builder = StrandBuilder(ideal)
        for degree in sorted(candidates):
            if _in_box(degree, box):
                strand = builder.strand(degree, range(signature.nvars))
                for i in range(sum(degree) + 1):
                    beta = strand.homology(i)
                    if beta:
                        counts[(i, degree)] = beta
    return BettiTable.from_counts(counts, box, complete)


def _cancel_units(rows, domain, rng=None):
    """Cancel unit entries of a K-matrix pivot by pivot; returns the number of cancellations"""
    rows = [dict(r) for r in rows if r]
    order = list(range(len(rows)))
    if rng is not None:
        rng.shuffle(order)
    pivots = 0
    live = [rows[k] for k in order]
    while live:
        row = live.pop()
        if not row:
            continue
        columns = sorted(row)
        if rng is not None:
            col = columns[int(rng.integers(len(columns)))]
        else:
            col = columns[0]
        pivot = row[col]
        pivots += 1
        updated = []
        for other in live:
            factor = other.get(col)
            if factor:
                ratio = factor / pivot
                merged = dict(other)
                for c, value in row.items():
                    merged[c] = merged.get(c, domain.zero) - ratio * value
                other = {c: v for c, v in merged.items() if v}
            updated.append(other)
        live = updated
    return pivots


def taylor_betti(monomial_ideal, limit=TAYLOR_LIMIT, seed=None):
    """Minimal Betti table of S/M from the Taylor complex on G(M).

    Unit entries of the Taylor differentials are cancelled within each
    multidegree; ``seed`` shuffles the pivot order.
    """
    signature = monomial_ideal.ring
    gens = monomial_ideal.gens
    r = len(gens)
    if r > limit:
        raise MathError(f"Taylor complex on {r} generators exceeds the limit of {limit}",
                        generators=r, limit=limit)
    if r == 0:
        return BettiTable({(0, (0, 0)): 1}, (0, 0), True)

    domain = signature.domain
    rng = np.random.default_rng(seed) if seed is not None else None
    zero = (0,) * signature.nvars
    labels = {(): zero}
    for i in range(1, r + 1):
        for subset in combinations(range(r), i):
            labels[subset] = lcm(labels[subset[:-1]], gens[subset[-1]])

    by_degree = {}
    for subset, alpha in labels.items():
        by_degree.setdefault(alpha, {}).setdefault(len(subset), []).append(subset)

    counts = {}
    for alpha, levels in by_degree.items():
        index = {i: {subset: k for k, subset in enumerate(level)} for i, level in levels.items()}
        pivots = {}
        for i, level in levels.items():
            below = index.get(i - 1)
            if not below:
                pivots[i] = 0
                continue
            rows = []
            for subset in level:
                row = {}
                for k in range(len(subset)):
                    face = subset[:k] + subset[k + 1:]
                    if face in below:
                        row[below[face]] = domain.one if k % 2 == 0 else -domain.one
                rows.append(row)
            pivots[i] = _cancel_units(rows, domain, rng)
        degree = signature.bidegree_of(alpha)
        for i, level in levels.items():
            beta = len(level) - pivots.get(i, 0) - pivots.get(i + 1, 0)
            if beta:
                counts[(i, degree)] = counts.get((i, degree), 0) + beta
    box = signature.bidegree_of(monomial_ideal.lcm_all())
    return BettiTable.from_counts(counts, box, True)


# Regularity

def reg_from_betti(table, direction, ideal=False):
    """max(a - i) (direction x) or max(b - i) (direction y) over the table.

    With ``ideal`` the answer is for J instead of S/J: beta_0 is dropped and
    indices shift down by one.
    """
    axis = 0 if Direction(direction) is Direction.X else 1
    entries = [(i, degree) for (i, degree) in table.entries
               if not ideal or i >= 1]
    if not entries:
        return RegStatus.UNDEFINED
    shift = 1 if ideal else 0
    value = max(degree[axis] - (i - shift) for i, degree in entries)
    if not table.complete:
        edge = table.box[axis]
        if any(degree[axis] - (i - shift) == value and degree[axis] >= edge for i, degree in entries):
            return RegStatus.INCOMPLETE
    return value


def betti_witnesses(table, direction):
    """Entries achieving ``reg_from_betti``"""
    axis = 0 if Direction(direction) is Direction.X else 1
    value = reg_from_betti(table, direction)
    if isinstance(value, RegStatus):
        return []
    return [{'i': i, 'a': degree[0], 'b': degree[1]}
            for (i, degree) in sorted(table.entries) if degree[axis] - i == value]


def graded_regularity(ideal):
    """reg(I) for a nonzero homogeneous ideal I of S_x"""
    # module-level import would be circular: regularity reads Betti tables
    from .regularity import reg_via_s_values

    signature = ideal.ring
    if signature.m != 0:
        raise MathError("graded_regularity expects an ideal of S_x", m=signature.m)
    if ideal.is_zero:
        raise MathError("graded_regularity is not defined for the zero ideal")
    if not ideal.is_bigraded:
        raise MathError("graded_regularity needs homogeneous generators")
    report = reg_via_s_values(ideal, directions=(Direction.X,))
    return report.reg_x + 1
