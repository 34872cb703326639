"""Exact ranks and kernels of sparse matrices over the coefficient field.

Rows are dicts mapping a column index to a nonzero field element.
"""

from sympy.polys.matrices import DomainMatrix


def _domain_matrix(rows, ncols, domain):
    dod = {i: dict(row) for i, row in enumerate(r for r in rows if r)}
    return DomainMatrix(dod, (len(dod), ncols), domain)


def rank(rows, ncols, domain):
    """Rank of the matrix whose rows are ``rows``"""
    rows = [r for r in rows if r]
    if not rows or ncols == 0:
        return 0
    return _domain_matrix(rows, ncols, domain).rank()


def kernel(rows, ncols, domain):
    """Basis of {v : row . v = 0 for every row}, as sparse dicts"""
    rows = [r for r in rows if r]
    if ncols == 0:
        return []
    if not rows:
        return [{j: domain.one} for j in range(ncols)]
    basis = _domain_matrix(rows, ncols, domain).nullspace().to_dod()
    return [vector for _, vector in sorted(basis.items()) if vector]


def determinant(matrix, domain):
    """Determinant of a dense square matrix given as nested lists"""
    size = len(matrix)
    if size == 0:
        return domain.one
    entries = [[domain.convert(c) for c in row] for row in matrix]
    return DomainMatrix(entries, (size, size), domain).det()


class Span:
    """Growing subspace of K^N with membership by rank comparison."""

    def __init__(self, domain):
        self.domain = domain
        self.rows = []
        self.columns = {}
        self._rank = 0

    def _encode(self, vector):
        row = {}
        for key, value in vector.items():
            if value:
                col = self.columns.setdefault(key, len(self.columns))
                row[col] = value
        return row

    def __len__(self):
        return self._rank

    def extend(self, vectors):
        """Add many vectors without reporting which ones were independent"""
        rows = [r for r in (self._encode(v) for v in vectors) if r]
        if rows:
            self.rows.extend(rows)
            self._rank = rank(self.rows, len(self.columns), self.domain)

    def add(self, vector):
        """Add ``vector`` (dict keyed by any hashable); return True if the span grew"""
        row = self._encode(vector)
        if not row:
            return False
        new_rank = rank(self.rows + [row], len(self.columns), self.domain)
        if new_rank > self._rank:
            self.rows.append(row)
            self._rank = new_rank
            return True
        return False

    def contains(self, vector):
        row = self._encode(vector)
        if not row:
            return True
        return rank(self.rows + [row], len(self.columns), self.domain) == self._rank
