"""Sparse exact matrices over Q(i) and fraction-free elimination.

Matrices are stored column-major as one ``{row: Scalar}`` dict per column;
vectors are ``{index: Scalar}`` dicts.  Rank and echelon forms come from a
Bareiss elimination on integer (or Gaussian integer) rows obtained by
clearing denominators row by row, followed by an exact back substitution
that produces the unique reduced row echelon form.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .scalar import ONE, ZERO, Scalar

__all__ = ["ExactMatrix", "rank_nullspace", "rref", "solve", "rank", "Span", "vec_add", "vec_scale"]


def vec_add(u, v, c=ONE):
    """Return ``u + c*v`` as a new sparse vector."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        y = c * x if y is None else y + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def vec_scale(v, c):
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_iadd(out, v, c=ONE):
    for k, x in v.items():
        y = out.get(k)
        y = c * x if y is None else y + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)


class ExactMatrix:
    """A sparse matrix with optional row and column labels."""

    __slots__ = ("nrows", "ncols", "columns", "row_labels", "col_labels")

    def __init__(self, nrows, ncols, columns=None, row_labels=None, col_labels=None):
        self.nrows = nrows
        self.ncols = ncols
        if columns is None:
            columns = [{} for _ in range(ncols)]
        self.columns = columns
        self.row_labels = row_labels
        self.col_labels = col_labels

    @classmethod
    def from_rows(cls, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        m = cls(len(rows), ncols)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                if x:
                    m.columns[j][i] = x if type(x) is Scalar else Scalar(x)
        return m

    @classmethod
    def from_columns(cls, nrows, columns):
        return cls(nrows, len(columns), [{k: v for k, v in c.items() if v} for c in columns])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{j: ONE} for j in range(n)])

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(nrows, ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.columns[j].get(i, ZERO)

    def rows(self):
        out = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, x in col.items():
                out[i][j] = x
        return out

    def to_dense(self):
        dense = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, x in col.items():
                dense[i][j] = x
        return dense

    def transpose(self):
        return ExactMatrix(self.ncols, self.nrows, self.rows(), self.col_labels, self.row_labels)

    def nnz(self):
        return sum(len(c) for c in self.columns)

    def is_zero(self):
        return not any(self.columns)

    def apply(self, v):
        out = {}
        for j, c in v.items():
            if c:
                vec_iadd(out, self.columns[j], c)
        return out

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return ExactMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.columns],
                           self.row_labels, other.col_labels)

    def __add__(self, other):
        self._check_same(other)
        return ExactMatrix(self.nrows, self.ncols,
                           [vec_add(a, b) for a, b in zip(self.columns, other.columns)],
                           self.row_labels, self.col_labels)

    def __sub__(self, other):
        self._check_same(other)
        return ExactMatrix(self.nrows, self.ncols,
                           [vec_add(a, b, -ONE) for a, b in zip(self.columns, other.columns)],
                           self.row_labels, self.col_labels)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c):
        return ExactMatrix(self.nrows, self.ncols, [vec_scale(col, c) for col in self.columns],
                           self.row_labels, self.col_labels)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and (self - other).is_zero()

    __hash__ = None

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def select_columns(self, cols):
        labels = [self.col_labels[j] for j in cols] if self.col_labels else None
        return ExactMatrix(self.nrows, len(cols), [self.columns[j] for j in cols],
                           self.row_labels, labels)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return ExactMatrix(self.nrows, self.ncols + other.ncols, self.columns + other.columns)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


# -- fraction-free elimination ------------------------------------------------

def _integer_rows(rows, ncols):
    """Scale each sparse Scalar row to Gaussian integers.

    Returns ``(real, data)`` where ``data`` holds dense int rows (real case)
    or dense ``(re, im)`` rows.
    """
    real = all(not x.im for row in rows for x in row.values())
    out = []
    for row in rows:
        den = 1
        for x in row.values():
            den = lcm(den, x.re.denominator, x.im.denominator)
        if real:
            dense = [0] * ncols
            for j, x in row.items():
                dense[j] = x.re.numerator * (den // x.re.denominator)
        else:
            dense = [(0, 0)] * ncols
            for j, x in row.items():
                dense[j] = (x.re.numerator * (den // x.re.denominator),
                            x.im.numerator * (den // x.im.denominator))
        out.append(dense)
    return real, out


def _bareiss_int(rows, ncols):
    nrows = len(rows)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[c]
        tail = prow[c:]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            if a:
                row[c:] = [(pv * x - a * y) // prev for x, y in zip(row[c:], tail)]
            elif pv != prev:
                row[c:] = [pv * x // prev for x in row[c:]]
        prev = pv
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gdiv(a, b):
    n = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    return (re // n, im // n)


def _bareiss_gauss(rows, ncols):
    nrows = len(rows)
    prev = (1, 0)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != (0, 0)), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[c]
        tail = prow[c:]
        for i in range(r + 1, nrows):
            row = rows[i]
            a = row[c]
            new = []
            for x, y in zip(row[c:], tail):
                px = _gmul(pv, x)
                ay = _gmul(a, y)
                new.append(_gdiv((px[0] - ay[0], px[1] - ay[1]), prev))
            row[c:] = new
        prev = pv
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _echelon(m):
    """Fraction-free row echelon form of ``m``: (pivot rows as Scalar lists, pivots)."""
    rows = [row for row in m.rows() if row]
    if not rows:
        return [], []
    real, data = _integer_rows(rows, m.ncols)
    if real:
        ech, pivots = _bareiss_int(data, m.ncols)
        return [[Scalar(x) for x in row] for row in ech], pivots
    ech, pivots = _bareiss_gauss(data, m.ncols)
    return [[Scalar(re, im) for re, im in row] for row in ech], pivots


def rref(m):
    """Reduced row echelon form: (list of sparse pivot rows, pivot columns)."""
    ech, pivots = _echelon(m)
    rows = []
    for k, row in enumerate(ech):
        inv = row[pivots[k]].inverse()
        rows.append({j: x * inv for j, x in enumerate(row) if x})
    for k in range(len(rows) - 1, -1, -1):
        pc = pivots[k]
        for k2 in range(k):
            c = rows[k2].get(pc)
            if c:
                rows[k2] = vec_add(rows[k2], rows[k], -c)
    return rows, pivots


def rank(m):
    return len(_echelon(m)[1])


def rank_nullspace(m):
    """Exact rank and the nullspace basis read off the reduced echelon form.

    The basis vector for free column ``f`` has a 1 in position ``f`` and
    minus the reduced entries at the pivot positions, so the basis is unique.
    """
    rows, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = {f: ONE}
        for k, pc in enumerate(pivots):
            c = rows[k].get(f)
            if c:
                v[pc] = -c
        basis.append(v)
    return len(pivots), basis


def solve(m, b):
    """Solve ``m x = b`` exactly.

    Returns the solution with every free variable set to zero, or ``None``
    when the system is inconsistent.
    """
    aug = ExactMatrix(m.nrows, m.ncols + 1, m.columns + [dict(b)])
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = {}
    for k, pc in enumerate(pivots):
        c = rows[k].get(m.ncols)
        if c:
            x[pc] = c
    return x


class Span:
    """Incrementally reduced spanning set, used for greedy basis extension."""

    def __init__(self, vectors=()):
        self._rows = []  # (pivot, normalized vector)
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self._rows)

    def reduce(self, v):
        v = dict(v)
        for pivot, row in self._rows:
            c = v.get(pivot)
            if c:
                v = vec_add(v, row, -c)
        return v

    def contains(self, v):
        return not self.reduce(v)

    def add(self, v):
        """Add ``v``; return True when it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        pivot = min(r)
        inv = r[pivot].inverse()
        r = {k: x * inv for k, x in r.items()}
        self._rows = [(p, vec_add(row, r, -row[pivot]) if row.get(pivot) else row)
                      for p, row in self._rows]
        self._rows.append((pivot, r))
        return True
