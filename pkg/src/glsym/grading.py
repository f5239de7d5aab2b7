"""Grading groups, degrees and commutation factors.

The grading group is a finite product of cyclic groups; a factor ``0`` is
an infinite cyclic group Z and ``m >= 2`` is Z/mZ.  A commutation factor is
stored only on generators, so biadditivity holds by construction and only
reciprocity and the order constraints need checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ValidationError
from .scalar import ONE, Scalar, scalar


@dataclass(frozen=True)
class GradingGroup:
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(m) for m in self.factors))
        for j, m in enumerate(self.factors):
            if m == 1 or m < 0:
                raise ValidationError(f"cyclic factor {j} has invalid order {m}", where=j)

    @property
    def rank(self):
        return len(self.factors)

    def degree(self, components):
        components = tuple(int(c) for c in components)
        if len(components) != self.rank:
            raise ValidationError(
                f"degree {list(components)} has length {len(components)}, expected {self.rank}")
        return tuple(c % m if m else c for c, m in zip(components, self.factors))

    def zero(self):
        return (0,) * self.rank

    def add(self, a, b):
        return tuple((x + y) % m if m else x + y for x, y, m in zip(a, b, self.factors))

    def sub(self, a, b):
        return tuple((x - y) % m if m else x - y for x, y, m in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % m if m else -x for x, m in zip(a, self.factors))

    def total(self, degrees):
        out = self.zero()
        for d in degrees:
            out = self.add(out, d)
        return out


class CommutationFactor:
    """A validated bicharacter eps on a grading group.

    Build instances with :func:`validate_factor`.
    """

    def __init__(self, group, table):
        self.group = group
        self.table = tuple(tuple(row) for row in table)
        self._cache = {}

    def __call__(self, a, b):
        key = (a, b)
        value = self._cache.get(key)
        if value is None:
            value = ONE
            for j, aj in enumerate(a):
                if not aj:
                    continue
                row = self.table[j]
                for l, bl in enumerate(b):
                    if bl:
                        value = value * row[l] ** (aj * bl)
            self._cache[key] = value
        return value

    def parity(self, a):
        """0 for eps(a, a) = 1, 1 for eps(a, a) = -1."""
        return 0 if self(a, a) == ONE else 1

    def is_symmetric(self):
        n = len(self.table)
        return all(self.table[j][l] == self.table[l][j] for j in range(n) for l in range(n))

    def __repr__(self):
        rows = [[str(x) for x in row] for row in self.table]
        return f"CommutationFactor(factors={list(self.group.factors)}, matrix={rows})"


def validate_factor(group, table):
    """Check reciprocity and order constraints and return a :class:`CommutationFactor`."""
    if not isinstance(group, GradingGroup):
        group = GradingGroup(tuple(group))
    n = group.rank
    rows = [list(row) for row in table]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValidationError(f"epsilon matrix must be {n}x{n}")
    rows = [[scalar(x) for x in row] for row in rows]
    for j in range(n):
        for l in range(n):
            if not rows[j][l]:
                raise ValidationError(f"epsilon({j},{l}) is zero", where=(j, l))
    for j in range(n):
        for l in range(j, n):
            if rows[j][l] * rows[l][j] != ONE:
                raise ValidationError(
                    f"reciprocity fails on generators ({j},{l}): "
                    f"{rows[j][l]} * {rows[l][j]} != 1", where=(j, l))
    for j, m in enumerate(group.factors):
        if not m:
            continue
        for l in range(n):
            for a, b in ((j, l), (l, j)):
                if rows[a][b] ** m != ONE:
                    raise ValidationError(
                        f"epsilon({a},{b}) = {rows[a][b]} has order not dividing {m}",
                        where=(a, b))
    return CommutationFactor(group, rows)


def epsilon(f, a, b):
    return f(tuple(a), tuple(b))


def z2_decomposition(f, degrees):
    """Split degrees into those with eps(a, a) = 1 and eps(a, a) = -1."""
    even, odd = [], []
    for d in degrees:
        (even if f.parity(tuple(d)) == 0 else odd).append(d)
    return even, odd


@lru_cache(maxsize=None)
def super_factor():
    """The Z/2 factor (-1)^(ab)."""
    return validate_factor(GradingGroup((2,)), [[Scalar(-1)]])


@lru_cache(maxsize=None)
def trivial_factor(rank=1):
    return validate_factor(GradingGroup((0,) * rank), [[ONE] * rank for _ in range(rank)])
