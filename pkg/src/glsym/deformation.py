"""One-parameter formal deformations f = F_0 + t F_1 + t^2 F_2 + ... of a left-symmetric algebra.

Series are truncated polynomials in the deformation parameter; every claim
is checked modulo t^(p+1).  Terms are degree-zero 2-cochains in
C^2(S, S) and equivalences are degree-zero 1-cochains in C^1(S, S).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import check_left_symmetric
from .cochains import Cochain, complex_for
from .cohomology import cohomology_at
from .errors import ValidationError
from .linalg import ExactMatrix, rank, solve, vec_iadd
from .scalar import ONE, ZERO, scalar

__all__ = [
    "DeformationSeries", "ExtensionResult", "EquivalenceVerdict", "NormalizationResult",
    "two_cochain", "one_cochain", "infinitesimal_space", "obstruction", "integrability_failure",
    "extend", "specialize", "first_order_equivalent", "verify_equivalence",
    "conjugate_series", "normalize_leading_term",
]


def two_cochain(A, values):
    """Degree-zero 2-cochain from ``{(i, j): {l: scalar}}``."""
    space = complex_for(A).space(2)
    return _degree_zero(Cochain.from_values(space, _scalars(values)))


def one_cochain(A, values):
    """Degree-zero 1-cochain from ``{j: {l: scalar}}``."""
    space = complex_for(A).space(1)
    return _degree_zero(Cochain.from_values(space, {(j,): v for j, v in _scalars(values).items()}))


def _scalars(values):
    return {k: {l: scalar(c) for l, c in v.items()} for k, v in values.items()}


def _degree_zero(f):
    zero = f.space.algebra.factor.group.zero()
    for c in f.coords:
        if f.space.col_degree[c] != zero:
            raise ValidationError("deformation cochains must have degree zero")
    return f


@dataclass
class DeformationSeries:
    base: object
    terms: list          # [F_1, ..., F_p] as Cochains in C^2(S, S)

    @property
    def order(self):
        return len(self.terms)

    def tables(self):
        """Bilinear tables [F_0, F_1, ...]; ``F_k[i][j]`` is a sparse vector."""
        A = self.base
        out = [[[A.mul(i, j) for j in range(A.dim)] for i in range(A.dim)]]
        for F in self.terms:
            out.append(_table(F))
        return out

    def leading_order(self):
        return next((k + 1 for k, F in enumerate(self.terms) if not F.is_zero()), None)


def _table(F):
    n = F.space.algebra.dim
    t = [[{} for _ in range(n)] for _ in range(n)]
    for (i, j), v in F.values().items():
        t[i][j] = v
    return t


def _bil(table, u, v):
    out = {}
    for i, a in u.items():
        row = table[i]
        for j, b in v.items():
            if row[j]:
                vec_iadd(out, row[j], a * b)
    return out


def _mu_value(A, tables, p, x, y, z):
    e = {x: ONE}, {y: ONE}, {z: ONE}
    c = A.eps(x, y)
    out = {}
    for r in range(1, p):
        Fr, Fs = tables[r], tables[p - r]
        vec_iadd(out, _bil(Fr, Fs[x][y], e[2]))
        vec_iadd(out, _bil(Fr, e[0], Fs[y][z]), -ONE)
        vec_iadd(out, _bil(Fr, Fs[y][x], e[2]), -c)
        vec_iadd(out, _bil(Fr, e[1], Fs[x][z]), c)
    return out


def _mu(A, tables, p):
    space = complex_for(A).space(3)
    values = {key: _mu_value(A, tables, p, *key) for key in space.keys}
    return Cochain.from_values(space, {k: v for k, v in values.items() if v})


def integrability_failure(series, upto=None):
    """First order k <= upto where d F_k != mu_k, or None."""
    A = series.base
    cx = complex_for(A)
    tables = series.tables()
    upto = series.order if upto is None else upto
    for k in range(1, upto + 1):
        F = series.terms[k - 1]
        dF = Cochain(cx.space(3), cx.d(2).apply(F.coords))
        if dF != _mu(A, tables, k):
            return k
    return None


def infinitesimal_space(A):
    """Degree-zero H^2(S, S) representatives, each checked to be a 2-cocycle."""
    res = cohomology_at(A, None, 2)
    reps = res.representatives_by_degree.get(A.factor.group.zero(), [])
    d2 = complex_for(A).d(2)
    for F in reps:
        if d2.apply(F.coords):
            raise AssertionError("infinitesimal deformation is not a cocycle")
    return reps


def obstruction(A, terms):
    """mu_p for the given lower terms [F_1, ..., F_(p-1)]."""
    series = DeformationSeries(A, list(terms))
    bad = integrability_failure(series)
    if bad is not None:
        raise ValidationError(f"integrability fails at order {bad}", where=bad)
    return _mu(A, series.tables(), series.order + 1)


def _zero_columns(space):
    zero = space.algebra.factor.group.zero()
    return [c for c in range(space.dim) if space.col_degree[c] == zero]


@dataclass
class ExtensionResult:
    ok: bool
    term: object = None          # F_p when ok
    mu: object = None
    certificate: dict = field(default_factory=dict)


def extend(A, terms):
    """Next term F_p solving d F_p = mu_p, or a certificate that [mu_p] != 0."""
    mu = obstruction(A, terms)
    cx = complex_for(A)
    space = cx.space(2)
    cols = _zero_columns(space)
    d = cx.d(2)
    block = ExactMatrix(d.nrows, len(cols), [d.columns[c] for c in cols])
    x = solve(block, mu.coords)
    p = len(terms) + 1
    if x is None:
        r = rank(block)
        r_aug = rank(block.hstack(ExactMatrix(d.nrows, 1, [dict(mu.coords)])))
        return ExtensionResult(False, None, mu, {"order": p, "rank_B3": r, "rank_augmented": r_aug})
    F = Cochain(space, {cols[k]: v for k, v in x.items()})
    if integrability_failure(DeformationSeries(A, list(terms) + [F])) is not None:
        raise AssertionError("extension does not satisfy integrability")
    return ExtensionResult(True, F, mu, {"order": p})


def specialize(A, terms, lam):
    """The algebra with products x.y + sum lam^k F_k(x, y), validated from scratch."""
    lam = scalar(lam)
    products = {ij: dict(v) for ij, v in A.table_items()}
    power = ONE
    for F in terms:
        power = power * lam
        for ij, v in F.values().items():
            target = products.setdefault(ij, {})
            vec_iadd(target, v, power)
    products = {ij: v for ij, v in products.items() if v}
    B = A.with_products(products, name=A.name)
    report = check_left_symmetric(B)
    if not report.passed:
        raise ValidationError(
            f"specialization at {lam} is not left-symmetric ({len(report.violations)} violations); "
            "the truncated series is not integrable there")
    return B


@dataclass
class EquivalenceVerdict:
    equivalent: bool
    phi: object = None           # phi_1 with d phi_1 = F - G
    difference: object = None    # F - G


def first_order_equivalent(A, F, G):
    diff = F - G
    cx = complex_for(A)
    cols = _zero_columns(cx.space(1))
    d = cx.d(1)
    block = ExactMatrix(d.nrows, len(cols), [d.columns[c] for c in cols])
    x = solve(block, diff.coords)
    if x is None:
        return EquivalenceVerdict(False, None, diff)
    return EquivalenceVerdict(True, Cochain(cx.space(1), {cols[k]: v for k, v in x.items()}), diff)


# -- series composition -------------------------------------------------------

def _linear(A, phi):
    """Matrix of a 1-cochain viewed as a linear map S -> S."""
    cols = [{} for _ in range(A.dim)]
    for (j,), v in phi.values().items():
        cols[j] = dict(v)
    return ExactMatrix(A.dim, A.dim, cols)


def _maps(A, phis, p):
    """[id, phi_1, ..., phi_p] padded with zeros."""
    out = [ExactMatrix.identity(A.dim)]
    for k in range(1, p + 1):
        out.append(_linear(A, phis[k - 1]) if k <= len(phis) else ExactMatrix.zeros(A.dim, A.dim))
    return out


def _inverse(maps, p):
    psi = [maps[0]]
    for k in range(1, p + 1):
        acc = ExactMatrix.zeros(maps[0].nrows, maps[0].ncols)
        for j in range(1, k + 1):
            acc = acc + maps[j] @ psi[k - j]
        psi.append(-acc)
    return psi


def _conjugate(A, tables, outer, inner, p):
    """Coefficients 1..p of outer(g(inner x, inner y)) as bilinear tables."""
    n = A.dim
    padded = tables + [None] * (p + 1 - len(tables))
    result = []
    for order in range(1, p + 1):
        t = [[{} for _ in range(n)] for _ in range(n)]
        for x in range(n):
            for y in range(n):
                acc = {}
                for a in range(order + 1):
                    for b in range(order + 1 - a):
                        G = padded[b]
                        if G is None:
                            continue
                        for c in range(order + 1 - a - b):
                            dd = order - a - b - c
                            u = inner[c].columns[x]
                            v = inner[dd].columns[y]
                            if not u or not v:
                                continue
                            w = _bil(G, u, v)
                            if w:
                                vec_iadd(acc, outer[a].apply(w))
                t[x][y] = acc
        result.append(t)
    return result


def _tables_equal(s, t):
    return all(s[i][j] == t[i][j] for i in range(len(s)) for j in range(len(s)))


def verify_equivalence(A, f, g, phis, p):
    """Check f(x, y) = Phi^-1 g(Phi x, Phi y) modulo t^(p+1), Phi = id + sum t^k phi_k."""
    ft = DeformationSeries(A, list(f.terms if isinstance(f, DeformationSeries) else f)).tables()
    gt = DeformationSeries(A, list(g.terms if isinstance(g, DeformationSeries) else g)).tables()
    maps = _maps(A, phis, p)
    coeffs = _conjugate(A, gt, _inverse(maps, p), maps, p)
    n = A.dim
    empty = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(1, p + 1):
        lhs = ft[k] if k < len(ft) else empty
        if not _tables_equal(lhs, coeffs[k - 1]):
            return False
    return True


def conjugate_series(A, series, phis, p=None):
    """The series g = Phi f(Phi^-1 x, Phi^-1 y), so that f = Phi^-1 g(Phi x, Phi y)."""
    p = series.order if p is None else p
    maps = _maps(A, phis, p)
    coeffs = _conjugate(A, series.tables(), maps, _inverse(maps, p), p)
    space = complex_for(A).space(2)
    terms = []
    for t in coeffs:
        values = {(i, j): t[i][j] for i in range(A.dim) for j in range(A.dim) if t[i][j]}
        terms.append(Cochain.from_values(space, values))
    return DeformationSeries(A, terms)


@dataclass
class NormalizationResult:
    series: DeformationSeries
    trivial: bool
    leading_order: int = None
    steps: list = field(default_factory=list)    # (order, phi) per trivialization step


def normalize_leading_term(A, series):
    """Remove coboundary leading terms until the first nonzero term is a non-trivial class."""
    p = series.order
    current = DeformationSeries(A, list(series.terms))
    steps = []
    while True:
        n = current.leading_order()
        if n is None:
            return NormalizationResult(current, True, None, steps)
        Fn = current.terms[n - 1]
        verdict = first_order_equivalent(A, Fn, Cochain(Fn.space))
        if not verdict.equivalent:
            return NormalizationResult(current, False, n, steps)
        phis = [Cochain(verdict.phi.space)] * (n - 1) + [verdict.phi]
        nxt = conjugate_series(A, current, phis, p)
        if not verify_equivalence(A, current, nxt, phis, p):
            raise AssertionError("trivialization step failed to verify")
        if not all(F.is_zero() for F in nxt.terms[:n]):
            raise AssertionError("trivialization step did not clear the leading term")
        steps.append((n, verdict.phi))
        current = nxt
