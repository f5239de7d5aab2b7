"""Bimodules over a generalized left-symmetric algebra and their constructions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import AxiomReport
from .errors import ConsistencyError, ValidationError
from .linalg import ExactMatrix, vec_add, vec_iadd
from .scalar import ONE, scalar

__all__ = [
    "Bimodule", "LieModule", "BimoduleFlags",
    "regular_bimodule", "zero_bimodule", "check_bimodule", "classify",
    "hom_bimodule", "tensor_bimodule", "lie_module_of", "check_lie_module",
]


class _ModuleBase:
    def _init_basis(self, group, basis):
        names, degrees = [], []
        for k, (name, deg) in enumerate(basis):
            if not isinstance(name, str) or not name:
                raise ValidationError(f"module basis element {k} has an empty name", where=k)
            names.append(name)
            degrees.append(group.degree(deg))
        if len(set(names)) != len(names):
            raise ValidationError("module basis names must be unique")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.dim = len(names)
        self.index = {name: k for k, name in enumerate(names)}

    def _action_table(self, entries, rows, cols, degree_of, label):
        group = self.algebra.factor.group
        table = [[{} for _ in range(cols)] for _ in range(rows)]
        for (a, b), value in entries.items():
            vec = {l: scalar(c) for l, c in value.items() if scalar(c)}
            if not vec:
                continue
            target = degree_of(a, b)
            for l in vec:
                if self.degrees[l] != target:
                    raise ValidationError(
                        f"{label} action {a},{b} has a component of degree {list(self.degrees[l])}, "
                        f"expected {list(target)}", where=(a, b))
            table[a][b] = vec
        return table


class Bimodule(_ModuleBase):
    """A graded space ``M`` with left action ``x . m`` and right action ``m . x``.

    ``left[(i, j)]`` is the vector ``e_i . m_j``; ``right[(j, i)]`` is
    ``m_j . e_i``.
    """

    def __init__(self, algebra, basis, left=None, right=None, name=None):
        self.algebra = algebra
        self.name = name
        group = algebra.factor.group
        self._init_basis(group, basis)
        sdeg, mdeg = algebra.degrees, self.degrees
        self._left = self._action_table(left or {}, algebra.dim, self.dim,
                                        lambda i, j: group.add(sdeg[i], mdeg[j]), "left")
        self._right = self._action_table(right or {}, self.dim, algebra.dim,
                                         lambda j, i: group.add(mdeg[j], sdeg[i]), "right")

    def left(self, i, j):
        return self._left[i][j]

    def right(self, j, i):
        return self._right[j][i]

    def act_left(self, x, m):
        out = {}
        for i, a in x.items():
            row = self._left[i]
            for j, b in m.items():
                if row[j]:
                    vec_iadd(out, row[j], a * b)
        return out

    def act_right(self, m, x):
        out = {}
        for j, b in m.items():
            row = self._right[j]
            for i, a in x.items():
                if row[i]:
                    vec_iadd(out, row[i], a * b)
        return out

    def left_matrix(self, i):
        return ExactMatrix(self.dim, self.dim, [dict(self._left[i][j]) for j in range(self.dim)])

    def right_matrix(self, i):
        return ExactMatrix(self.dim, self.dim, [dict(self._right[j][i]) for j in range(self.dim)])

    def left_items(self):
        for i in range(self.algebra.dim):
            for j in range(self.dim):
                if self._left[i][j]:
                    yield (i, j), self._left[i][j]

    def right_items(self):
        for j in range(self.dim):
            for i in range(self.algebra.dim):
                if self._right[j][i]:
                    yield (j, i), self._right[j][i]

    def __repr__(self):
        return f"Bimodule(dim={self.dim}, name={self.name!r})"


class LieModule(_ModuleBase):
    """A left module over an eps-Lie algebra: ``action[(i, j)] = [e_i, m_j]``."""

    def __init__(self, algebra, basis, action=None, name=None):
        self.algebra = algebra
        self.name = name
        group = algebra.factor.group
        self._init_basis(group, basis)
        sdeg, mdeg = algebra.degrees, self.degrees
        self._act = self._action_table(action or {}, algebra.dim, self.dim,
                                       lambda i, j: group.add(sdeg[i], mdeg[j]), "Lie")

    def left(self, i, j):
        return self._act[i][j]

    def right(self, j, i):
        return {}

    def act(self, x, m):
        out = {}
        for i, a in x.items():
            row = self._act[i]
            for j, b in m.items():
                if row[j]:
                    vec_iadd(out, row[j], a * b)
        return out

    def __repr__(self):
        return f"LieModule(dim={self.dim}, name={self.name!r})"


def regular_bimodule(A):
    left = {ij: v for ij, v in A.table_items()}
    right = {(j, i): v for (j, i), v in A.table_items()}
    return Bimodule(A, list(zip(A.names, A.degrees)), left, right, name="regular")


def zero_bimodule(A, basis):
    return Bimodule(A, basis, name="zero")


def check_bimodule(M):
    """Check both bimodule identities on every (basis, basis, basis) triple."""
    A = M.algebra
    e = [{i: ONE} for i in range(A.dim)]
    violations = []
    for i, j, m in product(range(A.dim), range(A.dim), range(M.dim)):
        em = {m: ONE}
        eps_ij = A.eps(i, j)
        # (x.y).m - x.(y.m) = eps(a,b) ((y.x).m - y.(x.m))
        r = M.act_left(A.mul(i, j), em)
        vec_iadd(r, M.act_left(e[i], M.left(j, m)), -ONE)
        vec_iadd(r, M.act_left(A.mul(j, i), em), -eps_ij)
        vec_iadd(r, M.act_left(e[j], M.left(i, m)), eps_ij)
        if r:
            violations.append(((i, j, m), r, "left"))
    for i, m, j in product(range(A.dim), range(M.dim), range(A.dim)):
        em = {m: ONE}
        eps_im = A.factor(A.degrees[i], M.degrees[m])
        # (x.m).y - x.(m.y) = eps(a,c) ((m.x).y - m.(x.y))
        r = M.act_right(M.left(i, m), e[j])
        vec_iadd(r, M.act_left(e[i], M.right(m, j)), -ONE)
        vec_iadd(r, M.act_right(M.right(m, i), e[j]), -eps_im)
        vec_iadd(r, M.act_right(em, A.mul(i, j)), eps_im)
        if r:
            violations.append(((i, m, j), r, "mixed"))
    return AxiomReport(not violations, violations, 2 * A.dim * A.dim * M.dim)


@dataclass(frozen=True)
class BimoduleFlags:
    antisymmetric: bool
    special: bool


def classify(M):
    A = M.algebra
    antisymmetric = not any(True for _ in M.right_items())
    special = True
    for i, j, m in product(range(A.dim), range(A.dim), range(M.dim)):
        r = vec_add(M.act_left(A.mul(i, j), {m: ONE}), M.act_left({i: ONE}, M.left(j, m)), -ONE)
        if r:
            special = False
            break
    return BimoduleFlags(antisymmetric, special)


def hom_bimodule(M):
    """C^1(S, M) = Hom(S, M) with the antisymmetric left action

    (x.f)(y) = x.f(y) - eps(a,g) f(x.y) + eps(a,g) f(x).y,   f of degree g.

    Basis element ``(j, l)`` (index ``j*dim M + l``) sends ``e_j`` to
    ``m_l``; its degree is ``deg m_l - deg e_j``.
    """
    A = M.algebra
    group = A.factor.group
    dm = M.dim
    basis = []
    for j in range(A.dim):
        for l in range(dm):
            basis.append((f"{A.names[j]}->{M.names[l]}", group.sub(M.degrees[l], A.degrees[j])))
    left = {}
    for x in range(A.dim):
        for j in range(A.dim):
            for l in range(dm):
                f_idx = j * dm + l
                gamma = basis[f_idx][1]
                c = A.factor(A.degrees[x], gamma)
                out = {}
                # x . f(y): nonzero only at y = e_j
                for l2, a in M.left(x, l).items():
                    out[j * dm + l2] = out.get(j * dm + l2, 0) + a
                # -eps f(x.y): f(x.e_y) = coefficient of e_j in x.e_y times m_l
                for y in range(A.dim):
                    a = A.mul(x, y).get(j)
                    if a:
                        k = y * dm + l
                        out[k] = out.get(k, 0) - c * a
                # +eps f(x).y: nonzero only when x == j
                if x == j:
                    for y in range(A.dim):
                        for l2, a in M.right(l, y).items():
                            k = y * dm + l2
                            out[k] = out.get(k, 0) + c * a
                out = {k: scalar(v) for k, v in out.items() if v}
                if out:
                    left[(x, f_idx)] = out
    return Bimodule(A, basis, left, {}, name=f"Hom(S,{M.name or 'M'})")


def tensor_bimodule(M, N):
    """M (x) N with

    x.(m(x)n) = (x.m - eps(a,b) m.x)(x)n + eps(a,b) m(x)(x.n),   (m(x)n).x = m(x)(n.x),

    where ``b`` is the degree of ``m``.  Basis pair ``(j, l)`` has index
    ``j*dim N + l``.
    """
    if M.algebra is not N.algebra:
        raise ValidationError("tensor product needs bimodules over the same algebra")
    A = M.algebra
    group = A.factor.group
    dn = N.dim
    basis = []
    for j in range(M.dim):
        for l in range(dn):
            basis.append((f"{M.names[j]}*{N.names[l]}", group.add(M.degrees[j], N.degrees[l])))
    left, right = {}, {}
    for x in range(A.dim):
        for j in range(M.dim):
            c = A.factor(A.degrees[x], M.degrees[j])
            for l in range(dn):
                out = {}
                for j2, a in M.left(x, j).items():
                    vec_iadd(out, {j2 * dn + l: a})
                for j2, a in M.right(j, x).items():
                    vec_iadd(out, {j2 * dn + l: a}, -c)
                for l2, a in N.left(x, l).items():
                    vec_iadd(out, {j * dn + l2: a}, c)
                if out:
                    left[(x, j * dn + l)] = out
                out = {j * dn + l2: a for l2, a in N.right(l, x).items()}
                if out:
                    right[(j * dn + l, x)] = out
    return Bimodule(A, basis, left, right, name=f"{M.name or 'M'}*{N.name or 'N'}")


def lie_module_of(M, lie=None):
    """The eps-Lie module over g_S with [x, m] = x.m - eps(a, b) m.x (a = deg x, b = deg m).

    The result is checked against [[x,y],m] = [x,[y,m]] - eps(a,b)[y,[x,m]].
    """
    from .algebra import associated_lie

    A = M.algebra
    g = lie if lie is not None else associated_lie(A)
    action = {}
    for i in range(A.dim):
        for j in range(M.dim):
            v = vec_add(M.left(i, j), M.right(j, i), -A.factor(A.degrees[i], M.degrees[j]))
            if v:
                action[(i, j)] = v
    L = LieModule(g, list(zip(M.names, M.degrees)), action, name=M.name)
    report = check_lie_module(L)
    if not report.passed:
        raise ConsistencyError(f"Lie module axiom fails at {report.violations[0][0]}")
    return L


def check_lie_module(L):
    g = L.algebra
    violations = []
    for i, j, m in product(range(g.dim), range(g.dim), range(L.dim)):
        em = {m: ONE}
        r = L.act(g.bracket(i, j), em)
        vec_iadd(r, L.act({i: ONE}, L.left(j, m)), -ONE)
        vec_iadd(r, L.act({j: ONE}, L.left(i, m)), g.eps(i, j))
        if r:
            violations.append(((i, j, m), r, "lie-module"))
    return AxiomReport(not violations, violations, g.dim * g.dim * L.dim)
