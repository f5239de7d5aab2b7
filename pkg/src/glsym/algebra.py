"""Graded algebras given by structure constants.

An algebra is a homogeneous basis (name, degree) together with a sparse
multiplication table ``mult[i][j] = {l: coefficient}`` for ``e_i . e_j``.
Vectors throughout are sparse ``{index: Scalar}`` dicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import ConsistencyError, ValidationError
from .grading import CommutationFactor
from .linalg import ExactMatrix, Span, rank_nullspace, vec_add, vec_iadd
from .scalar import ONE, ZERO, scalar

__all__ = [
    "GradedAlgebra", "EpsilonLieAlgebra", "AxiomReport",
    "check_left_symmetric", "associated_lie", "gl_epsilon", "is_simple",
    "multiplication_algebra",
]


class _GradedTable:
    """Homogeneous basis plus a bilinear table on it."""

    def __init__(self, factor, basis, table):
        if not isinstance(factor, CommutationFactor):
            raise TypeError("factor must be a validated CommutationFactor")
        self.factor = factor
        group = factor.group
        names, degrees = [], []
        for k, (name, deg) in enumerate(basis):
            if not isinstance(name, str) or not name:
                raise ValidationError(f"basis element {k} has an empty name", where=k)
            names.append(name)
            degrees.append(group.degree(deg))
        if len(set(names)) != len(names):
            raise ValidationError("basis names must be unique")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.dim = len(names)
        self.index = {name: k for k, name in enumerate(names)}
        self.parities = tuple(factor.parity(d) for d in degrees)
        self._table = [[{} for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j), value in table.items():
            vec = {l: scalar(c) for l, c in value.items() if scalar(c)}
            if not vec:
                continue
            target = group.add(self.degrees[i], self.degrees[j])
            for l in vec:
                if self.degrees[l] != target:
                    raise ValidationError(
                        f"{self.names[i]}*{self.names[j]} has a component along {self.names[l]} "
                        f"of degree {list(self.degrees[l])}; grading requires degree {list(target)}",
                        where=(i, j))
            self._table[i][j] = vec

    def eps(self, i, j):
        """eps between the degrees of basis elements ``i`` and ``j``."""
        return self.factor(self.degrees[i], self.degrees[j])

    def _bilinear(self, u, v):
        out = {}
        for i, a in u.items():
            row = self._table[i]
            for j, b in v.items():
                t = row[j]
                if t:
                    vec_iadd(out, t, a * b)
        return out

    def table_items(self):
        for i in range(self.dim):
            for j in range(self.dim):
                if self._table[i][j]:
                    yield (i, j), self._table[i][j]

    def basis_vector(self, i):
        return {i: ONE}

    def format_vector(self, v):
        if not v:
            return "0"
        return " + ".join(f"({c})*{self.names[k]}" for k, c in sorted(v.items()))


class GradedAlgebra(_GradedTable):
    """A Gamma-graded algebra ``S`` with product ``x . y``."""

    def __init__(self, factor, basis, products, name=None):
        super().__init__(factor, basis, products)
        self.name = name

    def mul(self, i, j):
        return self._table[i][j]

    def product(self, u, v):
        return self._bilinear(u, v)

    def left_matrix(self, i):
        return ExactMatrix(self.dim, self.dim, [dict(self._table[i][j]) for j in range(self.dim)])

    def right_matrix(self, i):
        return ExactMatrix(self.dim, self.dim, [dict(self._table[j][i]) for j in range(self.dim)])

    def structure_constants(self):
        return {ij: dict(v) for ij, v in self.table_items()}

    def with_products(self, products, name=None):
        basis = list(zip(self.names, self.degrees))
        return GradedAlgebra(self.factor, basis, products, name=name)

    def associator(self, u, v, w):
        return vec_add(self.product(self.product(u, v), w), self.product(u, self.product(v, w)), -ONE)

    def __repr__(self):
        return f"GradedAlgebra(dim={self.dim}, names={list(self.names)})"


class EpsilonLieAlgebra(_GradedTable):
    """A Gamma-graded algebra with bracket ``[x, y]``, checked for eps-skew symmetry and eps-Jacobi."""

    def __init__(self, factor, basis, brackets, validate=True):
        super().__init__(factor, basis, brackets)
        if validate:
            bad = self.skew_violations() or self.jacobi_violations()
            if bad:
                raise ConsistencyError(f"eps-Lie axioms fail on basis elements {bad[0][0]}")

    def bracket(self, i, j):
        return self._table[i][j]

    def bracket_vectors(self, u, v):
        return self._bilinear(u, v)

    def skew_violations(self):
        bad = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                r = vec_add(self._table[i][j], self._table[j][i], self.eps(i, j))
                if r:
                    bad.append(((i, j), r))
        return bad

    def jacobi_violations(self):
        """Basis triples where eps(c,a)[x,[y,z]] + eps(a,b)[y,[z,x]] + eps(b,c)[z,[x,y]] != 0."""
        bad = []
        e = {i: {i: ONE} for i in range(self.dim)}
        for i, j, k in product(range(self.dim), repeat=3):
            r = {}
            vec_iadd(r, self._bilinear(e[i], self._table[j][k]), self.eps(k, i))
            vec_iadd(r, self._bilinear(e[j], self._table[k][i]), self.eps(i, j))
            vec_iadd(r, self._bilinear(e[k], self._table[i][j]), self.eps(j, k))
            if r:
                bad.append(((i, j, k), r))
        return bad

    def __repr__(self):
        return f"EpsilonLieAlgebra(dim={self.dim}, names={list(self.names)})"


@dataclass
class AxiomReport:
    """Outcome of an exhaustive axiom check over basis triples."""

    passed: bool
    violations: list = field(default_factory=list)  # (triple, residual vector, label)
    checked: int = 0

    def __bool__(self):
        return self.passed


def check_left_symmetric(A):
    """Check (x,y,z) = eps(a,b) (y,x,z) on every basis triple."""
    e = [{i: ONE} for i in range(A.dim)]
    assoc = {}

    def associator(i, j, k):
        key = (i, j, k)
        if key not in assoc:
            assoc[key] = A.associator(e[i], e[j], e[k])
        return assoc[key]

    violations = []
    for i, j, k in product(range(A.dim), repeat=3):
        r = vec_add(associator(i, j, k), associator(j, i, k), -A.eps(i, j))
        if r:
            violations.append(((i, j, k), r, "left-symmetry"))
    return AxiomReport(not violations, violations, A.dim ** 3)


def associated_lie(A):
    """The eps-commutator algebra [x,y] = x.y - eps(a,b) y.x."""
    brackets = {}
    for i in range(A.dim):
        for j in range(A.dim):
            b = vec_add(A.mul(i, j), A.mul(j, i), -A.eps(i, j))
            if b:
                brackets[(i, j)] = b
    return EpsilonLieAlgebra(A.factor, list(zip(A.names, A.degrees)), brackets)


def gl_epsilon(factor, degrees, names=None):
    """The endomorphism algebra gl(V, eps) of a graded space with homogeneous lines of the given degrees.

    Basis: matrix units ``E_p_q`` (1-based) of degree ``deg(p) - deg(q)``,
    multiplied by composition.
    """
    group = factor.group
    degrees = [group.degree(d) for d in degrees]
    if not degrees:
        raise ValidationError("gl_epsilon needs at least one line")
    n = len(degrees)
    basis, idx = [], {}
    for p in range(n):
        for q in range(n):
            idx[p, q] = len(basis)
            basis.append((f"E_{p + 1}_{q + 1}", group.sub(degrees[p], degrees[q])))
    products = {}
    for p, q, s in product(range(n), repeat=3):
        products[(idx[p, q], idx[q, s])] = {idx[p, s]: ONE}
    return GradedAlgebra(factor, basis, products, name=names or f"gl({n})")


# -- simplicity -----------------------------------------------------------------

def _flatten(m):
    return {(i, j): x for j, col in enumerate(m.columns) for i, x in col.items()}


def multiplication_algebra(A):
    """Basis of the unital associative algebra generated by all L_{e_i}, R_{e_i}.

    Returns a list of ``(word, matrix)`` pairs; ``word`` is a tuple of
    generator labels such as ``("L", 0)`` read left to right as a product.
    """
    gens = [(("L", i), A.left_matrix(i)) for i in range(A.dim)]
    gens += [(("R", i), A.right_matrix(i)) for i in range(A.dim)]
    gens = [(w, m) for w, m in gens if not m.is_zero()]
    identity = ExactMatrix.identity(A.dim)
    span = Span()
    basis = []
    span.add(_flatten(identity))
    basis.append(((), identity))
    frontier = [((), identity)]
    while frontier:
        new = []
        for word, m in frontier:
            for g, gm in gens:
                prod = gm @ m
                if span.add(_flatten(prod)):
                    item = ((g,) + word, prod)
                    basis.append(item)
                    new.append(item)
        frontier = new
    return basis


def _spin(vectors, ops, dim):
    """Smallest subspace containing ``vectors`` and invariant under ``ops``."""
    span = Span()
    basis = []
    queue = [v for v in vectors if v]
    while queue:
        v = queue.pop()
        if span.add(v):
            basis.append(v)
            queue.extend(op.apply(v) for op in ops)
        if len(span) == dim:
            break
    return basis


def _product_nonzero(A):
    return any(True for _ in A.table_items())


def is_simple(A):
    """Decide simplicity of ``A`` over C.

    ``A`` is simple iff ``A.A != 0`` and ``A`` is an irreducible module over
    its multiplication algebra.  Returns ``(bool, certificate)``; a negative
    answer carries an explicit proper ideal whenever one is defined over
    Q(i).
    """
    n = A.dim
    if not _product_nonzero(A):
        ideal = [{0: ONE}] if n > 1 else []
        return False, {"reason": "zero product", "ideal": ideal}
    malg = multiplication_algebra(A)
    ops = [m for _, m in malg]
    gens = [A.left_matrix(i) for i in range(n)] + [A.right_matrix(i) for i in range(n)]
    gens_t = [g.transpose() for g in gens]
    # Norton-style search: spin kernel vectors of singular elements.
    witness = None
    candidates = sorted(((w, m) for w, m in malg if w), key=lambda wm: (len(wm[0]), wm[0]))
    for word, m in candidates:
        r, kernel = rank_nullspace(m)
        if r == 0 or r == n:
            continue
        for v in kernel:
            sub = _spin([v], gens, n)
            if len(sub) < n:
                return False, {"reason": "invariant subspace", "ideal": sub,
                               "singular_element": word}
        _, kernel_t = rank_nullspace(m.transpose())
        for w in kernel_t:
            sub = _spin([w], gens_t, n)
            if len(sub) < n:
                # annihilator of an invariant subspace of the dual is an ideal
                mat = ExactMatrix(len(sub), n, [{} for _ in range(n)])
                for row, vec in enumerate(sub):
                    for j, x in vec.items():
                        mat.columns[j][row] = x
                _, ideal = rank_nullspace(mat)
                return False, {"reason": "invariant subspace (dual)", "ideal": ideal,
                               "singular_element": word}
        if witness is None and r == n - 1:
            witness = {"singular_element": word, "kernel": kernel[0],
                       "dual_kernel": kernel_t[0]}
    if len(ops) == n * n:
        cert = {"reason": "multiplication algebra is the full matrix algebra",
                "dimension": len(ops), "words": [w for w, _ in malg]}
        if witness is not None:
            cert["norton"] = witness
        return True, cert
    return False, {"reason": f"multiplication algebra has dimension {len(ops)} < {n * n}; "
                             "an ideal exists over C but not over Q(i)",
                   "ideal": None, "dimension": len(ops)}
