"""Cochain spaces, face maps, coboundaries and the two Lie-theoretic actions.

A cochain of arity ``n`` is a multilinear map ``S x ... x S -> M`` whose
first ``wedge`` arguments are eps-alternating: swapping adjacent arguments
of degrees ``a, b`` multiplies the value by ``-eps(a, b)``.  Three kinds of
space are used:

* left-symmetric cochains ``C^n(S, M)``: ``wedge = n - 1``;
* tensor cochains ``Hom(S^(x)n, M)``: ``wedge = 0``, where individual face
  maps live (a single face map does not preserve eps-alternation);
* Lie cochains ``C^n(g, N)``: ``wedge = n``.

A basis element is an elementary cochain ``(key, m)`` taking the value
``m_m`` on the canonical argument word ``key`` and zero on the other
canonical words.  Operators are assembled as :class:`ExactMatrix` by
evaluating their defining formula once per output word, with the input
cochain left symbolic.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product

from .algebra import associated_lie
from .bimodule import hom_bimodule, lie_module_of, regular_bimodule
from .errors import ValidationError
from .linalg import ExactMatrix, rank_nullspace, solve
from .scalar import MINUS_ONE, ONE, ZERO

__all__ = [
    "normalize_wedge", "CochainSpace", "C0Space", "Cochain",
    "LeftSymmetricComplex", "LieComplex", "complex_for", "lie_complex_for", "psi_matrix",
    "cochain_space_basis", "evaluate_cochain", "face_map", "coboundary",
    "rho_action", "ce_coboundary", "xi_action", "psi", "psi_inv",
]


def normalize_wedge(algebra, word):
    """Bring an argument word to canonical ascending order.

    Returns ``(sign, canonical_tuple)``, or ``None`` when the monomial is
    zero (an index of even type repeats).
    """
    w = list(word)
    degrees = algebra.degrees
    eps = algebra.factor
    sign = ONE
    for a in range(1, len(w)):
        b = a
        while b > 0 and w[b - 1] > w[b]:
            sign = sign * -eps(degrees[w[b - 1]], degrees[w[b]])
            w[b - 1], w[b] = w[b], w[b - 1]
            b -= 1
    parities = algebra.parities
    for a in range(1, len(w)):
        if w[a] == w[a - 1] and parities[w[a]] == 0:
            return None
    return sign, tuple(w)


def canonical_monomials(algebra, length):
    return [m for m in combinations_with_replacement(range(algebra.dim), length)
            if all(not (m[k] == m[k - 1] and algebra.parities[m[k]] == 0)
                   for k in range(1, length))]


class CochainSpace:
    """Basis of multilinear maps of the given arity with ``wedge`` leading alternating slots."""

    def __init__(self, algebra, module, arity, wedge):
        if not 0 <= wedge <= arity:
            raise ValueError("wedge must lie between 0 and the arity")
        self.algebra = algebra
        self.module = module
        self.arity = arity
        self.wedge = wedge
        monos = canonical_monomials(algebra, wedge)
        tails = list(product(range(algebra.dim), repeat=arity - wedge))
        self.keys = [m + t for m in monos for t in tails]
        self.key_index = {k: i for i, k in enumerate(self.keys)}
        dm = module.dim
        self.dim = len(self.keys) * dm
        group = algebra.factor.group
        self.key_degrees = [group.total(algebra.degrees[a] for a in k) for k in self.keys]
        self.col_degree = [group.sub(module.degrees[c % dm], self.key_degrees[c // dm])
                           for c in range(self.dim)]
        self._lookup = {}

    def lookup(self, word):
        """(sign, key index) of an argument word, or None when it vanishes."""
        hit = self._lookup.get(word, False)
        if hit is not False:
            return hit
        if self.wedge > 1:
            norm = normalize_wedge(self.algebra, word[:self.wedge])
            if norm is None:
                hit = None
            else:
                sign, head = norm
                hit = (sign, self.key_index[head + word[self.wedge:]])
        else:
            hit = (ONE, self.key_index[word])
        self._lookup[word] = hit
        return hit

    def col(self, key, m):
        return self.key_index[tuple(key)] * self.module.dim + m

    def label(self, col):
        """(argument names, module element name) of a basis column."""
        dm = self.module.dim
        key = self.keys[col // dm]
        return tuple(self.algebra.names[a] for a in key), self.module.names[col % dm]

    def degrees(self):
        return sorted(set(self.col_degree))

    def columns_of_degree(self, degree):
        return [c for c, d in enumerate(self.col_degree) if d == degree]

    def __repr__(self):
        return f"CochainSpace(arity={self.arity}, wedge={self.wedge}, dim={self.dim})"


class C0Space:
    """C^0(S, M) = {m | (ab)m = a(bm)} with a homogeneous basis."""

    arity = 0
    wedge = 0

    def __init__(self, algebra, module):
        self.algebra = algebra
        self.module = module
        A, M = algebra, module
        vectors, degrees = [], []
        for deg in sorted(set(M.degrees)):
            cols = [m for m in range(M.dim) if M.degrees[m] == deg]
            # one block of equations per ordered pair (a, b)
            eqs = []
            for a in range(A.dim):
                for b in range(A.dim):
                    block = []
                    for m in cols:
                        em = {m: ONE}
                        v = M.act_left(A.mul(a, b), em)
                        w = M.act_left({a: ONE}, M.left(b, m))
                        for k, x in w.items():
                            v[k] = v.get(k, ZERO) - x
                        block.append({k: x for k, x in v.items() if x})
                    eqs.append(block)
            columns = [{} for _ in cols]
            for r, block in enumerate(eqs):
                for c, v in enumerate(block):
                    for k, x in v.items():
                        columns[c][r * M.dim + k] = x
            mat = ExactMatrix(len(eqs) * M.dim, len(cols), columns)
            _, null = rank_nullspace(mat)
            for v in null:
                vectors.append({cols[c]: x for c, x in v.items()})
                degrees.append(deg)
        self.vectors = vectors
        self.col_degree = degrees
        self.dim = len(vectors)

    def to_module(self, coords):
        out = {}
        for c, a in coords.items():
            for k, x in self.vectors[c].items():
                y = out.get(k, ZERO) + a * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
        return out

    def from_module(self, m):
        mat = ExactMatrix(self.module.dim, self.dim, [dict(v) for v in self.vectors])
        coords = solve(mat, m)
        if coords is None:
            raise ValidationError("module element does not lie in C^0(S, M)")
        return coords

    def degrees(self):
        return sorted(set(self.col_degree))

    def columns_of_degree(self, degree):
        return [c for c, d in enumerate(self.col_degree) if d == degree]

    def label(self, col):
        return (), self.vectors[col]

    def __repr__(self):
        return f"C0Space(dim={self.dim})"


class Cochain:
    """An element of a cochain space, stored as coordinates in its basis."""

    def __init__(self, space, coords=None):
        self.space = space
        self.coords = {k: v for k, v in (coords or {}).items() if v}

    @property
    def arity(self):
        return self.space.arity

    @classmethod
    def from_values(cls, space, values):
        """Build from ``{argument word: module vector}`` on canonical words."""
        coords = {}
        dm = space.module.dim
        for word, vec in values.items():
            hit = space.lookup(tuple(word))
            if hit is None:
                if any(vec.values()):
                    raise ValidationError(f"word {word} is zero in the exterior power")
                continue
            sign, k = hit
            if sign != ONE and sign != MINUS_ONE:
                raise ValidationError(f"word {word} is not canonical")
            for m, x in vec.items():
                c = k * dm + m
                coords[c] = coords.get(c, ZERO) + sign * x
        return cls(space, coords)

    def evaluate(self, args):
        """Value on a word of basis indices (any order)."""
        if isinstance(self.space, C0Space):
            return self.space.to_module(self.coords)
        args = tuple(args)
        if len(args) != self.space.arity:
            raise ValueError(f"expected {self.space.arity} arguments, got {len(args)}")
        hit = self.space.lookup(args)
        if hit is None:
            return {}
        sign, k = hit
        dm = self.space.module.dim
        return {c - k * dm: sign * x for c, x in self.coords.items() if c // dm == k}

    def values(self):
        """``{canonical word: module vector}`` for the nonzero values."""
        dm = self.space.module.dim
        out = {}
        for c, x in sorted(self.coords.items()):
            out.setdefault(self.space.keys[c // dm], {})[c % dm] = x
        return out

    def components(self):
        """Split into Gamma-homogeneous parts: ``{degree: Cochain}``."""
        parts = {}
        for c, x in self.coords.items():
            parts.setdefault(self.space.col_degree[c], {})[c] = x
        return {d: Cochain(self.space, v) for d, v in sorted(parts.items())}

    def is_zero(self):
        return not self.coords

    def __add__(self, other):
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, ZERO) + v
        return Cochain(self.space, out)

    def __sub__(self, other):
        return self + other.scale(MINUS_ONE)

    def scale(self, c):
        return Cochain(self.space, {k: c * v for k, v in self.coords.items()})

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.space is other.space and (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"Cochain(arity={self.arity}, nnz={len(self.coords)})"


# -- symbolic evaluation helpers ----------------------------------------------
# An "expression" maps (input column, output module index) -> coefficient: the
# value of the operator on the output word, as a linear function of the input.

def _fval(space, word, coeff, out):
    hit = space.lookup(word)
    if hit is None:
        return
    sign, k = hit
    c = coeff * sign
    dm = space.module.dim
    base = k * dm
    for m in range(dm):
        key = (base + m, m)
        v = out.get(key)
        out[key] = c if v is None else v + c


def _fvec(space, head, vec, tail, coeff, out):
    for l, a in vec.items():
        _fval(space, head + (l,) + tail, coeff * a, out)


def _left(module, x, expr):
    out = {}
    for (col, m), v in expr.items():
        if not v:
            continue
        for m2, a in module.left(x, m).items():
            key = (col, m2)
            w = out.get(key)
            out[key] = v * a if w is None else w + v * a
    return out


def _right(module, expr, y):
    out = {}
    for (col, m), v in expr.items():
        if not v:
            continue
        for m2, a in module.right(m, y).items():
            key = (col, m2)
            w = out.get(key)
            out[key] = v * a if w is None else w + v * a
    return out


def _acc(target, expr, factor=ONE, beta_fn=None, space=None):
    cache = {}
    for key, v in expr.items():
        if not v:
            continue
        c = factor
        if beta_fn is not None:
            deg = space.col_degree[key[0]]
            b = cache.get(deg)
            if b is None:
                b = cache[deg] = beta_fn(deg)
            c = c * b
        w = target.get(key)
        target[key] = v * c if w is None else w + v * c


def _assemble(in_space, out_space, row_fn):
    dm = out_space.module.dim
    cols = [{} for _ in range(in_space.dim)]
    for k, word in enumerate(out_space.keys):
        for (col, m), v in row_fn(word).items():
            if v:
                cols[col][k * dm + m] = v
    return ExactMatrix(out_space.dim, in_space.dim, cols)


class LeftSymmetricComplex:
    """The cochain complex C(S, M) with its face maps and the action rho."""

    def __init__(self, algebra, module=None):
        self.algebra = algebra
        self.module = module if module is not None else regular_bimodule(algebra)
        if self.module.algebra is not algebra:
            raise ValidationError("module is defined over a different algebra")
        self.lie = associated_lie(algebra)
        self._spaces = {}
        self._mats = {}

    # spaces

    def space(self, n):
        """C^n(S, M); n = 0 gives the C0Space."""
        key = ("alt", n)
        if key not in self._spaces:
            if n == 0:
                self._spaces[key] = C0Space(self.algebra, self.module)
            else:
                self._spaces[key] = CochainSpace(self.algebra, self.module, n, n - 1)
        return self._spaces[key]

    def tensor_space(self, n):
        key = ("tensor", n)
        if key not in self._spaces:
            self._spaces[key] = CochainSpace(self.algebra, self.module, n, 0)
        return self._spaces[key]

    def _cached(self, key, build):
        m = self._mats.get(key)
        if m is None:
            m = self._mats[key] = build()
        return m

    # formula for one face at one output word

    def _face_expr(self, space, t, word, out, factor=ONE):
        A, M, g = self.algebra, self.module, self.lie
        deg, eps, group = A.degrees, A.factor, A.factor.group
        i = space.arity
        last = word[i]
        xt = word[t - 1]
        at = deg[xt]
        rest = word[:t - 1] + word[t:i]
        # eps(beta + a_1 + ... + a_(t-1), a_t) x_t . f(..^x_t.., x_(i+1))
        e = {}
        _fval(space, rest + (last,), ONE, e)
        pre = eps(group.total(deg[w] for w in word[:t - 1]), at)
        _acc(out, _left(M, xt, e), factor * pre, lambda b: eps(b, at), space)
        c = factor * eps(at, group.total(deg[w] for w in word[t:i]))
        # - eps(a_t, a_(t+1) + ... + a_i) f(..^x_t.., x_t . x_(i+1))
        _fvec(space, rest, A.mul(xt, last), (), -c, out)
        # + eps(a_t, a_(t+1) + ... + a_i) f(..^x_t.., x_t) . x_(i+1)
        e = {}
        _fval(space, rest + (xt,), ONE, e)
        _acc(out, _right(M, e, last), c)
        # - sum_(t<j<=i) eps(a_t, a_(t+1) + ... + a_(j-1)) f(..^x_t.., [x_t, x_j], .., x_(i+1))
        for j in range(t + 1, i + 1):
            cj = factor * eps(at, group.total(deg[w] for w in word[t:j - 1]))
            _fvec(space, word[:t - 1] + word[t:j - 1], g.bracket(xt, word[j - 1]),
                  word[j:i] + (last,), -cj, out)

    def face(self, t, n, source="alt", target="tensor"):
        """Matrix of D_t from arity ``n`` to arity ``n + 1`` (zero when ``t > n``)."""
        src = self.space(n) if source == "alt" else self.tensor_space(n)
        dst = self.space(n + 1) if target == "alt" else self.tensor_space(n + 1)
        if n < 1:
            raise ValueError("face maps act on arities >= 1")

        def build():
            if t > n:
                return ExactMatrix.zeros(dst.dim, src.dim)

            def row(word):
                out = {}
                self._face_expr(src, t, word, out)
                return out
            return _assemble(src, dst, row)
        return self._cached(("face", t, n, source, target), build)

    def d(self, n, target="alt"):
        """Matrix of the coboundary C^n -> C^(n+1) (``target="tensor"`` evaluates on all words)."""
        def build():
            dst = self.space(n + 1) if target == "alt" else self.tensor_space(n + 1)
            if n == 0:
                return self._d0(dst)
            src = self.space(n)

            def row(word):
                out = {}
                for t in range(1, n + 1):
                    self._face_expr(src, t, word, out, ONE if t % 2 else MINUS_ONE)
                return out
            return _assemble(src, dst, row)
        return self._cached(("d", n, target), build)

    def _d0(self, dst):
        # d(m)(x) = eps(beta, a) x.m - m.x
        A, M = self.algebra, self.module
        c0 = self.space(0)
        dm = M.dim
        cols = []
        for v, beta in zip(c0.vectors, c0.col_degree):
            col = {}
            for k, word in enumerate(dst.keys):
                x = word[0]
                val = M.act_left({x: ONE}, v)
                c = A.factor(beta, A.degrees[x])
                val = {m: c * y for m, y in val.items()}
                for m, y in M.act_right(v, {x: ONE}).items():
                    val[m] = val.get(m, ZERO) - y
                for m, y in val.items():
                    if y:
                        col[k * dm + m] = y
            cols.append(col)
        return ExactMatrix(dst.dim, c0.dim, cols)

    def rho(self, x, n):
        """Matrix of rho(x) (the antisymmetric left action) on C^n(S, M), n >= 1."""
        if n < 1:
            raise ValueError("rho acts on arities >= 1")

        def build():
            A, M, g = self.algebra, self.module, self.lie
            deg, eps, group = A.degrees, A.factor, A.factor.group
            space = self.space(n)
            i = n - 1
            a = deg[x]

            def row(word):
                out = {}
                last = word[i]
                e = {}
                _fval(space, word, ONE, e)
                _acc(out, _left(M, x, e))
                c = eps(a, group.total(deg[w] for w in word[:i]))
                e = {}
                _fvec(space, word[:i], A.mul(x, last), (), ONE, e)
                _acc(out, e, -c, lambda b: eps(a, b), space)
                e = {}
                _fval(space, word[:i] + (x,), ONE, e)
                _acc(out, _right(M, e, last), c, lambda b: eps(a, b), space)
                for s in range(1, i + 1):
                    cs = eps(a, group.total(deg[w] for w in word[:s - 1]))
                    e = {}
                    _fvec(space, word[:s - 1], g.bracket(x, word[s - 1]), word[s:], ONE, e)
                    _acc(out, e, -cs, lambda b: eps(a, b), space)
                return out
            return _assemble(space, space, row)
        return self._cached(("rho", x, n), build)

    def embed(self, n):
        """Inclusion C^n(S, M) -> Hom(S^(x)n, M) (evaluation on every word)."""
        def build():
            src, dst = self.space(n), self.tensor_space(n)
            if n == 0:
                raise ValueError("no tensor space for arity 0")

            def row(word):
                out = {}
                _fval(src, word, ONE, out)
                return out
            return _assemble(src, dst, row)
        return self._cached(("embed", n), build)


class LieComplex:
    """The Chevalley-Eilenberg complex C(g, N) of an eps-Lie algebra with a left module."""

    def __init__(self, lie, module):
        self.lie = lie
        self.module = module
        self._spaces = {}
        self._mats = {}

    def space(self, n):
        if n not in self._spaces:
            self._spaces[n] = CochainSpace(self.lie, self.module, n, n)
        return self._spaces[n]

    def d(self, n):
        key = ("d", n)
        if key not in self._mats:
            g, N = self.lie, self.module
            deg, eps, group = g.degrees, g.factor, g.factor.group
            src, dst = self.space(n), self.space(n + 1)

            def row(word):
                out = {}
                for t in range(1, n + 2):
                    xt = word[t - 1]
                    at = deg[xt]
                    e = {}
                    _fval(src, word[:t - 1] + word[t:], ONE, e)
                    sign = ONE if t % 2 else MINUS_ONE
                    pre = eps(group.total(deg[w] for w in word[:t - 1]), at)
                    _acc(out, _left(N, xt, e), sign * pre, lambda b: eps(b, at), src)
                for s in range(1, n + 2):
                    sign = MINUS_ONE if s % 2 else ONE
                    for t in range(s + 1, n + 2):
                        c = sign * eps(deg[word[s - 1]],
                                       group.total(deg[w] for w in word[s:t - 1]))
                        _fvec(src, word[:s - 1] + word[s:t - 1],
                              g.bracket(word[s - 1], word[t - 1]), word[t:], c, out)
                return out
            self._mats[key] = _assemble(src, dst, row)
        return self._mats[key]

    def xi(self, x, n):
        key = ("xi", x, n)
        if key not in self._mats:
            g, N = self.lie, self.module
            deg, eps, group = g.degrees, g.factor, g.factor.group
            space = self.space(n)
            a = deg[x]

            def row(word):
                out = {}
                e = {}
                _fval(space, word, ONE, e)
                _acc(out, _left(N, x, e))
                for j in range(1, n + 1):
                    cj = eps(a, group.total(deg[w] for w in word[:j - 1]))
                    e = {}
                    _fvec(space, word[:j - 1], g.bracket(x, word[j - 1]), word[j:], ONE, e)
                    _acc(out, e, -cj, lambda b: eps(a, b), space)
                return out
            self._mats[key] = _assemble(space, space, row)
        return self._mats[key]


# -- the currying isomorphism -------------------------------------------------

def psi_matrix(lie_complex, ls_complex, i):
    """Matrix of psi: C^i(g_S, C^1(S, M)) -> C^(i+1)(S, M), psi(f)(x_1..x_i, y) = f(x_1..x_i)(y)."""
    src, dst = lie_complex.space(i), ls_complex.space(i + 1)
    dm = ls_complex.module.dim
    dn = lie_complex.module.dim
    cols = []
    for col in range(src.dim):
        key = src.keys[col // dn]
        j, l = divmod(col % dn, dm)
        cols.append({dst.col(key + (j,), l): ONE})
    return ExactMatrix(dst.dim, src.dim, cols)


def complex_for(A, M=None):
    """Cached LeftSymmetricComplex for ``(A, M)``; ``M=None`` means the regular bimodule."""
    cache = A.__dict__.setdefault("_complexes", {})
    key = id(M)
    if key not in cache:
        cache[key] = (M, LeftSymmetricComplex(A, M))
    return cache[key][1]


def lie_complex_for(A, M=None):
    """The CE complex of g_S with coefficients in C^1(S, M), plus the LS complex."""
    ls = complex_for(A, M)
    cache = A.__dict__.setdefault("_lie_complexes", {})
    key = id(M)
    if key not in cache:
        N = lie_module_of(hom_bimodule(ls.module), lie=ls.lie)
        cache[key] = LieComplex(ls.lie, N)
    return cache[key], ls


# -- functional surface ---------------------------------------------------------

def cochain_space_basis(A, M, n):
    """Ordered basis labels of C^n(S, M)."""
    space = complex_for(A, M).space(n)
    return [space.label(c) for c in range(space.dim)]


def evaluate_cochain(f, args):
    return f.evaluate(args)


def _apply(matrix, f, space):
    return Cochain(space, matrix.apply(f.coords))


def face_map(A, M, t, f):
    """D_t f evaluated on every argument word (a tensor cochain of arity n + 1)."""
    cx = complex_for(A, M)
    n = f.arity
    source = "alt" if f.space is cx.space(n) else "tensor"
    return _apply(cx.face(t, n, source, "tensor"), f, cx.tensor_space(n + 1))


def coboundary(A, M, f):
    cx = complex_for(A, M)
    n = f.arity
    return _apply(cx.d(n), f, cx.space(n + 1))


def rho_action(A, M, x, f):
    cx = complex_for(A, M)
    return _apply(cx.rho(x, f.arity), f, f.space)


def ce_coboundary(lie_complex, f):
    n = f.arity
    return _apply(lie_complex.d(n), f, lie_complex.space(n + 1))


def xi_action(lie_complex, x, f):
    return _apply(lie_complex.xi(x, f.arity), f, f.space)


def psi(A, M, f):
    lc, ls = lie_complex_for(A, M)
    i = f.arity
    return _apply(psi_matrix(lc, ls, i), f, ls.space(i + 1))


def psi_inv(A, M, f):
    lc, ls = lie_complex_for(A, M)
    i = f.arity - 1
    return _apply(psi_matrix(lc, ls, i).transpose(), f, lc.space(i))
