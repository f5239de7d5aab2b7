"""Brute-force cohomology dimensions, written independently of glsym.cochains.

Cochains are represented in the full tensor space Hom(S^(x)n, M) as dense
vectors.  The alternation constraints on the first n-1 slots and the
coboundary are written down entry by entry from the defining formula and
ranks come from sympy's dense elimination over Q(i).
"""

from itertools import product

import sympy
from sympy.polys.matrices import DomainMatrix


def _num(s):
    return sympy.Rational(s.re.numerator, s.re.denominator) + \
        sympy.I * sympy.Rational(s.im.numerator, s.im.denominator)


class Oracle:
    def __init__(self, A, M=None):
        # raw data only: generator table, degrees, structure constants
        self.n = A.dim
        table = [[_num(x) for x in row] for row in A.factor.table]
        orders = A.factor.group.factors
        self.orders = orders
        self.table = table
        self.sdeg = [tuple(d) for d in A.degrees]
        self.mult = [[{k: _num(v) for k, v in A.mul(i, j).items()} for j in range(self.n)]
                     for i in range(self.n)]
        if M is None:
            self.mdim = self.n
            self.mdeg = list(self.sdeg)
            self.left = self.mult
            self.right = [[self.mult[j][i] for i in range(self.n)] for j in range(self.n)]
        else:
            self.mdim = M.dim
            self.mdeg = [tuple(d) for d in M.degrees]
            self.left = [[{k: _num(v) for k, v in M.left(i, m).items()} for m in range(M.dim)]
                         for i in range(self.n)]
            self.right = [[{k: _num(v) for k, v in M.right(m, i).items()} for i in range(self.n)]
                          for m in range(M.dim)]

    def eps(self, a, b):
        out = sympy.Integer(1)
        for j, x in enumerate(a):
            for l, y in enumerate(b):
                out *= self.table[j][l] ** (x * y)
        return sympy.nsimplify(sympy.expand(out))

    def add(self, *ds):
        out = [0] * len(self.orders)
        for d in ds:
            out = [x + y for x, y in zip(out, d)]
        return tuple(x % m if m else x for x, m in zip(out, self.orders))

    def sub(self, a, b):
        return tuple((x - y) % m if m else x - y for x, y, m in zip(a, b, self.orders))

    def bracket(self, i, j):
        out = dict(self.mult[i][j])
        e = self.eps(self.sdeg[i], self.sdeg[j])
        for k, v in self.mult[j][i].items():
            out[k] = out.get(k, 0) - e * v
        return out

    # tensor space T^n: index (word, m) -> word_index * mdim + m
    def words(self, n):
        return list(product(range(self.n), repeat=n))

    def alternation(self, n):
        """Rows f(..a,b..) + eps(a,b) f(..b,a..) = 0 for adjacent slots p < n-1."""
        words = self.words(n)
        idx = {w: k for k, w in enumerate(words)}
        rows = []
        for w in words:
            for p in range(n - 2):
                v = list(w)
                v[p], v[p + 1] = v[p + 1], v[p]
                e = self.eps(self.sdeg[w[p]], self.sdeg[w[p + 1]])
                for m in range(self.mdim):
                    row = {}
                    row[idx[w] * self.mdim + m] = row.get(idx[w] * self.mdim + m, 0) + 1
                    c = idx[tuple(v)] * self.mdim + m
                    row[c] = row.get(c, 0) + e
                    rows.append(row)
        return rows, len(words) * self.mdim

    def off_degree(self, n, degree):
        """Rows killing every coordinate whose degree differs from ``degree``."""
        rows = []
        for k, w in enumerate(self.words(n)):
            for m in range(self.mdim):
                if self.sub(self.mdeg[m], self.add(*[self.sdeg[a] for a in w])) != tuple(degree):
                    rows.append({k * self.mdim + m: 1})
        return rows, len(self.words(n)) * self.mdim

    def coboundary(self, n):
        """Dense map T^n -> T^(n+1) given entrywise by the coboundary formula (n >= 1)."""
        src = self.words(n)
        sidx = {w: k for k, w in enumerate(src)}
        dst = self.words(n + 1)
        cols = len(src) * self.mdim
        rows = []
        for w in dst:
            i = n
            last = w[i]
            xs = w[:i]
            al = [self.sdeg[a] for a in w]
            out = [dict() for _ in range(self.mdim)]   # out[m_out][col] = coeff

            def f(word, coeff, post=None):
                # coefficient of f(word) in module index space, then post-map
                base = sidx[word] * self.mdim
                for m in range(self.mdim):
                    beta = self.sub(self.mdeg[m], self.add(*[self.sdeg[a] for a in word]))
                    c = coeff(beta) if callable(coeff) else coeff
                    if c == 0:
                        continue
                    vec = {m: 1} if post is None else post(m)
                    for mo, v in vec.items():
                        out[mo][base + m] = out[mo].get(base + m, 0) + c * v

            for t in range(1, i + 1):
                s = (-1) ** t
                xt = xs[t - 1]
                hat = xs[:t - 1] + xs[t:]
                pre = self.add(*al[:t - 1])
                f(hat + (last,), lambda beta, pre=pre, xt=xt: -s * self.eps(self.add(beta, pre), self.sdeg[xt]),
                  lambda m, xt=xt: self.left[xt][m])
                c2 = self.eps(al[t - 1], self.add(*al[t:i]))
                for l, v in self.mult[xt][last].items():
                    f(hat + (l,), s * c2 * v)
                f(hat + (xt,), -s * c2, lambda m, last=last: self.right[m][last])
                for j in range(t + 1, i + 1):
                    c4 = s * self.eps(al[t - 1], self.add(*al[t:j - 1]))
                    for l, v in self.bracket(xt, xs[j - 1]).items():
                        f(xs[:t - 1] + xs[t:j - 1] + (l,) + xs[j:i] + (last,), c4 * v)
            rows.extend(out)
        return rows, cols

    def c0_rows(self):
        """(ab)m - a(bm) = 0 as rows over M."""
        rows = []
        for a, b in product(range(self.n), repeat=2):
            out = [dict() for _ in range(self.mdim)]
            for m in range(self.mdim):
                for k, v in self.mult[a][b].items():
                    for mo, w in self.left[k][m].items():
                        out[mo][m] = out[mo].get(m, 0) + v * w
                for k, v in self.left[b][m].items():
                    for mo, w in self.left[a][k].items():
                        out[mo][m] = out[mo].get(m, 0) - v * w
            rows.extend(out)
        return rows, self.mdim

    def d0_rows(self):
        """d(m)(x) = eps(beta, a) x.m - m.x as a map M -> T^1."""
        rows = []
        for x in range(self.n):
            out = [dict() for _ in range(self.mdim)]
            for m in range(self.mdim):
                e = self.eps(self.mdeg[m], self.sdeg[x])
                for mo, v in self.left[x][m].items():
                    out[mo][m] = out[mo].get(m, 0) + e * v
                for mo, v in self.right[m][x].items():
                    out[mo][m] = out[mo].get(m, 0) - v
            rows.extend(out)
        return rows, self.mdim


def _rank(rows, ncols):
    if not rows or not ncols:
        return 0
    dense = [[sympy.nsimplify(r.get(c, 0)) for c in range(ncols)] for r in rows]
    dense = [r for r in dense if any(r)]
    if not dense:
        return 0
    M = DomainMatrix.from_Matrix(sympy.Matrix(dense))
    return M.to_field().rank()


def _stack(*parts):
    rows = []
    for r, _ in parts:
        rows.extend(r)
    return rows, parts[0][1]


def cohomology_dims(A, n, M=None):
    """(dim C^n, dim Z^n, dim B^n) by brute force; B^0 = 0."""
    o = Oracle(A, M)
    if n == 0:
        c0 = o.c0_rows()
        dim_c = o.mdim - _rank(*c0)
        dim_z = o.mdim - _rank(*_stack(c0, o.d0_rows()))
        return dim_c, dim_z, 0
    alt = o.alternation(n)
    dim_c = alt[1] - _rank(*alt)
    dim_z = alt[1] - _rank(*_stack(alt, o.coboundary(n)))
    if n == 1:
        c0 = o.c0_rows()
        dim_b = (o.mdim - _rank(*c0)) - (o.mdim - _rank(*_stack(c0, o.d0_rows())))
    else:
        altp = o.alternation(n - 1)
        dim_b = (altp[1] - _rank(*altp)) - (altp[1] - _rank(*_stack(altp, o.coboundary(n - 1))))
    return dim_c, dim_z, dim_b


def cohomology_dims_in_degree(A, n, degree, M=None):
    """(dim C^n, dim Z^n, dim B^n) restricted to one degree, for n >= 2."""
    o = Oracle(A, M)

    def dims(k):
        cons = _stack(o.alternation(k), o.off_degree(k, degree))
        cols = cons[1]
        return cols - _rank(*cons), cols - _rank(*_stack(cons, o.coboundary(k)))

    dim_c, dim_z = dims(n)
    cp, zp = dims(n - 1)
    return dim_c, dim_z, cp - zp
