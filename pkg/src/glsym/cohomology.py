"""Cocycles, coboundaries and cohomology of the left-symmetric complex.

Everything is computed per Gamma-degree: d preserves degree, so the matrix
of d splits into blocks and each block is handled on its own.  Totals are
sums over the blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cochains import Cochain, complex_for, lie_complex_for, psi_matrix
from .linalg import ExactMatrix, Span, rank, rank_nullspace

__all__ = [
    "CohomologyResult", "DegreeBlock", "cohomology_at", "d_matrix",
    "Theorem41Report", "theorem41_check", "Remark42Report", "remark42_check",
    "in_coboundaries",
]


@dataclass
class DegreeBlock:
    dim_C: int
    dim_Z: int
    dim_B: int

    @property
    def dim_H(self):
        return self.dim_Z - self.dim_B


@dataclass
class CohomologyResult:
    n: int
    dim_C: int
    dim_Z: int
    dim_B: int
    Z_basis: list = field(default_factory=list)
    H_representatives: list = field(default_factory=list)
    by_degree: dict = field(default_factory=dict)   # degree -> DegreeBlock
    representatives_by_degree: dict = field(default_factory=dict)

    @property
    def dim_H(self):
        return self.dim_Z - self.dim_B


def d_matrix(A, M, n):
    """Matrix of d: C^n(S, M) -> C^(n+1)(S, M)."""
    return complex_for(A, M).d(n)


def _block(mat, cols):
    """Columns ``cols`` of ``mat`` as a matrix (rows untouched)."""
    return ExactMatrix(mat.nrows, len(cols), [mat.columns[c] for c in cols])


def cohomology_at(A, M, n, representatives=True):
    """H^n(S, M) with B^0 = 0, split by Gamma-degree.

    Representatives are chosen per degree by extending a basis of B^n with
    Z^n nullspace vectors in echelon order, so each one is homogeneous.
    """
    cx = complex_for(A, M)
    space = cx.space(n)
    dn = cx.d(n)
    prev_space = cx.space(n - 1) if n >= 1 else None
    dprev = cx.d(n - 1) if n >= 1 else None
    result = CohomologyResult(n, space.dim, 0, 0)
    for deg in space.degrees():
        cols = space.columns_of_degree(deg)
        r, null = rank_nullspace(_block(dn, cols))
        z_vecs = [{cols[k]: x for k, x in v.items()} for v in null]
        b_cols = []
        if dprev is not None:
            b_cols = [c for c in prev_space.columns_of_degree(deg)]
        bmat = _block(dprev, b_cols) if b_cols else None
        dim_b = rank(bmat) if bmat is not None else 0
        block = DegreeBlock(len(cols), len(z_vecs), dim_b)
        result.by_degree[deg] = block
        result.dim_Z += block.dim_Z
        result.dim_B += block.dim_B
        result.Z_basis.extend(Cochain(space, v) for v in z_vecs)
        if representatives and block.dim_H:
            span = Span(bmat.columns if bmat is not None else ())
            reps = []
            for v in z_vecs:
                if span.add(v):
                    reps.append(Cochain(space, v))
                    if len(reps) == block.dim_H:
                        break
            result.representatives_by_degree[deg] = reps
            result.H_representatives.extend(reps)
    return result


def in_coboundaries(A, M, f):
    """True when the cochain ``f`` lies in B^n(S, M)."""
    n = f.arity
    if n == 0:
        return f.is_zero()
    dprev = complex_for(A, M).d(n - 1)
    r = rank(dprev)
    return rank(dprev.hstack(ExactMatrix(dprev.nrows, 1, [dict(f.coords)]))) == r


@dataclass
class Theorem41Report:
    i: int
    dim_H_ls: int        # dim H^(i+1)(S, M)
    dim_H_ce: int        # dim H^i(g_S, C^1(S, M))
    residuals: dict      # square name -> number of nonzero entries of the difference

    @property
    def passed(self):
        return self.dim_H_ls == self.dim_H_ce and not any(self.residuals.values())


def _ce_dim_H(lc, i):
    d = lc.d(i)
    dim_z = d.ncols - rank(d)
    dim_b = rank(lc.d(i - 1)) if i >= 1 else 0
    return dim_z - dim_b


def theorem41_check(A, M, i):
    """Compare H^(i+1)(S, M) with H^i of g_S in C^1(S, M) and verify the currying squares."""
    if i < 1:
        raise ValueError("i must be at least 1")
    lc, ls = lie_complex_for(A, M)
    psi_lo, psi_i, psi_hi = (psi_matrix(lc, ls, k) for k in (i - 1, i, i + 1))
    residuals = {
        f"psi d = d psi ({i - 1}->{i})": (psi_i @ lc.d(i - 1) - ls.d(i) @ psi_lo).nnz(),
        f"psi d = d psi ({i}->{i + 1})": (psi_hi @ lc.d(i) - ls.d(i + 1) @ psi_i).nnz(),
    }
    for x in range(A.dim):
        residuals[f"psi xi = rho psi (x={A.names[x]})"] = (
            psi_i @ lc.xi(x, i) - ls.rho(x, i + 1) @ psi_i).nnz()
    dim_ls = cohomology_at(A, M, i + 1, representatives=False).dim_H
    return Theorem41Report(i, dim_ls, _ce_dim_H(lc, i), residuals)


@dataclass
class Remark42Report:
    dim_Z0: int
    dim_C0: int
    dim_H0_ce: int
    dim_H1: int

    @property
    def alternating_sum(self):
        return self.dim_Z0 - self.dim_C0 + self.dim_H0_ce - self.dim_H1

    @property
    def passed(self):
        return self.alternating_sum == 0


def remark42_check(A, M=None):
    """Dimensions around the low-degree exact sequence; the alternating sum must vanish."""
    lc, ls = lie_complex_for(A, M)
    h0 = cohomology_at(A, M, 0, representatives=False)
    h1 = cohomology_at(A, M, 1, representatives=False)
    return Remark42Report(h0.dim_Z, h0.dim_C, _ce_dim_H(lc, 0), h1.dim_H)
