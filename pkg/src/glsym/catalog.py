"""Named algebras used by the tests, the CLI fixtures and the documentation."""

from __future__ import annotations

from .algebra import GradedAlgebra, gl_epsilon
from .grading import GradingGroup, super_factor, trivial_factor, validate_factor
from .scalar import ONE, Scalar, scalar

X, Y1, Y2 = 0, 1, 2


def example_5_2():
    """The 3-dimensional left-symmetric superalgebra

    x.x = 2x, x.y1 = y1, x.y2 = y2, y1.y2 = x, y2.y1 = -x
    with x even and y1, y2 odd.
    """
    return deformed_example(0, 0, 0, 0)


def cocycle_fa():
    """F_a: (x,x) -> x, (x,y2) -> y2."""
    return {(X, X): {X: ONE}, (X, Y2): {Y2: ONE}}


def cocycle_fb():
    """F_b: (x,y1) -> y2."""
    return {(X, Y1): {Y2: ONE}}


def cocycle_fc():
    """F_c: (x,y2) -> y1."""
    return {(X, Y2): {Y1: ONE}}


def deformed_example(a, b, c, lam=1):
    """The 3-dimensional superalgebra with product x.y + lam*(a F_a + b F_b + c F_c)."""
    a, b, c, lam = (scalar(v) for v in (a, b, c, lam))
    products = {
        (X, X): {X: 2 + lam * a},
        (X, Y1): {Y1: ONE, Y2: lam * b},
        (X, Y2): {Y2: 1 + lam * a, Y1: lam * c},
        (Y1, Y2): {X: ONE},
        (Y2, Y1): {X: -ONE},
    }
    basis = [("x", (0,)), ("y1", (1,)), ("y2", (1,))]
    return GradedAlgebra(super_factor(), basis, products, name="example_5_2")


def gl_super(even, odd):
    """gl(V) for a super vector space of dimension even|odd."""
    return gl_epsilon(super_factor(), [(0,)] * even + [(1,)] * odd, names=f"gl({even}|{odd})")


def idempotent_pair():
    """e.e = e, f.f = f, e.f = f.e = 0 over the trivial factor: not simple."""
    basis = [("e", (0,)), ("f", (0,))]
    return GradedAlgebra(trivial_factor(), basis, {(0, 0): {0: ONE}, (1, 1): {1: ONE}},
                         name="idempotent_pair")


def one_dim(square=1):
    """The 1-dimensional algebra e.e = square*e over the trivial factor on Z."""
    products = {(0, 0): {0: scalar(square)}} if scalar(square) else {}
    return GradedAlgebra(trivial_factor(), [("e", (0,))], products, name="one_dim")


def skew_factor():
    """Z x Z with eps(g1, g2) = i, eps(g2, g1) = -i: a non-symmetric commutation factor."""
    return validate_factor(GradingGroup((0, 0)), [[ONE, Scalar(0, 1)], [Scalar(0, -1), ONE]])
