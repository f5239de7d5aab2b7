import pytest

from glsym.algebra import associated_lie
from glsym.bimodule import (Bimodule, check_bimodule, check_lie_module, classify, hom_bimodule,
                            lie_module_of, regular_bimodule, tensor_bimodule, zero_bimodule)
from glsym.catalog import X, Y1, Y2, example_5_2, gl_super, skew_factor
from glsym.algebra import gl_epsilon
from glsym.errors import ValidationError
from glsym.scalar import ONE


@pytest.fixture(scope="module")
def S():
    return example_5_2()


def test_regular_bimodule_passes(S):
    assert check_bimodule(regular_bimodule(S)).passed


def test_gl_regular_is_special():
    M = regular_bimodule(gl_super(1, 1))
    assert check_bimodule(M).passed
    assert classify(M).special


def test_regular_of_superalgebra_not_antisymmetric(S):
    flags = classify(regular_bimodule(S))
    assert not flags.antisymmetric


def test_zero_actions_pass(S):
    M = zero_bimodule(S, [("m", (0,)), ("n", (1,))])
    assert check_bimodule(M).passed
    assert classify(M).antisymmetric


def test_hom_bimodule_is_antisymmetric(S):
    H = hom_bimodule(regular_bimodule(S))
    assert check_bimodule(H).passed
    assert classify(H).antisymmetric


def test_hom_left_action_example(S):
    H = hom_bimodule(regular_bimodule(S))
    f = {H.index["x->x"]: ONE}
    g = H.act_left({X: ONE}, f)
    expected = {H.index["x->x"]: 2 * ONE, H.index["y1->y1"]: ONE, H.index["y2->y2"]: ONE}
    assert g == expected
    assert H.act_left({X: ONE}, {}) == {}


def test_tensor_example(S):
    R = regular_bimodule(S)
    T = tensor_bimodule(R, R)
    assert check_bimodule(T).passed
    m = T.index["y1*y2"]
    assert T.act_left({X: ONE}, {m: ONE}) == {m: 2 * ONE}


def test_tensor_with_trivial_module(S):
    R = regular_bimodule(S)
    N = zero_bimodule(S, [("n", (0,))])
    T = tensor_bimodule(R, N)
    g = associated_lie(S)
    for x in range(3):
        for m in range(3):
            expected = {k * 1: v for k, v in g.bracket(x, m).items()}
            assert T.act_left({x: ONE}, {m: ONE}) == expected


def test_lie_module_of_regular_is_adjoint(S):
    L = lie_module_of(regular_bimodule(S))
    g = associated_lie(S)
    for x in range(3):
        for m in range(3):
            assert L.left(x, m) == g.bracket(x, m)


def test_lie_module_of_antisymmetric_is_left_action(S):
    H = hom_bimodule(regular_bimodule(S))
    L = lie_module_of(H)
    for x in range(3):
        for m in range(H.dim):
            assert L.left(x, m) == H.left(x, m)


def test_module_grading_enforced(S):
    with pytest.raises(ValidationError):
        Bimodule(S, [("m", (0,))], left={(Y1, 0): {0: 1}})


def test_non_symmetric_factor_constructions():
    A = gl_epsilon(skew_factor(), [(0, 0), (1, 0), (0, 1), (1, 1)])
    R = regular_bimodule(A)
    assert check_bimodule(R).passed and classify(R).special
    H = hom_bimodule(R)
    assert check_bimodule(H).passed
    assert check_lie_module(lie_module_of(H)).passed
    assert check_lie_module(lie_module_of(R)).passed


def test_tensor_non_symmetric():
    A = gl_epsilon(skew_factor(), [(0, 0), (1, 0)])
    R = regular_bimodule(A)
    assert check_bimodule(tensor_bimodule(R, R)).passed
