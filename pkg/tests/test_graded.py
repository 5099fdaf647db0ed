import json

import pytest
from hypothesis import given, strategies as st

from hopftower.graded import (
    INT64_MAX,
    BasisId,
    Element,
    MismatchError,
    Side,
    TensorElement,
    add,
    pair,
    pair_tensor,
    register_family,
    scale,
    zero,
)

L, U = Side.LOWER, Side.UPPER
register_family("sym", "partition")


def p(label, c=1):
    return Element.basis(L, "sym", label, c)


def s(label, c=1):
    return Element.basis(U, "sym", label, c)


def test_add_and_scale_basics():
    x = s((2, 1), 3) + s((1,))
    assert add(x, zero()) == x
    assert scale(0, x) == zero()
    assert add(s((1,), 2), s((1,), -2)) == zero()
    assert not zero()
    assert zero().side is None


def test_mismatched_sides_rejected():
    with pytest.raises(MismatchError):
        s((1,)) + p((1,))
    with pytest.raises(MismatchError):
        s((1,)) + Element.basis(U, "nsym-qsym", (1,))


def test_pair_examples():
    assert pair(p((2, 1)), s((2, 1))) == 1
    assert pair(p((2,)), s((1, 1))) == 0
    assert pair(p((1,), 2) + p((2,)), s((1,), 3)) == 6


def test_pair_side_errors():
    with pytest.raises(MismatchError):
        pair(s((1,)), p((1,)))


def test_pair_tensor_examples():
    lam, mu = (2,), (1, 1)
    t = TensorElement.simple(p(lam), p(mu))
    assert pair_tensor(t, TensorElement.simple(s(lam), s(mu))) == 1
    assert pair_tensor(t, TensorElement.simple(s(mu), s(lam))) == 0
    sym_t = t + TensorElement.simple(p(mu), p(lam))
    assert pair_tensor(sym_t, TensorElement.simple(s(mu), s(lam))) == 1
    with pytest.raises(MismatchError):
        pair_tensor(TensorElement.simple(s(lam), s(mu)), t)


def test_overflow_raises_instead_of_wrapping():
    big = s((1,), INT64_MAX)
    assert big.coeff(BasisId(U, "sym", (1,))) == INT64_MAX
    with pytest.raises(OverflowError):
        big + s((1,))
    with pytest.raises(OverflowError):
        2 * big
    with pytest.raises(OverflowError):
        s((1,), INT64_MAX + 1)
    assert big + s((1,), -1) == s((1,), INT64_MAX - 1)


def test_homogeneity():
    assert (s((2,)) + s((1, 1))).degree == 2
    mixed = s((2,)) + s((1,))
    assert not mixed.is_homogeneous() and mixed.degree is None


def test_json_rendering_is_sorted():
    x = s((1, 1), 2) + s((2,), -1) + s((1,))
    assert json.loads(x.to_json()) == [
        {"label": "[1]", "coeff": 1},
        {"label": "[2]", "coeff": -1},
        {"label": "[1,1]", "coeff": 2},
    ]


LABELS = [(), (1,), (2,), (1, 1), (3,), (2, 1)]
elements = st.dictionaries(st.sampled_from(LABELS), st.integers(-50, 50), max_size=5)


def build(side, d):
    return Element({BasisId(side, "sym", lab): c for lab, c in d.items()})


@given(elements, elements, elements, st.integers(-9, 9), st.integers(-9, 9))
def test_pair_is_bilinear(x, y, z, a, b):
    X, Y, Z = build(L, x), build(L, y), build(U, z)
    assert pair(a * X + b * Y, Z) == a * pair(X, Z) + b * pair(Y, Z)
    Zs = build(U, x)
    assert pair(X, a * Z + b * Zs) == a * pair(X, Z) + b * pair(X, Zs)


@given(elements, elements)
def test_pair_vanishes_across_degrees(x, z):
    X, Z = build(L, x), build(U, z)
    for d in range(4):
        Xd = Element({k: c for k, c in X.items() if k.degree == d})
        for e in range(4):
            if e != d:
                Ze = Element({k: c for k, c in Z.items() if k.degree == e})
                assert pair(Xd, Ze) == 0


@given(elements, elements)
def test_addition_commutes(x, y):
    assert build(U, x) + build(U, y) == build(U, y) + build(U, x)
