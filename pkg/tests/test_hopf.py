import json
from concurrent.futures import ThreadPoolExecutor

import pytest

from hopftower.combinat import PARTITION, partitions_of
from hopftower.graded import Element, Side, TensorElement
from hopftower.hopf import (
    HopfPair,
    StructureError,
    degree_one_elements,
    is_primitive,
    verify_bialgebra,
    verify_duality,
)
from hopftower.instances import sym_pair

L, U = Side.LOWER, Side.UPPER


def test_unit_product(sym):
    x = sym.basis_element(U, (2, 1), 3) + sym.basis_element(U, (1,))
    assert sym.product(U, sym.unit(U), x) == x
    assert sym.product(U, x, sym.unit(U)) == x


def test_sym_product_s1_s1(sym):
    s1 = sym.basis_element(U, (1,))
    assert sym.product(U, s1, s1) == sym.basis_element(U, (2,)) + sym.basis_element(U, (1, 1))


def test_nsym_product_r1_r1(nq):
    r1 = nq.basis_element(L, (1,))
    assert nq.product(L, r1, r1) == nq.basis_element(L, (2,)) + nq.basis_element(L, (1, 1))


def test_unit_coproduct(sym):
    one = sym.unit(U)
    assert sym.coproduct(U, one) == TensorElement.simple(one, one)


@pytest.mark.parametrize("key", ["sym", "nq"])
def test_degree_one_coproduct(key, request):
    h = request.getfixturevalue(key)
    x = h.basis_element(U, (1,))
    one = h.unit(U)
    assert h.coproduct(U, x) == TensorElement.simple(one, x) + TensorElement.simple(x, one)


def test_sym_coproduct_s2(sym):
    s = lambda lab: sym.basis_element(U, lab)
    expected = (
        TensorElement.simple(s(()), s((2,)))
        + TensorElement.simple(s((1,)), s((1,)))
        + TensorElement.simple(s((2,)), s(()))
    )
    assert sym.coproduct(U, s((2,))) == expected


@pytest.mark.parametrize("key", ["sym", "nq"])
def test_verify_duality_passes(key, request):
    report = verify_duality(request.getfixturevalue(key), 6)
    assert report.passed, report.violations[:3]


@pytest.mark.parametrize("key", ["sym", "nq"])
def test_verify_bialgebra_passes(key, request):
    report = verify_bialgebra(request.getfixturevalue(key), 5)
    assert report.passed, report.violations[:3]


def test_corrupted_product_reports_exact_triple(sym):
    bad = sym.with_constant(U, "product", [(1,), (1,)], (2,), 2)
    report = verify_duality(bad, 6)
    assert report.violations == [
        {"law": "<Dx,y(x)z> = <x,y*z>", "triple": ["p[2]", "s[1]", "s[1]"], "lhs": 1, "rhs": 2}
    ]
    # the original pair is untouched
    assert verify_duality(sym, 3).passed


def test_corrupted_coproduct_reports_exact_triple(nq):
    bad = nq.with_constant(U, "coproduct", [(2,)], ((1,), (1,)), 0)
    report = verify_duality(bad, 4)
    assert [v["triple"] for v in report.violations] == [["p(1)", "p(1)", "s(2)"]]
    assert report.violations[0]["lhs"] == 1 and report.violations[0]["rhs"] == 0


def test_corrupted_coproduct_breaks_bialgebra(nq):
    bad = nq.with_constant(U, "coproduct", [(2,)], ((1,), (1,)), 2)
    report = verify_bialgebra(bad, 3)
    assert not report.passed
    assert {v["law"] for v in report.violations} >= {"compatibility"}


def test_report_json_shape(sym):
    bad = sym.with_constant(L, "product", [(1,), (1,)], (1, 1), 3)
    doc = json.loads(verify_duality(bad, 2).to_json())
    assert set(doc) == {"check", "rank", "violations"}
    assert doc["check"] == "duality" and doc["rank"] == 2
    assert doc["violations"][0]["triple"] == ["p[1]", "p[1]", "s[1,1]"]


def test_negative_constants_rejected(sym):
    bad = sym.with_constant(U, "product", [(1,), (1,)], (2,), -1)
    with pytest.raises(StructureError, match="negative"):
        bad.product_constants(U, (1,), (1,))


def test_degree_breaking_provider_rejected():
    h = HopfPair(
        "toy-partitions",
        PARTITION,
        partitions_of,
        products={L: lambda a, b: {(9,): 1}, U: lambda a, b: {(9,): 1}},
        coproducts={L: lambda c: {}, U: lambda c: {}},
    )
    with pytest.raises(StructureError, match="degree"):
        h.product_constants(U, (1,), (1,))


def test_unknown_label_rejected(sym):
    with pytest.raises(StructureError):
        sym.product_constants(U, (1, 2), (1,))


def test_all_constants_nonnegative_and_additive(sym, nq):
    for h in (sym, nq):
        for side in Side:
            for n in range(7):
                for k in range(n + 1):
                    for a in h.basis(k):
                        for b in h.basis(n - k):
                            for c, v in h.product_constants(side, a, b).items():
                                assert v > 0 and sum(c) == n
                for c in h.basis(n):
                    for (a, b), v in h.coproduct_constants(side, c).items():
                        assert v > 0 and sum(a) + sum(b) == n


def test_is_primitive(sym, nq):
    for h in (sym, nq):
        for side in Side:
            for key in degree_one_elements(h, side):
                assert is_primitive(h, side, h.basis_element(side, key.label))
            assert not is_primitive(h, side, h.unit(side))
    assert not is_primitive(sym, U, sym.basis_element(U, (2,)))
    three_s1 = sym.basis_element(U, (1,), 3)
    assert is_primitive(sym, U, three_s1)
    with pytest.raises(ValueError):
        is_primitive(sym, U, sym.basis_element(U, (2,)) + sym.basis_element(U, (1,)))


def test_degree_one_elements(sym, nq):
    assert [repr(k) for k in degree_one_elements(sym, U)] == ["s[1]"]
    assert [k.label for k in degree_one_elements(nq, L)] == [(1,)]
    assert [k.label for k in degree_one_elements(nq, U)] == [(1,)]


def test_memo_is_thread_safe_and_pure():
    h = sym_pair()
    keys = [(a, b) for n in range(6) for k in range(n + 1) for a in h.basis(k) for b in h.basis(n - k)]
    serial = {key: sym_pair().product_constants(U, *key) for key in keys}
    with ThreadPoolExecutor(8) as pool:
        results = list(pool.map(lambda key: h.product_constants(U, *key), keys * 3))
    assert results == [serial[k] for k in keys * 3]


def test_product_rejects_foreign_elements(sym, nq):
    with pytest.raises(StructureError):
        sym.product(U, nq.basis_element(U, (1,)), sym.basis_element(U, (1,)))
    with pytest.raises(StructureError):
        sym.product(U, sym.basis_element(L, (1,)), Element())
