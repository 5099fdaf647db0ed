import json
import re
from math import factorial

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopftower.combinat import partitions_of, young_covers
from hopftower.dgg import (
    GradedGraph,
    NotDualError,
    RankVector,
    VertexMismatchError,
    check_duality,
    checked_matmul,
    down_apply,
    fomin_check,
    path_counts,
    to_dot,
    to_json,
    up_apply,
)


def young_graph(N, weight=1):
    vertices = [partitions_of(n) for n in range(N + 1)]
    matrices = []
    for n in range(N):
        col = {mu: j for j, mu in enumerate(vertices[n + 1])}
        m = np.zeros((len(vertices[n]), len(vertices[n + 1])), dtype=np.int64)
        for i, lam in enumerate(vertices[n]):
            for mu in young_covers(lam):
                m[i, col[mu]] = weight
        matrices.append(m)
    names = [["[" + ",".join(map(str, v)) + "]" for v in rank] for rank in vertices]
    return GradedGraph(vertices, matrices, names)


def syt_count(lam, memo={}):
    """Standard tableaux of shape lam by removing corners; no hook formula."""
    lam = tuple(lam)
    if sum(lam) <= 1:
        return 1
    if lam not in memo:
        total = 0
        for i in range(len(lam)):
            if i == len(lam) - 1 or lam[i] > lam[i + 1]:
                smaller = lam[:i] + (lam[i] - 1,) + lam[i + 1:]
                total += syt_count(tuple(p for p in smaller if p))
        memo[lam] = total
    return memo[lam]


Y = young_graph(7)


def test_graph_invariants():
    with pytest.raises(ValueError):
        GradedGraph([[1, 2]], [])
    with pytest.raises(ValueError):
        GradedGraph([["a"], ["b"]], [[[-1]]])
    assert Y.root == ()
    assert Y.multiplicity((1,), (1, 1)) == 1
    assert Y.multiplicity((1,), (1, 1, 1)) == 0


def test_up_apply():
    assert up_apply(Y, RankVector(0, {(): 1})) == RankVector(1, {(1,): 1})
    assert up_apply(Y, RankVector(1, {(1,): 1})) == RankVector(2, {(2,): 1, (1, 1): 1})
    assert up_apply(Y, RankVector(3, {})) == RankVector(4, {})
    with pytest.raises(IndexError):
        up_apply(Y, RankVector(7, {}))


def test_down_apply():
    assert down_apply(Y, RankVector(3, {(2, 1): 1})) == RankVector(2, {(2,): 1, (1, 1): 1})
    assert down_apply(Y.scaled(3), RankVector(1, {(1,): 1})) == RankVector(0, {(): 3})
    assert down_apply(Y, RankVector(2, {})) == RankVector(1, {})
    with pytest.raises(IndexError):
        down_apply(Y, RankVector(0, {(): 1}))


def test_young_self_dual():
    result = check_duality(Y, Y, 7)
    assert result.passed and result.r == 1


def test_doubled_gamma():
    assert check_duality(Y.scaled(2), Y, 7).r == 2


def test_deleted_edge_fails_at_broken_rank():
    matrices = [m.copy() for m in Y.matrices]
    matrices[3][Y.vertices[3].index((2, 1)), Y.vertices[4].index((2, 2))] = 0
    broken = GradedGraph(Y.vertices, matrices, Y.names)
    result = check_duality(broken, Y, 7)
    assert not result.passed and result.r is None
    assert [f["rank"] for f in result.failures] == [3, 4]
    assert "not scalar" in result.failures[0]["reason"]


def test_vertex_mismatch():
    other = GradedGraph([[()], ["x"]], [[[1]]])
    with pytest.raises(VertexMismatchError):
        check_duality(Y.truncated(1), other, 1)


def test_nonconstant_coefficient_names_both_ranks():
    # a chain with multiplicities 1, 2: commutators 1 then 4 - 1 = 3
    chain = GradedGraph([[0], [1], [2]], [[[1]], [[2]]])
    result = check_duality(chain, chain, 2)
    assert not result.passed
    assert result.failures[0]["ranks"] == [0, 1]


def test_path_counts():
    f = path_counts(Y, 7)
    assert f[0] == {(): 1}
    assert f[3][(2, 1)] == 2
    for n in range(8):
        for lam in partitions_of(n):
            assert f[n][lam] == syt_count(lam)
    f2 = path_counts(Y.scaled(2), 7)
    for n in range(8):
        for lam in partitions_of(n):
            assert f2[n][lam] == 2**n * f[n][lam]


def test_fomin_young():
    report = fomin_check(Y, Y, 7)
    assert report.passed
    assert report.rows[3] == {"n": 3, "sum_ff": 6, "expected": 6, "ok": True}
    assert report.rows[0]["sum_ff"] == 1


def test_fomin_doubled():
    report = fomin_check(Y.scaled(2), Y, 5)
    assert report.r == 2 and report.passed
    assert report.rows[3]["sum_ff"] == 48


def test_fomin_requires_duality():
    chain = GradedGraph([[0], [1], [2]], [[[1]], [[2]]])
    with pytest.raises(NotDualError):
        fomin_check(chain, chain, 2)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 6))
def test_global_scaling_keeps_fomin(a, b, N):
    g, gp = Y.scaled(a).truncated(N), Y.scaled(b).truncated(N)
    d = check_duality(g, gp, N)
    assert d.r == a * b
    assert fomin_check(g, gp, N).passed


def test_swapped_pair_has_same_coefficient():
    g, gp = Y.scaled(2), Y.scaled(3)
    assert check_duality(g, gp, 6).r == check_duality(gp, g, 6).r == 6


def test_checked_matmul_guards_overflow():
    a = np.array([[2**40, 2**40]], dtype=np.int64)
    b = np.array([[2**30], [1]], dtype=np.int64)
    with pytest.raises(OverflowError):
        checked_matmul(a, b)
    assert checked_matmul(np.array([[2, 3]]), np.array([[4], [5]])).tolist() == [[23]]


def test_dot_small():
    text = to_dot(Y, 1)
    assert len(re.findall(r"^\s*v\d+_\d+ \[label=", text, re.M)) == 2
    edges = re.findall(r"-> v\d+_\d+ \[label=\"(\d+)\"\]", text)
    assert edges == ["1"]
    doubled = to_dot(Y.scaled(2), 3)
    assert set(re.findall(r"-> v\d+_\d+ \[label=\"(\d+)\"\]", doubled)) == {"2"}
    assert len(re.findall("->", doubled)) == len(re.findall("->", to_dot(Y, 3)))
    assert to_dot(Y, 4) == to_dot(young_graph(7), 4)


def test_json_round_trip():
    doc = json.loads(to_json(Y, 2))
    assert [r["vertices"] for r in doc["ranks"]] == [["[]"], ["[1]"], ["[2]", "[1,1]"]]
    assert doc["ranks"][1]["matrix"] == [[1, 1]]
    assert to_json(Y, 5) == to_json(young_graph(7), 5)


def test_fomin_sum_is_n_factorial_by_syt_identity():
    for n in range(8):
        assert sum(syt_count(lam) ** 2 for lam in partitions_of(n)) == factorial(n)
