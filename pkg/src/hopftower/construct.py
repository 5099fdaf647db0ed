"""Dual graded graphs from degree-one elements of a Hopf pair.

Vertices are the UPPER basis labels, ranked by degree. For beta in H^1 and
alpha in H_1:

    LEFT:  m(s_l, s_m)  = <p_m, beta s_l>     m'(s_l, s_m) = <alpha p_l, s_m>
    RIGHT: m(s_l, s_m)  = <p_m, s_l beta>     m'(s_l, s_m) = <p_l alpha, s_m>

The ``via="coproduct"`` route evaluates the same numbers as
<D p_m, beta (x) s_l> and <alpha (x) p_l, D s_m>, the adjoint form.
"""

import enum

import numpy as np

from .dgg import GradedGraph
from .graded import BasisId, Element, Side, pair as pairing
from .hopf import HopfPair, StructureError


class Hand(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def _check_degree_one(x: Element, side: Side, pair: HopfPair, what: str):
    if not x:
        raise ValueError(f"{what} must be nonzero")
    if x.side is not side or x.family != pair.family:
        raise ValueError(f"{what} must live on {side.value}/{pair.family}, got {x.side}/{x.family}")
    if x.degree != 1:
        raise ValueError(f"{what} must be homogeneous of degree 1, got degrees {sorted(x.degrees)}")
    if any(c < 0 for _, c in x.items()):
        raise StructureError(f"{what} has negative coefficients")


def _coefficient_matrix(pair, side, x, hand, n, via):
    """M[i, j] = coefficient of basis j (degree n+1) in x*b_i (LEFT) or b_i*x (RIGHT)."""
    src, dst = pair.basis(n), pair.basis(n + 1)
    m = np.zeros((len(src), len(dst)), dtype=np.int64)
    if via == "product":
        col = {lab: j for j, lab in enumerate(dst)}
        for i, lab in enumerate(src):
            b = pair.basis_element(side, lab)
            prod = pair.product(side, x, b) if hand is Hand.LEFT else pair.product(side, b, x)
            for key, c in prod.items():
                m[i, col[key.label]] = c
        return m
    other = side.other
    for j, top in enumerate(dst):
        cop = pair.coproduct_constants(other, top)
        for i, lab in enumerate(src):
            total = 0
            for key, c in x.items():
                term = (key.label, lab) if hand is Hand.LEFT else (lab, key.label)
                total += c * cop.get(term, 0)
            m[i, j] = total
    return m


def _graph(pair, side, x, N, hand, via):
    hand = Hand(hand)
    if via not in ("product", "coproduct"):
        raise ValueError(f"via must be 'product' or 'coproduct', not {via!r}")
    vertices = [list(pair.basis(n)) for n in range(N + 1)]
    names = [[pair.render(v) for v in rank] for rank in vertices]
    matrices = [_coefficient_matrix(pair, side, x, hand, n, via) for n in range(N)]
    return GradedGraph(vertices, matrices, names)


def gamma_from_beta(pair: HopfPair, beta: Element, N: int, side=Hand.LEFT, via="product") -> GradedGraph:
    """The graph whose up operator is multiplication by ``beta`` in H^bullet."""
    _check_degree_one(beta, Side.UPPER, pair, "beta")
    return _graph(pair, Side.UPPER, beta, N, side, via)


def gamma_prime_from_alpha(pair: HopfPair, alpha: Element, N: int, side=Hand.LEFT, via="product") -> GradedGraph:
    """The graph whose multiplicities come from multiplication by ``alpha`` in H_bullet."""
    _check_degree_one(alpha, Side.LOWER, pair, "alpha")
    return _graph(pair, Side.LOWER, alpha, N, side, via)


def differential_coefficient(pair: HopfPair, alpha: Element, beta: Element) -> int:
    """<alpha, beta>, the coefficient predicted for (gamma(beta), gamma'(alpha))."""
    _check_degree_one(alpha, Side.LOWER, pair, "alpha")
    _check_degree_one(beta, Side.UPPER, pair, "beta")
    return pairing(alpha, beta)


def graph_pair(pair: HopfPair, alpha: Element, beta: Element, N: int, side=Hand.LEFT, side_prime=None):
    """Both graphs at once; ``side_prime`` defaults to ``side``."""
    side_prime = side if side_prime is None else side_prime
    return (
        gamma_from_beta(pair, beta, N, side),
        gamma_prime_from_alpha(pair, alpha, N, side_prime),
    )
