"""Noncommutative symmetric functions (ribbon basis) paired with
quasisymmetric functions (fundamental basis).

LOWER is NSym with basis R_alpha, UPPER is QSym with basis F_alpha, and
<R_alpha, F_beta> = delta. The rules implemented directly are

* D F_alpha: cut the ribbon of alpha after each of its n cells (and before
  the first), every term with multiplicity one;
* R_alpha R_beta = R_{alpha.beta} + R_{alpha|beta}, concatenation and near
  concatenation (last part of alpha merged with the first part of beta);
* F_alpha F_beta: shuffle a permutation with descent composition alpha with a
  shifted permutation with descent composition beta and collect descent
  compositions.

D R_gamma is the transpose of the F product. The first two rules are written
independently of each other, so the duality sweep checks them against each
other rather than restating a construction.
"""

from collections import defaultdict
from functools import lru_cache
from itertools import combinations

from ..combinat import (
    COMPOSITION,
    composition_from_set,
    compositions_of,
    descent_composition,
    descent_representative,
    partial_sums,
)
from ..graded import Side
from ..hopf import HopfPair

FAMILY = "nsym-qsym"


def _restrict(alpha, lo, hi):
    """Composition of hi-lo recording the descents of alpha strictly inside (lo, hi)."""
    cuts = [d - lo for d in partial_sums(alpha) if lo < d < hi]
    return composition_from_set(cuts, hi - lo)


def qsym_fundamental_coproduct(alpha) -> dict:
    """D F_alpha as {(beta, gamma): 1}."""
    alpha = tuple(alpha)
    n = sum(alpha)
    return {(_restrict(alpha, 0, k), _restrict(alpha, k, n)): 1 for k in range(n + 1)}


def nsym_ribbon_product(alpha, beta) -> dict:
    """R_alpha R_beta as {gamma: 1}."""
    alpha, beta = tuple(alpha), tuple(beta)
    if not alpha or not beta:
        return {alpha + beta: 1}
    return {alpha + beta: 1, alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:]: 1}


@lru_cache(maxsize=None)
def _shuffle_product(alpha, beta):
    m, n = sum(alpha), sum(beta)
    u = descent_representative(alpha)
    v = tuple(x + m for x in descent_representative(beta))
    out = defaultdict(int)
    for slots in combinations(range(m + n), m):
        word = [0] * (m + n)
        chosen = set(slots)
        ui = iter(u)
        vi = iter(v)
        for pos in range(m + n):
            word[pos] = next(ui) if pos in chosen else next(vi)
        out[descent_composition(word)] += 1
    return dict(out)


def qsym_fundamental_product(alpha, beta) -> dict:
    """F_alpha F_beta as {gamma: multiplicity}."""
    return dict(_shuffle_product(tuple(alpha), tuple(beta)))


@lru_cache(maxsize=None)
def _ribbon_coproduct_table(n):
    table = defaultdict(dict)
    for k in range(n + 1):
        for a in compositions_of(k):
            for b in compositions_of(n - k):
                for g, c in _shuffle_product(a, b).items():
                    table[g][(a, b)] = c
    return dict(table)


def nsym_ribbon_coproduct(gamma) -> dict:
    """D R_gamma = sum <R_gamma, F_a F_b> R_a (x) R_b."""
    gamma = tuple(gamma)
    return dict(_ribbon_coproduct_table(sum(gamma)).get(gamma, {}))


def nsym_qsym_pair() -> HopfPair:
    return HopfPair(
        FAMILY,
        COMPOSITION,
        compositions_of,
        products={Side.LOWER: nsym_ribbon_product, Side.UPPER: qsym_fundamental_product},
        coproducts={Side.LOWER: nsym_ribbon_coproduct, Side.UPPER: qsym_fundamental_coproduct},
    )
