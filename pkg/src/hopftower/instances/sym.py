"""Symmetric functions in the Schur basis, as a self-dual pair.

Product constants are Littlewood-Richardson coefficients counted by direct
enumeration of LR skew tableaux. The coproduct uses the same numbers read the
other way: D s_nu = sum c^nu_{lam,mu} s_lam (x) s_mu. Both sides share these
constants, which is what makes the pair self-dual.

:func:`schur_polynomial` is an independent oracle built from semistandard
tableaux; it never touches the LR code.
"""

from collections import defaultdict
from functools import lru_cache

from ..combinat import PARTITION, contains, partitions_of
from ..graded import Side
from ..hopf import HopfPair

FAMILY = "sym"


@lru_cache(maxsize=None)
def lr_count(nu: tuple, lam: tuple, mu: tuple) -> int:
    """Number of LR tableaux of shape nu/lam and content mu.

    Cells are filled in reading order (rows top to bottom, each row right to
    left). A filling is kept when rows weakly increase, columns strictly
    increase, and every prefix of the reading word is a lattice word.
    """
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam):
        return 0
    cells = []
    for i, row_end in enumerate(nu):
        start = lam[i] if i < len(lam) else 0
        cells.extend((i, j) for j in range(row_end - 1, start - 1, -1))
    filling = {}
    used = [0] * len(mu)

    def extend(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        hi = len(mu)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((i - 1, j))
        lo = above + 1 if above is not None else 1
        total = 0
        for v in range(lo, hi + 1):
            if used[v - 1] == mu[v - 1]:
                continue
            if v > 1 and used[v - 2] <= used[v - 1]:
                continue
            used[v - 1] += 1
            filling[(i, j)] = v
            total += extend(pos + 1)
            del filling[(i, j)]
            used[v - 1] -= 1
        return total

    return extend(0)


def lr_coefficients(lam, mu) -> dict:
    """Expansion of s_lam * s_mu in the Schur basis, as {nu: c} with c > 0."""
    lam, mu = tuple(lam), tuple(mu)
    out = {}
    for nu in partitions_of(sum(lam) + sum(mu)):
        c = lr_count(nu, lam, mu)
        if c:
            out[nu] = c
    return out


def schur_coproduct(nu) -> dict:
    """D s_nu as {(lam, mu): c^nu_{lam,mu}}."""
    nu = tuple(nu)
    out = {}
    for k in range(sum(nu) + 1):
        for lam in partitions_of(k):
            if not contains(nu, lam):
                continue
            for mu in partitions_of(sum(nu) - k):
                c = lr_count(nu, lam, mu)
                if c:
                    out[(lam, mu)] = c
    return out


def _ssyt(shape, nvars):
    """Yield the content vector of every semistandard tableau of ``shape`` with entries <= nvars."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling = {}
    content = [0] * nvars

    def extend(pos):
        if pos == len(cells):
            yield tuple(content)
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, nvars + 1):
            filling[(i, j)] = v
            content[v - 1] += 1
            yield from extend(pos + 1)
            content[v - 1] -= 1
        filling.pop((i, j), None)

    yield from extend(0)


@lru_cache(maxsize=None)
def _schur_polynomial(lam, nvars):
    poly = defaultdict(int)
    for expo in _ssyt(lam, nvars):
        poly[expo] += 1
    return dict(poly)


def schur_polynomial(lam, nvars: int) -> dict:
    """s_lam(x_1, ..., x_nvars) as {exponent tuple: coefficient}.

    >>> schur_polynomial((2,), 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    True
    """
    return dict(_schur_polynomial(tuple(lam), nvars))


def schur_expand_oracle(lam, mu, nvars: int = 6) -> dict:
    """Schur expansion of s_lam * s_mu recovered from polynomial arithmetic alone.

    The coefficient of x^nu in a symmetric polynomial, for nu a partition,
    equals sum_kappa c_kappa K_{kappa,nu}, and s_kappa has leading monomial
    x^kappa in lex order. Peeling leading terms off therefore yields the c_kappa.
    Only dominant (partition-shaped) monomials of the product are needed.
    """
    lam, mu = tuple(lam), tuple(mu)
    n = sum(lam) + sum(mu)
    if nvars < n:
        raise ValueError(f"need at least {n} variables, got {nvars}")
    p = schur_polynomial(lam, nvars)
    q = schur_polynomial(mu, nvars)
    pad = lambda part: tuple(part) + (0,) * (nvars - len(part))
    dominant = {}
    for nu in partitions_of(n):
        target = pad(nu)
        total = 0
        for expo, c in p.items():
            rest = tuple(t - e for t, e in zip(target, expo))
            if min(rest) >= 0:
                total += c * q.get(rest, 0)
        dominant[nu] = total
    out = {}
    for nu in sorted(dominant, key=pad, reverse=True):
        c = dominant[nu]
        if c == 0:
            continue
        out[nu] = c
        s_nu = schur_polynomial(nu, nvars)
        for kappa in dominant:
            dominant[kappa] -= c * s_nu.get(pad(kappa), 0)
    return out


def sym_pair() -> HopfPair:
    """Sym with Schur bases on both sides; the pairing is the Hall inner product."""
    prod = lambda a, b: lr_coefficients(a, b)
    return HopfPair(
        FAMILY,
        PARTITION,
        partitions_of,
        products={Side.LOWER: prod, Side.UPPER: prod},
        coproducts={Side.LOWER: schur_coproduct, Side.UPPER: schur_coproduct},
    )
