"""Pairs of graded dual bialgebras given by nonnegative structure constants.

A :class:`HopfPair` wraps label-level providers for the product and coproduct
on each side. Constants are memoised per input and validated on first use:
negative constants and degree-breaking terms raise :class:`StructureError`.
The verifiers sweep all basis triples up to a degree cutoff and return a
:class:`Report` of violations instead of raising.
"""

import json
import threading
from collections import defaultdict
from dataclasses import dataclass, field

from .graded import (
    BasisId,
    Element,
    Side,
    TensorElement,
    checked,
    register_family,
)
from .combinat import render


class StructureError(ValueError):
    """A provider returned a negative, non-homogeneous or unknown constant."""


@dataclass
class Report:
    check: str
    rank: int
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {"check": self.check, "rank": self.rank, "violations": self.violations}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class _Memo:
    """Thread-safe memo table; values are computed outside the lock."""

    def __init__(self, fn):
        self._fn = fn
        self._table = {}
        self._lock = threading.Lock()

    def __call__(self, *key):
        with self._lock:
            if key in self._table:
                return self._table[key]
        value = self._fn(*key)
        with self._lock:
            return self._table.setdefault(key, value)


class HopfPair:
    """Structure-constant provider for a LOWER/UPPER pair of dual graded bialgebras.

    ``basis(n)`` lists the labels of degree ``n`` (shared by both sides, the
    pairing being <p_a, s_b> = delta_ab). ``products[side](a, b)`` returns a
    dict label -> constant; ``coproducts[side](c)`` returns a dict
    (label, label) -> constant.
    """

    def __init__(self, family, kind, basis, products, coproducts, unit=()):
        self.family = family
        self.kind = kind
        self.unit_label = tuple(unit)
        self._basis_fn = basis
        self._products = dict(products)
        self._coproducts = dict(coproducts)
        register_family(family, kind)
        self._basis = _Memo(lambda n: tuple(tuple(lab) for lab in basis(n)))
        self._basis_set = _Memo(lambda n: frozenset(self._basis(n)))
        self._prod = {s: _Memo(self._checked_product(s)) for s in Side}
        self._coprod = {s: _Memo(self._checked_coproduct(s)) for s in Side}

    def __repr__(self):
        return f"HopfPair({self.family!r})"

    # basis

    def basis(self, n: int) -> tuple:
        return self._basis(n)

    def basis_ids(self, side: Side, n: int) -> list:
        return [BasisId(side, self.family, lab) for lab in self.basis(n)]

    def basis_element(self, side: Side, label, coeff: int = 1) -> Element:
        label = tuple(label)
        self._require_label(label)
        return Element.basis(side, self.family, label, coeff)

    def unit(self, side: Side) -> Element:
        return Element.basis(side, self.family, self.unit_label)

    def render(self, label) -> str:
        return render(label, self.kind)

    def _require_label(self, label):
        if label not in self._basis_set(sum(label)):
            raise StructureError(f"{self.family}: unknown label {label!r}")

    # label-level constants

    def _checked_product(self, side):
        provider = self._products[side]

        def compute(a, b):
            self._require_label(a)
            self._require_label(b)
            deg = sum(a) + sum(b)
            out = {}
            for c, k in provider(a, b).items():
                c = tuple(c)
                self._validate(k, f"product {a}*{b} -> {c}", side)
                if sum(c) != deg:
                    raise StructureError(f"{self.family}: product {a}*{b} has term {c} of wrong degree")
                self._require_label(c)
                if k:
                    out[c] = checked(k)
            return out

        return compute

    def _checked_coproduct(self, side):
        provider = self._coproducts[side]

        def compute(c):
            self._require_label(c)
            out = {}
            for (a, b), k in provider(c).items():
                a, b = tuple(a), tuple(b)
                self._validate(k, f"coproduct {c} -> {a}(x){b}", side)
                if sum(a) + sum(b) != sum(c):
                    raise StructureError(f"{self.family}: coproduct of {c} has term {a}(x){b} of wrong degree")
                self._require_label(a)
                self._require_label(b)
                if k:
                    out[(a, b)] = checked(k)
            return out

        return compute

    def _validate(self, k, where, side):
        if not isinstance(k, int):
            raise StructureError(f"{self.family}/{side.value}: non-integer constant {k!r} in {where}")
        if k < 0:
            raise StructureError(f"{self.family}/{side.value}: negative constant {k} in {where}")

    def product_constants(self, side: Side, a, b) -> dict:
        return self._prod[side](tuple(a), tuple(b))

    def coproduct_constants(self, side: Side, c) -> dict:
        return self._coprod[side](tuple(c))

    # element-level operations

    def _check_element(self, side, x):
        if x and (x.side is not side or x.family != self.family):
            raise StructureError(f"element on {x.side}/{x.family}, expected {side}/{self.family}")

    def product(self, side: Side, x: Element, y: Element) -> Element:
        self._check_element(side, x)
        self._check_element(side, y)
        out = defaultdict(int)
        for ka, ca in x.items():
            for kb, cb in y.items():
                for c, k in self.product_constants(side, ka.label, kb.label).items():
                    out[c] = checked(out[c] + checked(ca * cb) * k)
        return Element({BasisId(side, self.family, c): k for c, k in out.items()})

    def coproduct(self, side: Side, x: Element) -> TensorElement:
        self._check_element(side, x)
        out = defaultdict(int)
        for kx, cx in x.items():
            for ab, k in self.coproduct_constants(side, kx.label).items():
                out[ab] = checked(out[ab] + cx * k)
        mk = lambda lab: BasisId(side, self.family, lab)
        return TensorElement({(mk(a), mk(b)): k for (a, b), k in out.items()})

    def counit(self, x: Element) -> int:
        return x.coeff(BasisId(x.side, self.family, self.unit_label)) if x else 0

    # fault injection

    def with_constant(self, side: Side, op: str, inputs, output, value: int) -> "HopfPair":
        """Copy of this pair with one structure constant replaced.

        ``op`` is ``"product"`` (``inputs`` = (a, b), ``output`` = c) or
        ``"coproduct"`` (``inputs`` = (c,), ``output`` = (a, b)).
        """
        inputs = tuple(tuple(i) for i in inputs)
        output = tuple(output) if op == "product" else tuple(tuple(o) for o in output)
        products = dict(self._products)
        coproducts = dict(self._coproducts)
        if op == "product":
            base = products[side]

            def patched(a, b):
                out = dict(base(a, b))
                if (tuple(a), tuple(b)) == inputs:
                    out[output] = value
                return out

            products[side] = patched
        elif op == "coproduct":
            base = coproducts[side]

            def patched(c):
                out = dict(base(c))
                if (tuple(c),) == inputs:
                    out[output] = value
                return out

            coproducts[side] = patched
        else:
            raise ValueError(f"op must be 'product' or 'coproduct', not {op!r}")
        return HopfPair(self.family, self.kind, self._basis_fn, products, coproducts, self.unit_label)


def _name(pair, side, label):
    return repr(BasisId(side, pair.family, label))


def _fmt(d, pair, side):
    """Render a label-keyed dict for a violation record."""
    out = {}
    for key, v in d.items():
        if key and isinstance(key[0], tuple):
            name = "(x)".join(_name(pair, side, lab) for lab in key)
        else:
            name = _name(pair, side, key)
        out[name] = v
    return dict(sorted(out.items()))


def verify_duality(pair: HopfPair, N: int) -> Report:
    """Check <x*y, z> = <x(x)y, Dz> and <Dx, y(x)z> = <x, y*z> on basis triples.

    Every triple whose output degree is at most ``N`` is examined.
    """
    if N < 0:
        raise ValueError("rank cutoff must be nonnegative")
    L, U = Side.LOWER, Side.UPPER
    report = Report("duality", N)
    for n in range(N + 1):
        top = pair.basis(n)
        for k in range(n + 1):
            for a in pair.basis(k):
                for b in pair.basis(n - k):
                    low = pair.product_constants(L, a, b)
                    up = pair.product_constants(U, a, b)
                    for c in top:
                        lhs = low.get(c, 0)
                        rhs = pair.coproduct_constants(U, c).get((a, b), 0)
                        if lhs != rhs:
                            report.violations.append({
                                "law": "<x*y,z> = <x(x)y,Dz>",
                                "triple": [_name(pair, L, a), _name(pair, L, b), _name(pair, U, c)],
                                "lhs": lhs, "rhs": rhs,
                            })
                        lhs = pair.coproduct_constants(L, c).get((a, b), 0)
                        rhs = up.get(c, 0)
                        if lhs != rhs:
                            report.violations.append({
                                "law": "<Dx,y(x)z> = <x,y*z>",
                                "triple": [_name(pair, L, c), _name(pair, U, a), _name(pair, U, b)],
                                "lhs": lhs, "rhs": rhs,
                            })
    return report


def _mul(pair, side, u, v):
    out = defaultdict(int)
    for a, ca in u.items():
        for b, cb in v.items():
            for c, k in pair.product_constants(side, a, b).items():
                out[c] += ca * cb * k
    return {k: v for k, v in out.items() if v}


def verify_bialgebra(pair: HopfPair, N: int) -> Report:
    """Unit, counit, (co)associativity and compatibility D(xy) = D(x)D(y) up to degree ``N``."""
    if N < 0:
        raise ValueError("rank cutoff must be nonnegative")
    report = Report("bialgebra", N)
    one = pair.unit_label

    def fail(side, law, labels, lhs, rhs):
        report.violations.append({
            "side": side.value,
            "law": law,
            "triple": [_name(pair, side, lab) for lab in labels],
            "lhs": _fmt(lhs, pair, side),
            "rhs": _fmt(rhs, pair, side),
        })

    for side in Side:
        prod = lambda a, b: pair.product_constants(side, a, b)
        cop = lambda c: pair.coproduct_constants(side, c)
        for n in range(N + 1):
            for a in pair.basis(n):
                expect = {a: 1}
                if prod(one, a) != expect or prod(a, one) != expect:
                    fail(side, "unit", (a,), prod(one, a), prod(a, one))
                d = cop(a)
                left = {y: k for (x, y), k in d.items() if x == one}
                right = {x: k for (x, y), k in d.items() if y == one}
                if left != expect or right != expect:
                    fail(side, "counit", (a,), left, right)
                lhs, rhs = defaultdict(int), defaultdict(int)
                for (x, y), k in d.items():
                    for (x1, x2), k1 in cop(x).items():
                        lhs[(x1, x2, y)] += k * k1
                    for (y1, y2), k2 in cop(y).items():
                        rhs[(x, y1, y2)] += k * k2
                lhs = {t: v for t, v in lhs.items() if v}
                rhs = {t: v for t, v in rhs.items() if v}
                if lhs != rhs:
                    fail(side, "coassociativity", (a,), lhs, rhs)

        for n in range(N + 1):
            for i in range(n + 1):
                for a in pair.basis(i):
                    for b in pair.basis(n - i):
                        ab = prod(a, b)
                        lhs = defaultdict(int)
                        for c, k in ab.items():
                            for t, kt in cop(c).items():
                                lhs[t] += k * kt
                        rhs = defaultdict(int)
                        for (a1, a2), ka in cop(a).items():
                            for (b1, b2), kb in cop(b).items():
                                for c1, k1 in prod(a1, b1).items():
                                    for c2, k2 in prod(a2, b2).items():
                                        rhs[(c1, c2)] += ka * kb * k1 * k2
                        lhs = {t: v for t, v in lhs.items() if v}
                        rhs = {t: v for t, v in rhs.items() if v}
                        if lhs != rhs:
                            fail(side, "compatibility", (a, b), lhs, rhs)
                        for j in range(N - n + 1):
                            for c in pair.basis(j):
                                left = _mul(pair, side, ab, {c: 1})
                                right = _mul(pair, side, {a: 1}, prod(b, c))
                                if left != right:
                                    fail(side, "associativity", (a, b, c), left, right)
    return report


def is_primitive(pair: HopfPair, side: Side, x: Element) -> bool:
    """True iff D(x) = 1(x)x + x(x)1."""
    if not x.is_homogeneous():
        raise ValueError(f"is_primitive needs a homogeneous element, got {x!r}")
    one = pair.unit(side)
    return pair.coproduct(side, x) == TensorElement.simple(one, x) + TensorElement.simple(x, one)


def degree_one_elements(pair: HopfPair, side: Side) -> list:
    return pair.basis_ids(side, 1)
