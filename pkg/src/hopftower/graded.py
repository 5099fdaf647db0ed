"""Sparse integer linear combinations over labelled graded bases.

Coefficients are Python ints kept inside the signed 64-bit range; any result
outside it raises ``OverflowError`` instead of silently growing or wrapping.
"""

import enum
import json
from dataclasses import dataclass

from .combinat import COMPOSITION, PARTITION, composition_key, partition_key, render

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class Side(enum.Enum):
    LOWER = "lower"  # H_bullet, the "p" side (projectives)
    UPPER = "upper"  # H^bullet, the "s" side (simples)

    @property
    def other(self):
        return Side.UPPER if self is Side.LOWER else Side.LOWER


class MismatchError(ValueError):
    """Operands live on different sides or in different families."""


_LABEL_KINDS = {}


def register_family(family: str, kind: str) -> None:
    if kind not in (PARTITION, COMPOSITION):
        raise ValueError(f"unknown label kind {kind!r}")
    _LABEL_KINDS[family] = kind


def label_kind(family: str) -> str:
    return _LABEL_KINDS.get(family, COMPOSITION)


def checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"coefficient {value} leaves the signed 64-bit range")
    return value


@dataclass(frozen=True)
class BasisId:
    side: Side
    family: str
    label: tuple

    @property
    def degree(self) -> int:
        return sum(self.label)

    def sort_key(self):
        kind = label_kind(self.family)
        key = partition_key(self.label) if kind == PARTITION else composition_key(self.label)
        return (self.side.value, self.family, key)

    def render(self) -> str:
        return render(self.label, label_kind(self.family))

    def __repr__(self):
        prefix = "p" if self.side is Side.LOWER else "s"
        return f"{prefix}{self.render()}"


def _common(keys, what):
    sides = {k.side for k in keys}
    families = {k.family for k in keys}
    if len(sides) > 1 or len(families) > 1:
        raise MismatchError(f"{what} mixes sides/families: {sorted(map(repr, keys))}")
    return (sides.pop(), families.pop()) if keys else (None, None)


class Element:
    """An immutable finite integer combination of basis elements of one side.

    The zero element carries no side or family, so folds may start from it.
    """

    __slots__ = ("_terms", "side", "family")

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            if not isinstance(key, BasisId):
                raise TypeError(f"Element keys must be BasisId, got {key!r}")
            c = checked(int(c))
            if c:
                clean[key] = c
        self.side, self.family = _common(list(clean), "Element")
        self._terms = dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key()))

    @classmethod
    def basis(cls, side: Side, family: str, label, coeff: int = 1):
        return cls({BasisId(side, family, tuple(label)): coeff})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coeff(self, key: BasisId) -> int:
        return self._terms.get(key, 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        return isinstance(other, Element) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _compatible(self, other):
        if self and other and (self.side, self.family) != (other.side, other.family):
            raise MismatchError(
                f"cannot combine {self.side}/{self.family} with {other.side}/{other.family}"
            )

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._compatible(other)
        out = dict(self._terms)
        for key, c in other.items():
            out[key] = checked(out.get(key, 0) + c)
        return Element(out)

    def __neg__(self):
        return Element({k: -c for k, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return Element({k: checked(scalar * c) for k, c in self.items()})

    @property
    def degrees(self) -> set:
        return {k.degree for k in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    @property
    def degree(self):
        """Degree of a nonzero homogeneous element; ``None`` otherwise."""
        degs = self.degrees
        return degs.pop() if len(degs) == 1 else None

    def to_json_obj(self):
        return [{"label": k.render(), "coeff": c} for k, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{k!r}" for k, c in self.items())


def add(a: Element, b: Element) -> Element:
    return a + b


def scale(c: int, a: Element) -> Element:
    return c * a


def zero() -> Element:
    return Element()


class TensorElement:
    """Finite integer combination of pairs of basis elements from one side."""

    __slots__ = ("_terms", "side", "family")

    def __init__(self, terms=None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            c = checked(int(c))
            if c:
                clean[(a, b)] = c
        self.side, self.family = _common([k for pair in clean for k in pair], "TensorElement")
        self._terms = dict(
            sorted(clean.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))
        )

    @classmethod
    def simple(cls, a: Element, b: Element):
        """The tensor ``a (x) b`` of two elements."""
        out = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                out[(ka, kb)] = checked(ca * cb)
        return cls(out)

    def items(self):
        return self._terms.items()

    def coeff(self, a: BasisId, b: BasisId) -> int:
        return self._terms.get((a, b), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self and other and (self.side, self.family) != (other.side, other.family):
            raise MismatchError("cannot add tensors from different sides/families")
        out = dict(self._terms)
        for key, c in other.items():
            out[key] = checked(out.get(key, 0) + c)
        return TensorElement(out)

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return TensorElement({k: checked(scalar * c) for k, c in self.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{a!r}(x){b!r}" for (a, b), c in self.items())


def _dual_key(key: BasisId) -> BasisId:
    return BasisId(key.side.other, key.family, key.label)


def pair(x: Element, y: Element) -> int:
    """The pairing with <p_lam, s_mu> = delta; ``x`` on LOWER, ``y`` on UPPER."""
    if x and x.side is not Side.LOWER or y and y.side is not Side.UPPER:
        raise MismatchError("pair expects a LOWER element then an UPPER element")
    if x and y and x.family != y.family:
        raise MismatchError(f"families differ: {x.family} vs {y.family}")
    total = 0
    for key, c in x.items():
        total = checked(total + c * y.coeff(_dual_key(key)))
    return total


def pair_tensor(t: TensorElement, u: TensorElement) -> int:
    """Factorwise pairing of a LOWER tensor with an UPPER tensor."""
    if t and t.side is not Side.LOWER or u and u.side is not Side.UPPER:
        raise MismatchError("pair_tensor expects a LOWER tensor then an UPPER tensor")
    if t and u and t.family != u.family:
        raise MismatchError(f"families differ: {t.family} vs {u.family}")
    total = 0
    for (a, b), c in t.items():
        total = checked(total + c * u.coeff(_dual_key(a), _dual_key(b)))
    return total
