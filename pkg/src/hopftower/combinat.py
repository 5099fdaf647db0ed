"""Integer partitions, compositions and permutation descents.

Partitions and compositions are plain tuples of positive integers. The empty
tuple is the unique object of size 0 in both cases.
"""

from functools import lru_cache

PARTITION = "partition"
COMPOSITION = "composition"


def is_partition(parts) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_composition(parts) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts)


def _check_n(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"expected a nonnegative integer, got {n!r}")


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    _check_n(n)
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


def compositions_of(n: int) -> list[tuple[int, ...]]:
    """All compositions of ``n`` in lexicographic order (``2**(n-1)`` of them for n >= 1)."""
    _check_n(n)
    return list(_compositions(n))


def partition_key(parts):
    """Sort key realising reverse-lex order among partitions of one size."""
    return (sum(parts), tuple(-p for p in parts))


def composition_key(parts):
    return (sum(parts), tuple(parts))


def young_covers(lam) -> list[tuple[int, ...]]:
    """Partitions obtained from ``lam`` by adding one cell, reverse-lex ordered."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam!r}")
    covers = set()
    for i in range(len(lam)):
        if i == 0 or lam[i - 1] > lam[i]:
            covers.add(lam[:i] + (lam[i] + 1,) + lam[i + 1:])
    covers.add(lam + (1,))
    return sorted(covers, key=partition_key)


def contains(outer, inner) -> bool:
    """True iff the diagram of ``inner`` fits inside the diagram of ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def descent_set(w) -> list[int]:
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def composition_from_set(positions, n: int) -> tuple[int, ...]:
    """Composition of ``n`` whose partial sums (other than ``n``) are ``positions``."""
    if n == 0:
        return ()
    cuts = [0] + sorted(positions) + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def partial_sums(alpha) -> list[int]:
    """Descent set of a composition: its partial sums, excluding the total."""
    out, acc = [], 0
    for part in alpha[:-1]:
        acc += part
        out.append(acc)
    return out


def descent_composition(w) -> tuple[int, ...]:
    """Composition recording the descent positions of a 1-based permutation.

    >>> descent_composition((2, 1, 4, 3))
    (1, 2, 1)
    """
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w!r}")
    return composition_from_set(descent_set(w), len(w))


def descent_representative(alpha) -> tuple[int, ...]:
    """A permutation whose descent composition is ``alpha``.

    Each block is increasing and uses larger values than every later block,
    so descents occur exactly at block boundaries.
    """
    n = sum(alpha)
    word, top = [], n
    for part in alpha:
        word.extend(range(top - part + 1, top + 1))
        top -= part
    return tuple(word)


def render(label, kind: str) -> str:
    """Text form used in DOT/JSON: partitions as ``[3,1]``, compositions as ``(2,1,1)``."""
    body = ",".join(str(p) for p in label)
    return f"[{body}]" if kind == PARTITION else f"({body})"

