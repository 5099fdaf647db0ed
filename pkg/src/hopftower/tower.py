"""Dimension shadows of a tower of algebras.

A :class:`TowerDims` records, for each rank n, one (dim S, dim P) pair per
simple module S of A_n and its projective cover P. From these,
dim A_n = sum dim P * dim S, and the dimension theorem says this must equal
r^n n! with r = dim A_1.
"""

import json
import math
from dataclasses import dataclass, field

from .dgg import GradedGraph, path_counts, require_same_vertices


class TowerError(ValueError):
    pass


@dataclass(frozen=True)
class TowerDims:
    ranks: tuple

    def __post_init__(self):
        ranks = tuple(tuple((int(s), int(p)) for s, p in rank) for rank in self.ranks)
        if not ranks or ranks[0] != ((1, 1),):
            raise TowerError("rank 0 must be exactly [(1, 1)]")
        for n, rank in enumerate(ranks):
            if not rank:
                raise TowerError(f"rank {n} has no simple modules")
            for s, p in rank:
                if s < 1 or p < 1:
                    raise TowerError(f"rank {n}: dimensions must be positive, got dimS={s}, dimP={p}")
        object.__setattr__(self, "ranks", ranks)

    @property
    def depth(self) -> int:
        return len(self.ranks) - 1

    def to_json_obj(self):
        return {"ranks": [[{"dimS": s, "dimP": p} for s, p in rank] for rank in self.ranks]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1) + "\n"

    @classmethod
    def from_json_obj(cls, obj):
        try:
            return cls(tuple(tuple((e["dimS"], e["dimP"]) for e in rank) for rank in obj["ranks"]))
        except (KeyError, TypeError) as exc:
            raise TowerError(f"malformed dimension table: {exc}") from exc

    @classmethod
    def from_json(cls, text: str):
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json(fh.read())


def tower_from_graph_pair(g: GradedGraph, gp: GradedGraph, N: int) -> TowerDims:
    """dimP from path counts in ``g`` and dimS from path counts in ``gp``, per vertex."""
    require_same_vertices(g, gp, N)
    fp, fs = path_counts(g, N), path_counts(gp, N)
    ranks = []
    for n in range(N + 1):
        row = []
        for v, name in zip(g.vertices[n], g.names[n]):
            if fs[n][v] == 0 or fp[n][v] == 0:
                raise TowerError(f"vertex {name} at rank {n} is unreachable (f_G={fp[n][v]}, f_G'={fs[n][v]})")
            row.append((fs[n][v], fp[n][v]))
        ranks.append(row)
    return TowerDims(tuple(ranks))


def algebra_dimension(t: TowerDims, n: int) -> int:
    """sum over simples of dim P * dim S at rank ``n``."""
    if not 0 <= n <= t.depth:
        raise TowerError(f"rank {n} not present (table stops at {t.depth})")
    return sum(s * p for s, p in t.ranks[n])


@dataclass
class DimensionReport:
    rank: int
    r: int
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row["ok"] for row in self.rows)

    def to_dict(self):
        return {"check": "dimension", "rank": self.rank, "r": self.r, "rows": self.rows,
                "violations": [row for row in self.rows if not row["ok"]]}


def verify_dimension_theorem(t: TowerDims, N: int) -> DimensionReport:
    if N > t.depth:
        raise TowerError(f"rank {N} not present (table stops at {t.depth})")
    r = algebra_dimension(t, 1) if t.depth >= 1 else 1
    report = DimensionReport(N, r)
    for n in range(N + 1):
        dim = algebra_dimension(t, n)
        expected = r**n * math.factorial(n)
        report.rows.append({"n": n, "dim": dim, "expected": expected, "ok": dim == expected})
    return report
