"""Graded graphs truncated at a finite rank, their up/down operators, and
the duality and path-count checks.

A graph of depth ``N`` stores vertex lists for ranks ``0..N`` and integer
matrices ``M[n]`` of shape ``(|V_n|, |V_{n+1}|)`` for ``n < N`` with
``M[n][i, j] = m(V_n[i], V_{n+1}[j])``. The up operator on column vectors is
``x -> M[n].T @ x`` and the down operator is ``y -> M[n] @ y``. Checking the
commutator at rank ``n`` needs ``M[n]``, so a depth-``N`` pair can be checked
at ranks ``0..N-1``.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .graded import INT64_MAX


class VertexMismatchError(ValueError):
    """Two graphs do not share vertex sets rank by rank."""


class NotDualError(ValueError):
    """Fomin's identity was requested for a pair that failed the duality check."""


def _bound(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


def checked_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a @ b`` in int64, refusing inputs whose product could overflow."""
    if a.size and b.size:
        worst = int(np.abs(a).sum(axis=1).max()) * _bound(b)
        if worst > INT64_MAX:
            raise OverflowError(f"matrix product may exceed int64 (bound {worst})")
    return a @ b


@dataclass(frozen=True)
class RankVector:
    """Element of Z V supported on one rank, as {vertex: coefficient}."""

    rank: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {v: c for v, c in self.coeffs.items() if c})

    def __eq__(self, other):
        return isinstance(other, RankVector) and (self.rank, self.coeffs) == (other.rank, other.coeffs)


class GradedGraph:
    """Ranked vertices plus nonnegative multiplicity matrices between consecutive ranks."""

    def __init__(self, vertices, matrices, names=None):
        self.vertices = [list(rank) for rank in vertices]
        if not self.vertices or len(self.vertices[0]) != 1:
            raise ValueError("a graded graph needs exactly one vertex of height 0")
        if len(matrices) != len(self.vertices) - 1:
            raise ValueError(f"expected {len(self.vertices) - 1} matrices, got {len(matrices)}")
        self.matrices = []
        for n, m in enumerate(matrices):
            m = np.array(m, dtype=np.int64).reshape(len(self.vertices[n]), len(self.vertices[n + 1]))
            if (m < 0).any():
                raise ValueError(f"negative multiplicity between ranks {n} and {n + 1}")
            m.setflags(write=False)
            self.matrices.append(m)
        if names is None:
            names = [[str(v) for v in rank] for rank in self.vertices]
        self.names = [list(rank) for rank in names]
        self._index = [{v: i for i, v in enumerate(rank)} for rank in self.vertices]

    @property
    def depth(self) -> int:
        return len(self.vertices) - 1

    @property
    def root(self):
        return self.vertices[0][0]

    def multiplicity(self, v, u) -> int:
        for n in range(self.depth):
            if v in self._index[n] and u in self._index[n + 1]:
                return int(self.matrices[n][self._index[n][v], self._index[n + 1][u]])
        return 0

    def edges(self, N=None):
        """Yield (rank, v, u, multiplicity) for every edge below rank ``N``."""
        N = self.depth if N is None else N
        for n in range(min(N, self.depth)):
            m = self.matrices[n]
            for i, j in zip(*np.nonzero(m)):
                yield n, self.vertices[n][i], self.vertices[n + 1][j], int(m[i, j])

    def scaled(self, factor: int) -> "GradedGraph":
        return GradedGraph(self.vertices, [factor * m for m in self.matrices], self.names)

    def truncated(self, N: int) -> "GradedGraph":
        return GradedGraph(self.vertices[: N + 1], self.matrices[:N], self.names[: N + 1])

    def __eq__(self, other):
        return (
            isinstance(other, GradedGraph)
            and self.vertices == other.vertices
            and all(np.array_equal(a, b) for a, b in zip(self.matrices, other.matrices))
        )

    def _vector(self, x: RankVector) -> np.ndarray:
        vec = np.zeros(len(self.vertices[x.rank]), dtype=np.int64)
        for v, c in x.coeffs.items():
            vec[self._index[x.rank][v]] = c
        return vec

    def _rank_vector(self, rank, vec) -> RankVector:
        return RankVector(rank, {v: int(c) for v, c in zip(self.vertices[rank], vec)})


def up_apply(g: GradedGraph, x: RankVector) -> RankVector:
    """U(v) = sum_u m(v, u) u, applied to a vector at rank n."""
    if not 0 <= x.rank < g.depth:
        raise IndexError(f"up operator needs rank {x.rank + 1}, graph stops at {g.depth}")
    vec = checked_matmul(g.matrices[x.rank].T, g._vector(x))
    return g._rank_vector(x.rank + 1, vec)


def down_apply(g: GradedGraph, x: RankVector) -> RankVector:
    """D(v) = sum_u m(u, v) u, applied to a vector at rank n >= 1."""
    if x.rank < 1:
        raise IndexError("down operator is undefined at rank 0")
    if x.rank > g.depth:
        raise IndexError(f"rank {x.rank} beyond graph depth {g.depth}")
    vec = checked_matmul(g.matrices[x.rank - 1], g._vector(x))
    return g._rank_vector(x.rank - 1, vec)


def require_same_vertices(g, gp, N):
    if g.depth < N or gp.depth < N:
        raise IndexError(f"both graphs must reach rank {N}")
    for n in range(N + 1):
        if g.vertices[n] != gp.vertices[n]:
            raise VertexMismatchError(f"vertex sets differ at rank {n}")


@dataclass
class DualityResult:
    """Outcome of :func:`check_duality`; ``r`` is set iff the pair passed."""

    rank: int
    r: int = None
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self):
        return {"check": "dual-graded-graphs", "rank": self.rank, "r": self.r, "violations": self.failures}


def commutator(g: GradedGraph, gp: GradedGraph, n: int) -> np.ndarray:
    """Matrix of D_{gp} U_g - U_g D_{gp} on rank ``n``."""
    du = checked_matmul(gp.matrices[n], g.matrices[n].T)
    if n == 0:
        return du
    return du - checked_matmul(g.matrices[n - 1].T, gp.matrices[n - 1])


def check_duality(g: GradedGraph, gp: GradedGraph, N: int) -> DualityResult:
    """Test D_{gp} U_g - U_g D_{gp} = r Id on ranks 0..N-1 with a single r."""
    require_same_vertices(g, gp, N)
    result = DualityResult(N)
    seen = None
    for n in range(N):
        c = commutator(g, gp, n)
        r = int(c[0, 0])
        if not np.array_equal(c, r * np.eye(len(c), dtype=np.int64)):
            result.failures.append({"rank": n, "reason": "commutator is not scalar", "matrix": c.tolist()})
            continue
        if seen is None:
            seen = (n, r)
        elif r != seen[1]:
            result.failures.append({
                "rank": n,
                "reason": f"coefficient {r} at rank {n} differs from {seen[1]} at rank {seen[0]}",
                "ranks": [seen[0], n],
            })
    if not result.failures and seen is not None:
        result.r = seen[1]
    return result


def path_counts(g: GradedGraph, N: int = None) -> list:
    """f^v for every vertex up to rank N, one {vertex: count} dict per rank.

    f^root = 1 and f^u = sum_v m(v, u) f^v.
    """
    N = g.depth if N is None else N
    if N > g.depth:
        raise IndexError(f"rank {N} beyond graph depth {g.depth}")
    f = np.ones(1, dtype=np.int64)
    out = [{g.root: 1}]
    for n in range(N):
        f = checked_matmul(g.matrices[n].T, f)
        out.append({v: int(c) for v, c in zip(g.vertices[n + 1], f)})
    return out


@dataclass
class FominReport:
    rank: int
    r: int
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row["ok"] for row in self.rows)

    def to_dict(self):
        return {"check": "fomin", "rank": self.rank, "r": self.r, "rows": self.rows,
                "violations": [row for row in self.rows if not row["ok"]]}


def fomin_check(g: GradedGraph, gp: GradedGraph, N: int) -> FominReport:
    """Compare sum_{h(v)=n} f^v_g f^v_gp with r^n n! for n = 0..N.

    The pair must pass :func:`check_duality` up to rank ``N``.
    """
    duality = check_duality(g, gp, N)
    if not duality.passed:
        raise NotDualError(f"pair is not dual up to rank {N}: {duality.failures[0]}")
    r = duality.r
    fg, fgp = path_counts(g, N), path_counts(gp, N)
    report = FominReport(N, r)
    for n in range(N + 1):
        total = sum(fg[n][v] * fgp[n][v] for v in g.vertices[n])
        # r is None only when N == 0, where both sides are 1 whatever r is
        expected = (r**n if n else 1) * math.factorial(n)
        report.rows.append({"n": n, "sum_ff": total, "expected": expected, "ok": total == expected})
    return report


def _dot_id(n, i):
    return f"v{n}_{i}"


def to_dot(g: GradedGraph, N: int = None, name: str = "G") -> str:
    """Graphviz digraph with one cluster per rank and multiplicities as edge labels."""
    N = g.depth if N is None else min(N, g.depth)
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for n in range(N + 1):
        lines.append(f"  subgraph cluster_rank{n} {{")
        lines.append(f"    label=\"rank {n}\";")
        lines.append("    rank=same;")
        for i, label in enumerate(g.names[n]):
            lines.append(f"    {_dot_id(n, i)} [label={json.dumps(label)}];")
        lines.append("  }")
    for n in range(N):
        m = g.matrices[n]
        for i, j in zip(*np.nonzero(m)):
            lines.append(f"  {_dot_id(n, i)} -> {_dot_id(n + 1, j)} [label=\"{int(m[i, j])}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(g: GradedGraph, N: int = None) -> dict:
    N = g.depth if N is None else min(N, g.depth)
    ranks = []
    for n in range(N + 1):
        matrix = g.matrices[n].tolist() if n < N else []
        ranks.append({"vertices": g.names[n], "matrix": matrix})
    return {"ranks": ranks}


def to_json(g: GradedGraph, N: int = None) -> str:
    """``{"ranks": [{"vertices": [...], "matrix": [[...]]}, ...]}``; the last rank has no matrix."""
    return json.dumps(to_json_obj(g, N), indent=1) + "\n"
