"""Extended Dynkin diagrams and Borel-de Siebenthal moves.

A connected maximal-rank subgroup is recorded as a *lineage*: one
:class:`Branch` per simple factor of the ambient group, where a branch either
is left alone or carries the move applied to it together with one child
branch per simple component of the move's result.  The flat ``chain`` of a
subgroup is the pre-order listing of those moves, each tagged with the path
of the branch it acts on.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .rootsys import (
    Matrix,
    SemisimpleType,
    SimpleType,
    cartan_matrix,
    generate_roots,
    group_invariants,
    identify_cartan,
)

__all__ = [
    "SEMISIMPLE",
    "LEVI",
    "ExtendedDiagram",
    "BdsMove",
    "Branch",
    "MaxRankSubgroup",
    "extended_diagram",
    "semisimple_moves",
    "levi_moves",
    "enumerate_maximal_rank",
    "move_at",
]

SEMISIMPLE = "SemisimpleRemove"
LEVI = "LeviRemove"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class ExtendedDiagram:
    """Node 0 is the affine node ``-alpha_0``; nodes 1..rank are the simple roots."""

    base: SimpleType
    cartan: Matrix  # (rank+1) x (rank+1), same entry convention as cartan_matrix
    marks_ext: tuple[int, ...]
    comarks_ext: tuple[int, ...]

    @property
    def nodes(self) -> range:
        return range(self.base.rank + 1)

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        """``(i, j, bonds)`` for i < j, bonds = product of the two Cartan entries."""
        n = len(self.cartan)
        return [
            (i, j, self.cartan[i][j] * self.cartan[j][i])
            for i in range(n)
            for j in range(i + 1, n)
            if self.cartan[i][j]
        ]

    def remove(self, nodes: Sequence[int]) -> SemisimpleType:
        keep = [i for i in self.nodes if i not in set(nodes)]
        return identify_cartan([[self.cartan[i][j] for j in keep] for i in keep])


@lru_cache(maxsize=None)
def extended_diagram(t: SimpleType) -> ExtendedDiagram:
    rs = generate_roots(t)
    n = rs.rank
    d = rs.root_lengths
    # symmetric form on simple roots: (a_i, a_j) = A[i][j] d_j / 2
    form = [[Fraction(rs.cartan[i][j]) * d[j] / 2 for j in range(n)] for i in range(n)]
    theta = rs.highest_root
    theta_dot = [sum(theta[k] * form[k][j] for k in range(n)) for j in range(n)]
    lengths = [Fraction(2)] + list(d)
    sym = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    sym[0][0] = Fraction(2)
    for j in range(n):
        sym[0][j + 1] = sym[j + 1][0] = -theta_dot[j]
        for k in range(n):
            sym[j + 1][k + 1] = form[j][k]
    ext = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            v = 2 * sym[i][j] / lengths[j]
            assert v.denominator == 1
            row.append(int(v))
        ext.append(tuple(row))
    return ExtendedDiagram(t, tuple(ext), (1,) + rs.marks, (1,) + rs.comarks)


@dataclass(frozen=True)
class BdsMove:
    """One step of diagram surgery on a simple component ``target``.

    ``node`` uses Bourbaki numbering of ``target`` (1-based).  ``path``
    addresses the branch of a lineage the move acts on; it is empty for the
    bare moves returned by :func:`semisimple_moves` and :func:`levi_moves`.
    """

    kind: str
    node: int
    result: SemisimpleType
    torus_delta: int
    comark_at_node: int | None
    target: SimpleType
    path: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "node": self.node,
            "comark": self.comark_at_node,
            "component": str(self.target),
            "path": list(self.path),
        }


@lru_cache(maxsize=None)
def _semisimple_moves(t: SimpleType) -> tuple[BdsMove, ...]:
    ext = extended_diagram(t)
    return tuple(
        BdsMove(SEMISIMPLE, i, ext.remove([i]), 0, ext.comarks_ext[i], t)
        for i in range(1, t.rank + 1)
        if is_prime(ext.marks_ext[i])
    )


def semisimple_moves(t: SimpleType) -> list[BdsMove]:
    """Removals of a prime-mark node from the extended diagram.

    Mark-1 nodes are skipped: removing one gives back a diagram of type ``t``.
    """
    return list(_semisimple_moves(t))


@lru_cache(maxsize=None)
def _levi_moves(t: SimpleType) -> tuple[BdsMove, ...]:
    a = cartan_matrix(t)
    out = []
    for i in range(1, t.rank + 1):
        keep = [k for k in range(t.rank) if k != i - 1]
        res = identify_cartan([[a[r][c] for c in keep] for r in keep])
        out.append(BdsMove(LEVI, i, res, 1, None, t))
    return tuple(out)


def levi_moves(t: SimpleType) -> list[BdsMove]:
    """Levi subgroups of the maximal parabolics: delete one ordinary node."""
    return list(_levi_moves(t))


def move_at(t: SimpleType, kind: str, node: int) -> BdsMove:
    """The move of the given kind at ``node``; ValueError if there is none."""
    pool = _semisimple_moves(t) if kind == SEMISIMPLE else _levi_moves(t)
    for m in pool:
        if m.node == node:
            return m
    if kind == SEMISIMPLE and 1 <= node <= t.rank:
        mark = extended_diagram(t).marks_ext[node]
        raise ValueError(f"node {node} of {t} has mark {mark}, which is not prime")
    raise ValueError(f"{t} has no node {node}")


@dataclass(frozen=True)
class Branch:
    type: SimpleType
    move: BdsMove | None = None
    children: tuple["Branch", ...] = ()

    def leaves(self) -> Iterator[tuple[tuple[int, ...], SimpleType]]:
        if self.move is None:
            yield (), self.type
            return
        for k, ch in enumerate(self.children):
            for p, t in ch.leaves():
                yield (k,) + p, t

    def moves(self) -> Iterator[BdsMove]:
        if self.move is None:
            return
        yield self.move
        for k, ch in enumerate(self.children):
            for m in ch.moves():
                yield replace(m, path=(k,) + m.path)

    def torus(self) -> int:
        if self.move is None:
            return 0
        return self.move.torus_delta + sum(c.torus() for c in self.children)

    def apply(self, path: tuple[int, ...], move: BdsMove) -> "Branch":
        if not path:
            if self.move is not None:
                raise ValueError("path does not address an untouched component")
            if move.target != self.type:
                raise ValueError(f"move targets {move.target}, component is {self.type}")
            kids = tuple(Branch(c) for c in move.result)
            return Branch(self.type, replace(move, path=()), kids)
        if self.move is None or path[0] >= len(self.children):
            raise ValueError(f"no component at path {path}")
        kids = list(self.children)
        kids[path[0]] = kids[path[0]].apply(path[1:], move)
        return Branch(self.type, self.move, tuple(kids))


@dataclass(frozen=True)
class MaxRankSubgroup:
    """Connected maximal-rank subgroup of ``ambient`` recorded by its lineage."""

    ambient: SemisimpleType
    lineage: tuple[Branch, ...] = field(default=())

    def __post_init__(self):
        if not self.lineage:
            object.__setattr__(self, "lineage", tuple(Branch(c) for c in self.ambient))
        if tuple(b.type for b in self.lineage) != self.ambient.components:
            raise ValueError("lineage does not match the ambient components")

    @classmethod
    def whole(cls, ambient: SemisimpleType) -> "MaxRankSubgroup":
        return cls(ambient)

    @property
    def semisimple_part(self) -> SemisimpleType:
        return SemisimpleType(tuple(t for _, t in self.leaves()))

    @property
    def central_torus(self) -> int:
        return sum(b.torus() for b in self.lineage)

    @property
    def key(self) -> tuple[SemisimpleType, int]:
        return (self.semisimple_part, self.central_torus)

    @property
    def chain(self) -> tuple[BdsMove, ...]:
        return tuple(
            replace(m, path=(i,) + m.path) for i, b in enumerate(self.lineage) for m in b.moves()
        )

    @property
    def simply_connected_cover_splits(self) -> bool:
        return all(m.comark_at_node == 1 for m in self.chain if m.kind == SEMISIMPLE)

    @property
    def is_whole(self) -> bool:
        return all(b.move is None for b in self.lineage)

    @property
    def dim(self) -> int:
        return group_invariants(self.semisimple_part, self.central_torus).dim

    def leaves(self) -> Iterator[tuple[tuple[int, ...], SimpleType]]:
        for i, b in enumerate(self.lineage):
            for p, t in b.leaves():
                yield (i,) + p, t

    def apply(self, path: tuple[int, ...], move: BdsMove) -> "MaxRankSubgroup":
        lin = list(self.lineage)
        lin[path[0]] = lin[path[0]].apply(path[1:], move)
        return MaxRankSubgroup(self.ambient, tuple(lin))

    def factor(self, i: int) -> "MaxRankSubgroup":
        """The part of the lineage inside the ``i``-th ambient factor."""
        b = self.lineage[i]
        return MaxRankSubgroup(SemisimpleType((b.type,)), (b,))

    def after_first_move(self) -> "MaxRankSubgroup":
        """For a simple ambient with a move at the root: the subgroup inside the result."""
        if len(self.lineage) != 1 or self.lineage[0].move is None:
            raise ValueError("needs a simple ambient group with at least one move")
        root = self.lineage[0]
        return MaxRankSubgroup(root.move.result, root.children)

    def sort_key(self) -> tuple:
        return (self.semisimple_part.sort_key, self.central_torus)

    def to_json(self) -> dict:
        return {
            "semisimple_part": str(self.semisimple_part),
            "torus": self.central_torus,
            "chain": [m.to_json() for m in self.chain],
            "simply_connected": self.simply_connected_cover_splits,
        }

    def __str__(self) -> str:
        s = str(self.semisimple_part)
        return s if not self.central_torus else f"{s}+T{self.central_torus}"


def _successors(h: MaxRankSubgroup) -> Iterator[MaxRankSubgroup]:
    for path, t in h.leaves():
        for m in _semisimple_moves(t) + _levi_moves(t):
            yield h.apply(path, m)


def enumerate_maximal_rank(t: SemisimpleType, depth: int | None = None) -> list[MaxRankSubgroup]:
    """Proper connected maximal-rank subgroups reachable in ``depth`` moves.

    Breadth-first, so each subgroup keeps a shortest witness chain.  Subgroups
    are identified by (semisimple part, central torus); output is sorted by
    that key.  ``depth`` defaults to the rank of ``t``.
    """
    if depth is None:
        depth = t.rank
    if depth < 1:
        raise ValueError("depth must be >= 1")
    start = MaxRankSubgroup.whole(t)
    seen = {start.key: start}
    frontier = deque([start])
    for _ in range(depth):
        nxt: deque[MaxRankSubgroup] = deque()
        for h in frontier:
            for s in _successors(h):
                if s.key not in seen:
                    seen[s.key] = s
                    nxt.append(s)
        frontier = nxt
    del seen[start.key]
    return sorted(seen.values(), key=MaxRankSubgroup.sort_key)
