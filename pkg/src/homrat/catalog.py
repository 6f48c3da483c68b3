"""Exhaustive catalogs of groups and maximal-rank pairs."""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterator

from .bds import MaxRankSubgroup, enumerate_maximal_rank
from .rootsys import FAMILIES, SemisimpleType, SimpleType, normalize_simple_safe

__all__ = ["simple_types", "semisimple_types", "maximal_rank_pairs"]


def simple_types(max_rank: int) -> list[SimpleType]:
    """Every canonical simple type of rank <= max_rank, sorted."""
    out = {
        t
        for f in FAMILIES
        for n in range(1, max_rank + 1)
        for t in (normalize_simple_safe(f, n) or ())
        if t.rank == n
    }
    return sorted(out)


def semisimple_types(max_rank: int) -> list[SemisimpleType]:
    """Every non-trivial semisimple type of total rank <= max_rank."""
    simples = simple_types(max_rank)
    out = set()
    for k in range(1, max_rank + 1):
        for combo in combinations_with_replacement(simples, k):
            if sum(c.rank for c in combo) <= max_rank:
                out.add(SemisimpleType(combo))
    return sorted(out, key=lambda s: (s.rank, s.sort_key))


def maximal_rank_pairs(max_rank: int, depth: int) -> Iterator[tuple[SemisimpleType, MaxRankSubgroup]]:
    """(G, H) for every G of rank <= max_rank and H = G or a subgroup within ``depth`` moves."""
    for g in semisimple_types(max_rank):
        yield g, MaxRankSubgroup.whole(g)
        for h in enumerate_maximal_rank(g, depth):
            yield g, h
