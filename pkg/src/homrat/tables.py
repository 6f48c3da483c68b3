"""Dimension tables computed from root data."""

from __future__ import annotations

from dataclasses import dataclass

from .rootsys import SemisimpleType, SimpleType, group_invariants

__all__ = ["B23Column", "b23c3g2_table", "TABLES"]


@dataclass(frozen=True)
class B23Column:
    """Bounds for a semisimple maximal-rank H in an almost-simple group of type ``group``.

    A semisimple group of rank n has dimension at least 3n (n copies of A1).
    """

    group: SimpleType
    dim_G: int
    dim_H_lower: int
    dim_quotient_upper: int
    rank_bound: int  # n + n + 8

    @property
    def satisfied(self) -> bool:
        return self.dim_quotient_upper < self.rank_bound


def b23c3g2_table() -> list[B23Column]:
    cols = []
    for t in (SimpleType("B", 3), SimpleType("G", 2)):
        n = t.rank
        dim_g = group_invariants(SemisimpleType((t,))).dim
        dim_h = group_invariants(SemisimpleType((SimpleType("A", 1),) * n)).dim
        cols.append(B23Column(t, dim_g, dim_h, dim_g - dim_h, n + n + 8))
    return cols


TABLES = {"b23c3g2": b23c3g2_table}
