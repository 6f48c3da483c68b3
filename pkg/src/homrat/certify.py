"""Certified rationality decisions for homogeneous spaces G/H.

A decision is produced by an ordered rule system.  Terminal rules close a
branch; reduction rules replace the pair by one or more smaller pairs whose
rationality implies that of the original.  Every node of a certificate stores
the facts its rule relied on, so :func:`validate_certificate` can recompute
them from the input pair alone.

Groups are identified up to isogeny by their semisimple type plus the
dimension of the solvable radical.  Quotient invariants always refer to the
semisimple quotient G' and the image H' of H in it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Any, Callable, Iterable, Sequence, Union

from .bds import LEVI, SEMISIMPLE, MaxRankSubgroup, levi_moves
from .rootsys import SemisimpleType, group_invariants

__all__ = [
    "YES",
    "NO",
    "UNKNOWN",
    "RATIONAL",
    "UNKNOWN_STATUS",
    "SpecError",
    "GroupSpec",
    "BorelContained",
    "MaxRank",
    "General",
    "QuotientInvariants",
    "CertificateNode",
    "Verdict",
    "compute_invariants",
    "certify",
    "validate_certificate",
    "locate_failure",
    "tha_proof_trace",
    "verdict_to_json",
    "verdict_from_json",
    "DEFAULT_ORDER",
    "TERMINAL_RULES",
    "FRONTIER_G2",
    "FRONTIER_A3",
    "FRONTIER_GENERIC",
]

YES, NO, UNKNOWN = "yes", "no", "unknown"
RATIONAL, UNKNOWN_STATUS = "Rational", "Unknown"

FRONTIER_G2 = "G2-REGULAR-A1"
FRONTIER_A3 = "A3-REGULAR-A1"
FRONTIER_GENERIC = "BEYOND-CRITERIA"

A3_NOTE = (
    "the adjoint case PGL4/PGL2 is known to be rational by an external result; "
    "not encoded as a rule"
)


class SpecError(ValueError):
    """Inconsistent group/subgroup data."""


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class GroupSpec:
    semisimple_type: SemisimpleType
    radical_dim: int = 0
    characteristic: int = 0

    def __post_init__(self):
        if self.radical_dim < 0:
            raise SpecError("radical_dim must be >= 0")
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise SpecError(f"characteristic {self.characteristic} is neither 0 nor prime")

    @property
    def dim(self) -> int:
        return group_invariants(self.semisimple_type).dim + self.radical_dim


@dataclass(frozen=True)
class BorelContained:
    """H lies in a Borel subgroup of G (any solvable connected H does)."""

    dim: int


@dataclass(frozen=True)
class MaxRank:
    subgroup: MaxRankSubgroup


@dataclass(frozen=True)
class General:
    """H = S x| U(H) given by abstract invariants.

    Tri-state flags take ``"yes"``, ``"no"`` or ``"unknown"``.  ``subregular``
    marks an A1 subgroup of G2 from the subregular unipotent class.
    """

    levi_type: SemisimpleType
    levi_central_torus: int = 0
    unipotent_radical_dim: int = 0
    connected: bool = True
    in_proper_parabolic: str = UNKNOWN
    action_kernel_zero_dim: str = UNKNOWN
    subregular: str = UNKNOWN

    def __post_init__(self):
        for name in ("in_proper_parabolic", "action_kernel_zero_dim", "subregular"):
            if getattr(self, name) not in (YES, NO, UNKNOWN):
                raise SpecError(f"{name} must be yes/no/unknown")
        if self.levi_central_torus < 0 or self.unipotent_radical_dim < 0:
            raise SpecError("torus and unipotent radical dimensions must be >= 0")


SubgroupSpec = Union[BorelContained, MaxRank, General]


@dataclass(frozen=True)
class QuotientInvariants:
    t_G: int
    u_G: int
    t_H: int | None
    u_H: int | None
    uH_rad: int | None
    dim_quotient: int
    dim_BGU: int | None
    dim_UGB: int | None

    def to_json(self) -> dict:
        return {
            "tG": self.t_G,
            "tH": self.t_H,
            "uG": self.u_G,
            "uH": self.u_H,
            "uH_rad": self.uH_rad,
            "dim": self.dim_quotient,
            "dim_BGU": self.dim_BGU,
            "dim_UGB": self.dim_UGB,
        }

    @classmethod
    def from_json(cls, d: dict) -> "QuotientInvariants":
        return cls(d["tG"], d["uG"], d["tH"], d["uH"], d["uH_rad"], d["dim"], d["dim_BGU"], d["dim_UGB"])


def compute_invariants(g: GroupSpec, h: SubgroupSpec) -> QuotientInvariants:
    """t, u and dimension data of G'/H' via ``(tG-tH) + 2(uG-uH) + u(H)``.

    For :class:`BorelContained` only ``dim_quotient`` is known; it is the
    dimension of G/H itself.
    """
    gi = group_invariants(g.semisimple_type)
    tG, uG = gi.rank, gi.num_pos_roots
    if isinstance(h, BorelContained):
        if h.dim < 0:
            raise SpecError("violated: dim H >= 0")
        if h.dim > g.dim:
            raise SpecError(f"violated: dim H <= dim G ({h.dim} > {g.dim})")
        return QuotientInvariants(tG, uG, None, None, None, g.dim - h.dim, None, None)
    if isinstance(h, MaxRank):
        s = h.subgroup
        if s.ambient != g.semisimple_type:
            raise SpecError(f"subgroup lives in {s.ambient}, group is {g.semisimple_type}")
        tH = s.semisimple_part.rank + s.central_torus
        uH = group_invariants(s.semisimple_part).num_pos_roots
        urad = 0
    elif isinstance(h, General):
        li = group_invariants(h.levi_type)
        tH = li.rank + h.levi_central_torus
        uH = li.num_pos_roots + h.unipotent_radical_dim
        urad = h.unipotent_radical_dim
    else:
        raise TypeError(f"not a subgroup spec: {h!r}")
    if tH > tG:
        raise SpecError(f"violated: t_H <= t_G ({tH} > {tG})")
    if uH > uG:
        raise SpecError(f"violated: u_H <= u_G ({uH} > {uG})")
    dim_q = (tG - tH) + 2 * (uG - uH) + urad
    dim_h = tH + 2 * uH - urad
    assert dim_q == tG + 2 * uG - dim_h
    return QuotientInvariants(tG, uG, tH, uH, urad, dim_q, uG - uH, (tG - tH) + (uG - uH))


def _check_flags(g: GroupSpec, h: SubgroupSpec) -> None:
    if not isinstance(h, General):
        return
    if h.unipotent_radical_dim > 0 and h.in_proper_parabolic == NO:
        raise SpecError(
            "contradictory flags: u(H) > 0 forces H into a proper parabolic (parabolic=no given)"
        )
    if (
        h.connected
        and g.radical_dim == 0
        and h.levi_central_torus > 0
        and h.in_proper_parabolic == NO
    ):
        raise SpecError(
            "contradictory flags: a connected H outside every proper parabolic of a "
            "semisimple G is semisimple (torus > 0, parabolic=no given)"
        )
    if h.subregular == YES and not (
        _simple_name(g) == "G2" and _semisimple_name(h) == "A1" and h.in_proper_parabolic != YES
    ):
        raise SpecError("subregular=yes only applies to a semisimple A1 in G2 outside parabolics")


# -- situations ------------------------------------------------------------


@dataclass(frozen=True)
class Pair:
    g: GroupSpec
    h: SubgroupSpec


@dataclass(frozen=True)
class ParabolicQuotient:
    """P/H for H inside a proper parabolic P, known only through a dimension bound."""

    dim_bound: int
    connected: bool
    characteristic: int


Situation = Union[Pair, ParabolicQuotient]


def _simple_name(g: GroupSpec) -> str | None:
    comps = g.semisimple_type.components
    return str(comps[0]) if len(comps) == 1 else None


def _semisimple_name(h: SubgroupSpec) -> str | None:
    """Type of H when H is semisimple, else None."""
    if isinstance(h, MaxRank):
        return str(h.subgroup.semisimple_part) if h.subgroup.central_torus == 0 else None
    if isinstance(h, General):
        if h.connected and h.levi_central_torus == 0 and h.unipotent_radical_dim == 0:
            return str(h.levi_type)
    return None


def _variant(h: SubgroupSpec) -> str:
    return {BorelContained: "borel", MaxRank: "maxrank", General: "general"}[type(h)]


def _connected(h: SubgroupSpec) -> bool:
    return h.connected if isinstance(h, General) else True


def _kernel0(h: SubgroupSpec) -> str:
    if isinstance(h, General):
        return h.action_kernel_zero_dim
    if isinstance(h, MaxRank):
        # normal connected subgroups of semisimple G are products of factors
        s = h.subgroup
        return YES if all(not s.factor(i).is_whole for i in range(len(s.lineage))) else NO
    return UNKNOWN


def min_flag_dim(t: SemisimpleType) -> int:
    """Smallest dim G/P over proper parabolics P (0 for the trivial group)."""
    best = None
    for c in t:
        u = group_invariants(SemisimpleType((c,))).num_pos_roots
        for m in levi_moves(c):
            d = u - group_invariants(m.result).num_pos_roots
            best = d if best is None else min(best, d)
    return best or 0


# -- rules -----------------------------------------------------------------

Premises = list[tuple[str, Any]]


@dataclass(frozen=True)
class Rule:
    rule_id: str
    ref: str
    premises: Callable[[Situation], Premises | None]
    holds: Callable[[dict], bool]
    children: Callable[[Situation], list[Situation]] | None = None
    note: str = ""

    @property
    def is_reduction(self) -> bool:
        return self.children is not None


def _pair_premises(fn):
    """Lift a premise function on pairs; ParabolicQuotient situations do not apply."""

    def wrapped(sit):
        if not isinstance(sit, Pair):
            return None
        return fn(sit.g, sit.h)

    return wrapped


def _needs_split(fn):
    """Premise functions that need t_H/u_H (so not BorelContained)."""

    def wrapped(g, h):
        if isinstance(h, BorelContained):
            return None
        return fn(g, h, compute_invariants(g, h))

    return _pair_premises(wrapped)


def _common(g: GroupSpec, inv: QuotientInvariants, h: SubgroupSpec) -> Premises:
    return [
        ("characteristic", g.characteristic),
        ("radical_dim", g.radical_dim),
        ("connected", _connected(h)),
        ("dim_quotient", inv.dim_quotient),
    ]


def _notA_holds(extra: Callable[[dict], bool]) -> Callable[[dict], bool]:
    return lambda p: (
        p["characteristic"] == 0 and p["radical_dim"] == 0 and p["connected"] and extra(p)
    )


# R-RAD
def _rad_prem(g, h):
    if isinstance(h, BorelContained):
        return None
    return [("radical_dim", g.radical_dim)]


def _rad_children(sit: Pair):
    return [Pair(replace(sit.g, radical_dim=0), sit.h)]


# R-TH0
def _th0_prem(g, h):
    if isinstance(h, BorelContained):
        return [("variant", "borel"), ("dim_H", h.dim), ("dim_G", g.dim)]
    if isinstance(h, MaxRank):
        return [("variant", "maxrank"), ("semisimple_part", str(h.subgroup.semisimple_part))]
    return [
        ("variant", "general"),
        ("connected", h.connected),
        ("levi_type", str(h.levi_type)),
    ]


def _th0_holds(p):
    if p["variant"] == "borel":
        return p["dim_H"] <= p["dim_G"]
    if p["variant"] == "maxrank":
        return p["semisimple_part"] == "1"  # H is a maximal torus
    return p["connected"] and p["levi_type"] == "1"  # connected solvable


# R-IDENT
def _ident_prem(g, h):
    if isinstance(h, BorelContained):
        return None
    inv = compute_invariants(g, h)
    return [("radical_dim", g.radical_dim), ("dim_quotient", inv.dim_quotient)]


# R-FACTOR
def _factor_prem(g, h):
    if not isinstance(h, MaxRank) or len(g.semisimple_type) < 2:
        return None
    return [("radical_dim", g.radical_dim), ("factors", [str(c) for c in g.semisimple_type])]


def _factor_children(sit: Pair):
    g, s = sit.g, sit.h.subgroup
    return [
        Pair(GroupSpec(SemisimpleType((c,)), 0, g.characteristic), MaxRank(s.factor(i)))
        for i, c in enumerate(g.semisimple_type)
    ]


# R-THA
def _tha_prem(g, h):
    if not isinstance(h, MaxRank):
        return None
    return [
        ("characteristic", g.characteristic),
        ("adjoint_factor_types", [str(c) for c in g.semisimple_type]),
    ]


def tha_type_ok(name: str, char: int) -> bool:
    return (
        name.startswith("A")
        or (name.startswith("C") and char != 2)
        or (name in ("B3", "G2") and char == 0)
    )


def _tha_holds(p):
    return all(tha_type_ok(n, p["characteristic"]) for n in p["adjoint_factor_types"])


# R-B23C3G2
def _b23_prem(g, h):
    if not isinstance(h, MaxRank):
        return None
    inv = compute_invariants(g, h)
    return [
        ("characteristic", g.characteristic),
        ("radical_dim", g.radical_dim),
        ("group_type", _simple_name(g)),
        ("subgroup_semisimple", _semisimple_name(h) is not None),
        ("dim_quotient", inv.dim_quotient),
        ("rank_bound", inv.t_G + inv.t_H + 8),
    ]


def _b23_holds(p):
    return (
        p["characteristic"] == 0
        and p["radical_dim"] == 0
        and p["group_type"] in ("B3", "G2")
        and p["subgroup_semisimple"]
        and p["dim_quotient"] < p["rank_bound"]
    )


# ThB0 / ThB also apply to the abstract P/H quotient
def _dimrule_prem(fn):
    def prem(sit):
        if isinstance(sit, ParabolicQuotient):
            return [
                ("characteristic", sit.characteristic),
                ("radical_dim", 0),
                ("connected", sit.connected),
                ("dim_quotient_bound", sit.dim_bound),
            ]
        g, h = sit.g, sit.h
        if isinstance(h, BorelContained):
            return None
        return fn(g, h, compute_invariants(g, h))

    return prem


def _dq(p):
    return p.get("dim_quotient", p.get("dim_quotient_bound"))


_thb0_prem = _dimrule_prem(lambda g, h, inv: _common(g, inv, h))
_thb_prem = _thb0_prem


def _thbrank_prem(g, h, inv):
    return _common(g, inv, h) + [
        ("uH_rad", inv.uH_rad),
        ("kernel_zero_dim", _kernel0(h)),
        ("t_G", inv.t_G),
        ("t_H", inv.t_H),
    ]


def _ugh3_prem(g, h, inv):
    return _common(g, inv, h) + [("uG_minus_uH", inv.u_G - inv.u_H)]


def _tu6_prem(g, h, inv):
    return _common(g, inv, h) + [("dim_UGB", inv.dim_UGB)]


def _ugh4_prem(g, h, inv):
    return _common(g, inv, h) + [("uH_rad", inv.uH_rad), ("uG_minus_uH", inv.u_G - inv.u_H)]


def _dimG_prem(g, h):
    if isinstance(h, BorelContained):
        return None
    return [
        ("characteristic", g.characteristic),
        ("connected", _connected(h)),
        ("dim_G", g.dim),
        ("group_type", str(g.semisimple_type) if g.radical_dim == 0 else None),
        ("subgroup_semisimple_type", _semisimple_name(h)),
        ("subregular", h.subregular if isinstance(h, General) else NO),
    ]


def _dim14_holds(p):
    exceptional = (
        p["group_type"] == "G2"
        and p["subgroup_semisimple_type"] == "A1"
        and p["subregular"] != YES
    )
    return p["characteristic"] == 0 and p["connected"] and p["dim_G"] == 14 and not exceptional


# R-PARAB
def _parab_prem(g, h):
    if isinstance(h, General):
        if h.in_proper_parabolic != YES:
            return None
        inv = compute_invariants(g, h)
        return [
            ("in_proper_parabolic", h.in_proper_parabolic),
            ("dim_quotient", inv.dim_quotient),
            ("min_flag_dim", min_flag_dim(g.semisimple_type)),
        ]
    if isinstance(h, MaxRank):
        s = h.subgroup
        if len(s.lineage) != 1 or s.lineage[0].move is None:
            return None
        m = s.lineage[0].move
        return [
            ("radical_dim", g.radical_dim),
            ("first_move", m.kind),
            ("levi_type", str(m.result)),
            ("dim_U_P", _unipotent_of_levi(g.semisimple_type, m.result)),
        ]
    return None


def _unipotent_of_levi(t: SemisimpleType, levi: SemisimpleType) -> int:
    return group_invariants(t).num_pos_roots - group_invariants(levi).num_pos_roots


def _parab_holds(p):
    if "in_proper_parabolic" in p:
        return p["in_proper_parabolic"] == YES and p["min_flag_dim"] >= 1
    return p["radical_dim"] == 0 and p["first_move"] == LEVI


def _parab_children(sit: Pair):
    g, h = sit.g, sit.h
    if isinstance(h, General):
        inv = compute_invariants(g, h)
        bound = inv.dim_quotient - min_flag_dim(g.semisimple_type)
        return [ParabolicQuotient(bound, h.connected, g.characteristic)]
    s = h.subgroup
    m = s.lineage[0].move
    # P/H: Levi factors of P on top, central torus and U_P in the radical
    rad = m.torus_delta + _unipotent_of_levi(g.semisimple_type, m.result)
    return [Pair(GroupSpec(m.result, rad, g.characteristic), MaxRank(s.after_first_move()))]


# R-SPECIAL
def _special_prem(g, h):
    if not isinstance(h, MaxRank):
        return None
    s = h.subgroup
    if len(s.lineage) != 1 or s.lineage[0].move is None:
        return None
    m = s.lineage[0].move
    return [
        ("characteristic", g.characteristic),
        ("radical_dim", g.radical_dim),
        ("group_type", str(g.semisimple_type)),
        ("first_move", m.kind),
        ("comark", m.comark_at_node),
        ("M", str(m.result)),
    ]


def _special_holds(p):
    return (
        p["characteristic"] != 2
        and p["radical_dim"] == 0
        and p["group_type"].startswith("C")
        and p["first_move"] == SEMISIMPLE
        and p["comark"] == 1
    )


def _special_children(sit: Pair):
    s = sit.h.subgroup
    m = s.lineage[0].move
    return [Pair(GroupSpec(m.result, 0, sit.g.characteristic), MaxRank(s.after_first_move()))]


RULES: dict[str, Rule] = {
    r.rule_id: r
    for r in [
        Rule("R-RAD", "lemma mod-radical: G/H ~ G'/H' x P^s with s <= dim R(G)",
             _pair_premises(_rad_prem), lambda p: p["radical_dim"] > 0, _rad_children),
        Rule("R-IDENT", "trivial case: dim(G/H) = 0, so G/H is a point",
             _pair_premises(_ident_prem),
             lambda p: p["radical_dim"] == 0 and p["dim_quotient"] == 0),
        Rule("R-FACTOR", "lemma reduction-to-adjoint-factors: G/H ~ prod_i G_i/H_i x P^s",
             _pair_premises(_factor_prem), lambda p: len(p["factors"]) >= 2, _factor_children),
        Rule("R-TH0", "Th0: H contained in a Borel subgroup",
             _pair_premises(_th0_prem), _th0_holds),
        Rule("R-THB0", "ThB0: dim(G/H) <= 5",
             _thb0_prem, lambda p: p["characteristic"] == 0 and p["radical_dim"] == 0 and _dq(p) <= 5),
        Rule("R-UGH3", "lemma uGH3(c): u_G - u_H <= 3",
             _needs_split(_ugh3_prem), _notA_holds(lambda p: p["uG_minus_uH"] <= 3),
             note="B^-\\G/U_H is rational of dimension u_G - u_H"),
        Rule("R-TU6", "lemma tu6(b): (t_G - t_H) + (u_G - u_H) <= 5",
             _needs_split(_tu6_prem), _notA_holds(lambda p: p["dim_UGB"] <= 5),
             note="U^-\\G/B_H is rational of dimension (t_G - t_H) + (u_G - u_H)"),
        Rule("R-THB", "ThB: H connected, dim(G/H) <= 10",
             _thb_prem,
             lambda p: p["characteristic"] == 0 and p["radical_dim"] == 0 and p["connected"]
             and _dq(p) <= 10),
        Rule("R-UGH4", "lemma uGH4: H reductive, u_G - u_H <= 4",
             _needs_split(_ugh4_prem),
             _notA_holds(lambda p: p["uH_rad"] == 0 and p["uG_minus_uH"] <= 4)),
        Rule("R-THBRANK", "ThBrank: H reductive, finite kernel, dim(G/H) < t_G + t_H + 8",
             _needs_split(_thbrank_prem),
             _notA_holds(lambda p: p["uH_rad"] == 0 and p["kernel_zero_dim"] == YES
                         and p["dim_quotient"] < p["t_G"] + p["t_H"] + 8)),
        Rule("R-THA", "ThA: maximal rank H; adjoint factors of type A, C (char != 2), B3 or G2 (char 0)",
             _pair_premises(_tha_prem), _tha_holds),
        Rule("R-B23C3G2", "cor. B23C3G2: semisimple maximal rank H in B3 or G2, via ThBrank",
             _pair_premises(_b23_prem), _b23_holds),
        Rule("R-DIM13", "prop. dim G <= 13: every connected H",
             _pair_premises(_dimG_prem),
             lambda p: p["characteristic"] == 0 and p["connected"] and p["dim_G"] <= 13),
        Rule("R-DIM14", "prop. dimG=14: every connected H except semisimple A1 in G2 (subregular A1 settled)",
             _pair_premises(_dimG_prem), _dim14_holds),
        Rule("R-PARAB", "cor. subparabolic: G/H ~ (G/P) x (P/H)",
             _pair_premises(_parab_prem), _parab_holds, _parab_children),
        Rule("R-SPECIAL", "prop. PropB(c,d): G/H ~ (G/M) x (M/H) with G/M rational, char != 2",
             _pair_premises(_special_prem), _special_holds, _special_children,
             note="M is the centralizer of an involution (recorded, not verified)"),
    ]
}

TERMINAL_RULES = (
    "R-TH0", "R-IDENT", "R-THA", "R-THB0", "R-UGH3", "R-TU6", "R-THB", "R-UGH4",
    "R-THBRANK", "R-B23C3G2", "R-DIM13", "R-DIM14",
)
DEFAULT_ORDER = ("R-RAD", "R-FACTOR") + TERMINAL_RULES + ("R-PARAB", "R-SPECIAL")
TRACE_ORDER = (
    "R-RAD", "R-IDENT", "R-FACTOR", "R-TH0", "R-PARAB", "R-SPECIAL", "R-B23C3G2", "R-THA",
)


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class CertificateNode:
    rule_id: str
    ref: str
    premises: tuple[tuple[str, Any], ...]
    children: tuple["CertificateNode", ...] = ()
    note: str = ""

    def premise(self, name: str) -> Any:
        return dict(self.premises)[name]

    def walk(self) -> Iterable["CertificateNode"]:
        yield self
        for c in self.children:
            yield from c.walk()

    def rules(self) -> list[str]:
        return [n.rule_id for n in self.walk()]

    def to_json(self) -> dict:
        d = {
            "rule": self.rule_id,
            "paper_ref": self.ref,
            "premises": [{"name": k, "value": v} for k, v in self.premises],
            "children": [c.to_json() for c in self.children],
        }
        if self.note:
            d["note"] = self.note
        return d

    @classmethod
    def from_json(cls, d: dict) -> "CertificateNode":
        return cls(
            d["rule"],
            d["paper_ref"],
            tuple((p["name"], p["value"]) for p in d["premises"]),
            tuple(cls.from_json(c) for c in d.get("children", [])),
            d.get("note", ""),
        )


@dataclass(frozen=True)
class Verdict:
    status: str
    invariants: QuotientInvariants | None
    certificate: CertificateNode | None = None
    frontier: str | None = None
    note: str = ""

    @property
    def rational(self) -> bool:
        return self.status == RATIONAL


def _frontier_of(sit: Situation) -> str:
    if not isinstance(sit, Pair):
        return FRONTIER_GENERIC
    g, h = sit.g, sit.h
    if g.characteristic != 0 or g.radical_dim != 0 or not _connected(h):
        return FRONTIER_GENERIC
    name = _simple_name(g)
    try:
        dq = compute_invariants(g, h).dim_quotient
    except SpecError:
        return FRONTIER_GENERIC
    if name == "G2" and _semisimple_name(h) == "A1" and dq == 11:
        return FRONTIER_G2
    if name == "A3" and _semisimple_name(h) == "A1" and dq == 12:
        return FRONTIER_A3
    return FRONTIER_GENERIC


class _Engine:
    def __init__(self, order: Sequence[str], expand_trace: bool = False):
        unknown = [r for r in order if r not in RULES]
        if unknown:
            raise ValueError(f"unknown rules {unknown}")
        self.order = [RULES[r] for r in order]
        self.expand_trace = expand_trace

    def decide(self, sit: Situation) -> tuple[CertificateNode | None, str]:
        frontier = None
        for rule in self.order:
            prem = rule.premises(sit)
            if prem is None or not rule.holds(dict(prem)):
                continue
            if not rule.is_reduction:
                node = CertificateNode(rule.rule_id, rule.ref, tuple(prem), (), rule.note)
                if rule.rule_id == "R-THA" and self.expand_trace and isinstance(sit, Pair):
                    node = _trace(sit, fallback=node)
                return node, ""
            kids = []
            for child in rule.children(sit):
                node, tag = self.decide(child)
                if node is None:
                    if frontier is None or frontier == FRONTIER_GENERIC:
                        frontier = tag
                    break
                kids.append(node)
            else:
                return CertificateNode(rule.rule_id, rule.ref, tuple(prem), tuple(kids), rule.note), ""
        own = _frontier_of(sit)
        if own != FRONTIER_GENERIC or frontier is None:
            frontier = own
        return None, frontier


def certify(
    g: GroupSpec,
    h: SubgroupSpec,
    *,
    expand_trace: bool = False,
    terminal_order: Sequence[str] | None = None,
) -> Verdict:
    """Decide rationality of G/H, with a certificate when the answer is yes.

    ``terminal_order`` permutes the terminal rules (reductions keep their
    places); the status never depends on it.
    """
    inv = compute_invariants(g, h)
    _check_flags(g, h)
    order = DEFAULT_ORDER
    if terminal_order is not None:
        if sorted(terminal_order) != sorted(TERMINAL_RULES):
            raise ValueError("terminal_order must be a permutation of TERMINAL_RULES")
        order = ("R-RAD", "R-FACTOR") + tuple(terminal_order) + ("R-PARAB", "R-SPECIAL")
    node, frontier = _Engine(order, expand_trace).decide(Pair(g, h))
    if node is not None:
        return Verdict(RATIONAL, inv, node)
    return Verdict(UNKNOWN_STATUS, inv, None, frontier, A3_NOTE if frontier == FRONTIER_A3 else "")


def _trace(sit: Pair, fallback: CertificateNode | None = None) -> CertificateNode:
    node, _ = _Engine(TRACE_ORDER).decide(sit)
    if node is None:  # pragma: no cover - R-THA closes every admissible branch
        if fallback is None:
            raise AssertionError("trace did not close")
        return fallback
    if node.rule_id == "R-THA" and fallback is not None:
        return fallback
    return node


def tha_proof_trace(g: GroupSpec, h: MaxRankSubgroup) -> CertificateNode:
    """Expand a ThA leaf into the induction on the common rank.

    Levi-first chains become R-PARAB steps, semisimple removals in type C
    become R-SPECIAL steps, and semisimple subgroups of B3/G2 close with
    R-B23C3G2.  Branches that type data alone cannot place inside a Levi
    (non-semisimple H reached by a semisimple removal in B3/G2) remain R-THA
    leaves.
    """
    for c in g.semisimple_type:
        if not tha_type_ok(str(c), g.characteristic):
            raise SpecError(
                f"component {c} is outside the ThA types for characteristic {g.characteristic}"
            )
    compute_invariants(g, MaxRank(h))
    return _trace(Pair(g, MaxRank(h)))


# -- validation ------------------------------------------------------------


def _check(sit: Situation, node: CertificateNode, path: tuple[int, ...]) -> tuple[tuple[int, ...], str] | None:
    rule = RULES.get(node.rule_id)
    if rule is None:
        return path, f"unknown rule {node.rule_id}"
    try:
        prem = rule.premises(sit)
    except SpecError as e:
        return path, f"premises cannot be computed: {e}"
    if prem is None:
        return path, f"{node.rule_id} does not apply to this kind of pair"
    if [(k, v) for k, v in prem] != [(k, v) for k, v in node.premises]:
        return path, f"recorded premises differ from recomputed {prem}"
    if not rule.holds(dict(prem)):
        return path, f"condition of {node.rule_id} fails"
    expected = rule.children(sit) if rule.is_reduction else []
    if len(expected) != len(node.children):
        return path, f"expected {len(expected)} children, found {len(node.children)}"
    for k, (child_sit, child) in enumerate(zip(expected, node.children)):
        bad = _check(child_sit, child, path + (k,))
        if bad:
            return bad
    return None


def locate_failure(g: GroupSpec, h: SubgroupSpec, v: Verdict) -> tuple[tuple[int, ...], str] | None:
    """``(path, reason)`` of the first node that does not re-validate, or None."""
    if v.status != RATIONAL or v.certificate is None:
        return (), "verdict is not Rational"
    try:
        inv = compute_invariants(g, h)
        _check_flags(g, h)
    except SpecError as e:
        return (), str(e)
    if v.invariants is not None and v.invariants != inv:
        return (), "recorded invariants differ from recomputed ones"
    return _check(Pair(g, h), v.certificate, ())


def validate_certificate(g: GroupSpec, h: SubgroupSpec, v: Verdict) -> bool:
    return locate_failure(g, h, v) is None


# -- JSON ------------------------------------------------------------------


def verdict_to_json(v: Verdict) -> dict:
    d: dict[str, Any] = {"v": 1, "status": v.status}
    if v.frontier:
        d["frontier"] = v.frontier
    if v.note:
        d["note"] = v.note
    d["invariants"] = v.invariants.to_json() if v.invariants else None
    if v.certificate is not None:
        d["certificate"] = v.certificate.to_json()
    return d


def verdict_from_json(d: dict | str) -> Verdict:
    if isinstance(d, str):
        d = json.loads(d)
    if d.get("v") != 1:
        raise ValueError(f"unsupported schema version {d.get('v')!r}")
    inv = QuotientInvariants.from_json(d["invariants"]) if d.get("invariants") else None
    cert = CertificateNode.from_json(d["certificate"]) if d.get("certificate") else None
    return Verdict(d["status"], inv, cert, d.get("frontier"), d.get("note", ""))
