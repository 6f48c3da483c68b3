"""Subgroup specification strings.

::

    subgroup := "borel:dim=" INT
              | "maxrank:" typespec [";chain=" move ("," move)*]
              | "general:" kv ("," kv)*
    move     := ("ss" | "levi") ":" NODE ["@" LEAF]
    kv       := "levi=" typespec | "torus=" INT | "unip=" INT | "connected=" YN
              | "parabolic=" YNU | "kernel0=" YNU | "subregular=" YN

``LEAF`` picks the untouched component a move acts on, counted in pre-order
over the lineage (default 0, the first).  A ``maxrank`` typespec may end in
``+T<k>`` to fix the central torus.
"""

from __future__ import annotations

import re

from .bds import LEVI, SEMISIMPLE, MaxRankSubgroup, enumerate_maximal_rank, move_at
from .certify import NO, UNKNOWN, YES, BorelContained, General, MaxRank, SubgroupSpec
from .rootsys import ParseError, SemisimpleType, parse_type

__all__ = ["parse_subgroup", "resolve_maxrank"]

_INT = re.compile(r"\d+\Z")
_MOVE = re.compile(r"(ss|levi):(\d+)(?:@(\d+))?\Z")


def _int(tok: str, pos: int) -> int:
    if not _INT.match(tok):
        raise ParseError("expected a non-negative integer", tok, pos)
    return int(tok)


def _type_at(tok: str, pos: int) -> SemisimpleType:
    try:
        return parse_type(tok)
    except ParseError as e:
        raise ParseError(str(e).split(" (token")[0], e.token, pos + e.position) from None


def _flag(tok: str, pos: int, allow_unknown: bool) -> str:
    ok = (YES, NO, UNKNOWN) if allow_unknown else (YES, NO)
    if tok not in ok:
        raise ParseError(f"expected one of {'/'.join(ok)}", tok, pos)
    return tok


def parse_subgroup(text: str, group: SemisimpleType) -> SubgroupSpec:
    """Parse a subgroup string relative to the ambient semisimple type ``group``."""
    head, sep, body = text.partition(":")
    if not sep:
        raise ParseError("expected borel:, maxrank: or general:", text, 0)
    off = len(head) + 1
    if head == "borel":
        if not body.startswith("dim="):
            raise ParseError("expected dim=", body, off)
        return BorelContained(_int(body[4:], off + 4))
    if head == "maxrank":
        return MaxRank(_parse_maxrank(body, off, group))
    if head == "general":
        return _parse_general(body, off)
    raise ParseError("unknown subgroup kind", head, 0)


def _parse_maxrank(body: str, off: int, group: SemisimpleType) -> MaxRankSubgroup:
    typ, sep, rest = body.partition(";")
    torus = None
    m = re.search(r"\+?T(\d+)\s*\Z", typ)
    if m:
        torus = int(m.group(1))
        typ_str = typ[: m.start()]
        target = _type_at(typ_str, off) if typ_str.strip() else SemisimpleType()
    else:
        target = _type_at(typ, off)
    if not sep:
        return resolve_maxrank(group, target, torus, text=typ, position=off)
    roff = off + len(typ) + 1
    if not rest.startswith("chain="):
        raise ParseError("expected chain=", rest, roff)
    h = MaxRankSubgroup.whole(group)
    pos = roff + len("chain=")
    for tok in rest[len("chain="):].split(","):
        mm = _MOVE.match(tok)
        if not mm:
            raise ParseError("malformed move, expected ss:N or levi:N[@LEAF]", tok, pos)
        kind = SEMISIMPLE if mm.group(1) == "ss" else LEVI
        node, leaf = int(mm.group(2)), int(mm.group(3) or 0)
        leaves = list(h.leaves())
        if leaf >= len(leaves):
            raise ParseError(f"no untouched component number {leaf}", tok, pos)
        path, comp = leaves[leaf]
        try:
            h = h.apply(path, move_at(comp, kind, node))
        except ValueError as e:
            raise ParseError(str(e), tok, pos) from None
        pos += len(tok) + 1
    if h.semisimple_part != target or (torus is not None and h.central_torus != torus):
        raise ParseError(f"chain produces {h}, not the stated type", typ, off)
    return h


def resolve_maxrank(
    group: SemisimpleType,
    target: SemisimpleType,
    torus: int | None = None,
    *,
    text: str = "",
    position: int = 0,
) -> MaxRankSubgroup:
    """The unique maximal-rank subgroup of the given type; error if absent or ambiguous."""
    pool = [MaxRankSubgroup.whole(group)]
    if group.rank:
        pool += enumerate_maximal_rank(group)
    hits = [
        h for h in pool
        if h.semisimple_part == target and (torus is None or h.central_torus == torus)
    ]
    if not hits:
        raise ParseError(f"no maximal-rank subgroup of this type in {group}", text or str(target), position)
    if len(hits) > 1:
        opts = ", ".join(str(h) for h in hits)
        raise ParseError(f"ambiguous maximal-rank type ({opts}); add +T<k> or a chain", text or str(target), position)
    return hits[0]


_KEYS = ("levi", "torus", "unip", "connected", "parabolic", "kernel0", "subregular")


def _parse_general(body: str, off: int) -> General:
    # levi types contain '+', never ','
    vals: dict[str, object] = {}
    pos = off
    for tok in body.split(","):
        key, eq, val = tok.partition("=")
        if not eq or key not in _KEYS:
            raise ParseError("expected key=value with a known key", tok, pos)
        if key in vals:
            raise ParseError("duplicate key", tok, pos)
        vpos = pos + len(key) + 1
        if key == "levi":
            vals[key] = _type_at(val, vpos)
        elif key in ("torus", "unip"):
            vals[key] = _int(val, vpos)
        elif key in ("connected", "subregular"):
            vals[key] = _flag(val, vpos, allow_unknown=False)
        else:
            vals[key] = _flag(val, vpos, allow_unknown=True)
        pos += len(tok) + 1
    if "levi" not in vals:
        raise ParseError("general: requires levi=", body, off)
    return General(
        levi_type=vals["levi"],
        levi_central_torus=vals.get("torus", 0),
        unipotent_radical_dim=vals.get("unip", 0),
        connected=vals.get("connected", YES) == YES,
        in_proper_parabolic=vals.get("parabolic", UNKNOWN),
        action_kernel_zero_dim=vals.get("kernel0", UNKNOWN),
        subregular=vals.get("subregular", UNKNOWN),
    )
