"""Finite root systems from Cartan data.

Node numbering follows Bourbaki's plates for every family:

    ======  ==========================================================
    family  diagram (node numbers)
    ======  ==========================================================
    A_n     1 - 2 - ... - n
    B_n     1 - 2 - ... - (n-1) => n          (node n short)
    C_n     1 - 2 - ... - (n-1) <= n          (node n long)
    D_n     1 - ... - (n-2) - (n-1), (n-2) - n
    E_n     1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
    F_4     1 - 2 => 3 - 4                    (nodes 1, 2 long)
    G_2     1 <= 2                            (node 1 short, node 2 long)
    ======  ==========================================================

Cartan matrices use Bourbaki's entry convention ``A[i][j] = <alpha_i, alpha_j^vee>``,
so ``cartan_matrix(G2) == ((2, -1), (-3, 2))``.  Roots are integer vectors in the
simple-root basis; squared lengths are exact fractions with long roots of
length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "FAMILIES",
    "ParseError",
    "SimpleType",
    "SemisimpleType",
    "RootSystem",
    "GroupInvariants",
    "parse_type",
    "cartan_matrix",
    "generate_roots",
    "group_invariants",
    "identify_cartan",
    "positive_root_count",
    "normalize_simple",
    "normalize_simple_safe",
    "close_positive_roots",
]

FAMILIES = "ABCDEFG"

Matrix = tuple[tuple[int, ...], ...]
Root = tuple[int, ...]


class ParseError(ValueError):
    """Malformed type or subgroup string.

    ``token`` and ``position`` locate the offending piece of the input.
    """

    def __init__(self, message: str, token: str = "", position: int = 0):
        super().__init__(f"{message} (token {token!r} at position {position})")
        self.token = token
        self.position = position


def _rank_ok(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in "BC":
        return rank >= 2
    if family == "D":
        return rank >= 4
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


@dataclass(frozen=True, order=False)
class SimpleType:
    """A Killing-Cartan type such as ``C3``.

    Construct through :func:`normalize_simple` (or :func:`parse_type`) when the
    input may be a low-rank alias; the constructor itself only accepts the
    canonical names.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES or not isinstance(self.rank, int):
            raise ValueError(f"unknown type {self.family}{self.rank}")
        if not _rank_ok(self.family, self.rank) or (self.family, self.rank) == ("B", 2):
            raise ValueError(f"{self.family}{self.rank} is not a canonical simple type")

    @property
    def sort_key(self) -> tuple[int, str]:
        return (-self.rank, self.family)

    def __lt__(self, other: "SimpleType") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def normalize_simple(family: str, rank: int) -> tuple[SimpleType, ...]:
    """Canonical components for a possibly aliased label.

    B1, C1 -> A1; B2 -> C2; D2 -> A1+A1; D3 -> A3.  Returns ``()`` for the
    rank-zero labels, which only arise as leftovers of diagram surgery.
    """
    if rank == 0:
        return ()
    if family in "BC" and rank == 1:
        return (SimpleType("A", 1),)
    if family == "B" and rank == 2:
        return (SimpleType("C", 2),)
    if family == "D" and rank == 2:
        return (SimpleType("A", 1), SimpleType("A", 1))
    if family == "D" and rank == 3:
        return (SimpleType("A", 3),)
    return (SimpleType(family, rank),)


@dataclass(frozen=True)
class SemisimpleType:
    """Multiset of simple components; the empty multiset is the trivial group."""

    components: tuple[SimpleType, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(sorted(self.components)))

    @classmethod
    def of(cls, *parts: SimpleType | "SemisimpleType") -> "SemisimpleType":
        comps: list[SimpleType] = []
        for p in parts:
            comps.extend(p.components if isinstance(p, SemisimpleType) else (p,))
        return cls(tuple(comps))

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def is_trivial(self) -> bool:
        return not self.components

    @property
    def sort_key(self) -> tuple:
        return tuple(c.sort_key for c in self.components)

    def __lt__(self, other: "SemisimpleType") -> bool:
        return self.sort_key < other.sort_key

    def __add__(self, other: "SemisimpleType") -> "SemisimpleType":
        return SemisimpleType(self.components + other.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        if not self.components:
            return "1"
        out: list[str] = []
        i = 0
        while i < len(self.components):
            j = i
            while j < len(self.components) and self.components[j] == self.components[i]:
                j += 1
            k = j - i
            out.append(f"{k}{self.components[i]}" if k > 1 else str(self.components[i]))
            i = j
        return "+".join(out)


_COMP = re.compile(r"(\d*)([A-Za-z])(\d+)")


def parse_type(text: str) -> SemisimpleType:
    """Parse ``comp ("+" comp)*`` with ``comp := [0-9]* [A-G] [0-9]+``.

    Whitespace is ignored.  The string ``"1"`` denotes the trivial group.

    >>> str(parse_type("A2 + 2A1"))
    'A2+2A1'
    >>> parse_type("C1") == parse_type("A1")
    True
    """
    # keep original offsets for diagnostics
    chars = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
    compact = "".join(ch for _, ch in chars)
    if compact == "1":
        return SemisimpleType()
    if not compact:
        raise ParseError("empty type string", text, 0)

    def pos(k: int) -> int:
        return chars[k][0] if k < len(chars) else len(text)

    comps: list[SimpleType] = []
    k = 0
    while True:
        m = _COMP.match(compact, k)
        end = m.end() if m else k
        nxt = compact.find("+", k)
        stop = len(compact) if nxt < 0 else nxt
        token = compact[k:stop]
        if m is None or end != stop:
            raise ParseError("malformed type component", token, pos(k))
        mult = int(m.group(1)) if m.group(1) else 1
        family, rank = m.group(2), int(m.group(3))
        if family not in FAMILIES or mult < 1:
            raise ParseError("malformed type component", token, pos(k))
        if rank == 0 or (not _rank_ok(family, rank) and normalize_simple_safe(family, rank) is None):
            raise ParseError(f"rank out of range for family {family}", token, pos(k))
        comps.extend(normalize_simple(family, rank) * mult)
        if nxt < 0:
            break
        k = nxt + 1
    return SemisimpleType(tuple(comps))


def normalize_simple_safe(family: str, rank: int) -> tuple[SimpleType, ...] | None:
    try:
        return normalize_simple(family, rank)
    except ValueError:
        return None


def _edges(t: SimpleType) -> list[tuple[int, int]]:
    n, f = t.rank, t.family
    if f == "E":
        return [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    if f == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    return [(i, i + 1) for i in range(n - 1)]


@lru_cache(maxsize=None)
def cartan_matrix(t: SimpleType) -> Matrix:
    """Cartan matrix, ``A[i][j] = <alpha_i, alpha_j^vee>``, Bourbaki numbering."""
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(t):
        a[i][j] = a[j][i] = -1
    # multiple bonds: the long root's row carries the multiplicity
    if t.family == "B":
        a[n - 2][n - 1] = -2
    elif t.family == "C":
        a[n - 1][n - 2] = -2
    elif t.family == "F":
        a[1][2] = -2
    elif t.family == "G":
        a[1][0] = -3
    return tuple(tuple(r) for r in a)


def simple_root_lengths(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Squared lengths of simple roots, longest roots normalized to 2.

    Works per connected component of the diagram.
    """
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    # (a_i, a_j) = A[i][j] d_j / 2 = A[j][i] d_i / 2
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    comp.append(j)
                    stack.append(j)
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] = 2 * d[i] / top
    return tuple(d)  # type: ignore[arg-type]


def _pairing(cartan: Matrix, beta: Root, i: int) -> int:
    """<beta, alpha_i^vee> for beta in the simple-root basis."""
    return sum(c * cartan[j][i] for j, c in enumerate(beta))


def close_positive_roots(cartan: Matrix, seed: Iterable[Root] | None = None) -> list[Root]:
    """Positive roots by root-string closure, sorted by height then coordinates.

    beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where p is the
    largest k with beta - k alpha_i a root.  ``seed`` defaults to the simple
    roots; passing a previous output re-runs the closure from there.
    """
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple) | set(seed or ())
    layer = sorted(roots, key=lambda r: (sum(r), r))
    while layer:
        new: set[Root] = set()
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - _pairing(cartan, beta, i) > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        new.add(up)
        roots |= new
        layer = sorted(new)
    return sorted(roots, key=lambda r: (sum(r), r))


def root_norm(beta: Root, cartan: Matrix, lengths: Sequence[Fraction]) -> Fraction:
    n = len(beta)
    return sum(
        (beta[i] * beta[j] * cartan[i][j] * lengths[j] / 2 for i in range(n) for j in range(n)),
        Fraction(0),
    )


@dataclass(frozen=True)
class RootSystem:
    simple_type: SimpleType
    cartan: Matrix
    positive_roots: tuple[Root, ...]
    highest_root: Root
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    root_lengths: tuple[Fraction, ...]  # per simple root

    @property
    def rank(self) -> int:
        return self.simple_type.rank

    @property
    def coxeter_number(self) -> int:
        return sum(self.marks) + 1

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def norm(self, beta: Root) -> Fraction:
        return root_norm(beta, self.cartan, self.root_lengths)


@lru_cache(maxsize=None)
def generate_roots(t: SimpleType) -> RootSystem:
    cartan = cartan_matrix(t)
    roots = close_positive_roots(cartan)
    top = [r for r in roots if all(all(a >= b for a, b in zip(r, s)) for s in roots)]
    if len(top) != 1:
        raise AssertionError(f"no unique highest root for {t}")
    theta = top[0]
    lengths = simple_root_lengths(cartan)
    comarks = []
    for m, d in zip(theta, lengths):
        c = d / 2 * m  # |theta|^2 = 2
        if c.denominator != 1:
            raise AssertionError(f"non-integral comark for {t}")
        comarks.append(int(c))
    return RootSystem(t, cartan, tuple(roots), theta, theta, tuple(comarks), lengths)


_POS_ROOTS = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
              "D": lambda n: n * (n - 1), "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
              "F": lambda n: 24, "G": lambda n: 6}


def positive_root_count(t: SimpleType) -> int:
    """Closed-form number of positive roots."""
    return _POS_ROOTS[t.family](t.rank)


@dataclass(frozen=True)
class GroupInvariants:
    rank: int
    num_pos_roots: int
    dim: int
    central_torus: int = 0


def group_invariants(t: SemisimpleType, central_torus: int = 0) -> GroupInvariants:
    """t, u and dimension of a reductive group with semisimple type ``t``.

    ``rank`` excludes the central torus, which is reported separately and
    counted in ``dim``.
    """
    if central_torus < 0:
        raise ValueError("central_torus must be >= 0")
    rank = t.rank
    u = sum(len(generate_roots(c).positive_roots) for c in t)
    return GroupInvariants(rank, u, rank + central_torus + 2 * u, central_torus)


# -- diagram recognition --------------------------------------------------


def _components(cartan: Matrix) -> list[list[int]]:
    n = len(cartan)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        out.append(sorted(comp))
    return out


def _candidates(rank: int) -> list[SimpleType]:
    out = []
    for f in FAMILIES:
        for t in normalize_simple_safe(f, rank) or ():
            if t.rank == rank and t not in out:
                out.append(t)
    return out


def _isomorphic(a: Matrix, b: Matrix) -> bool:
    """Is there a permutation p with a[p(i)][p(j)] == b[i][j]?"""
    n = len(a)
    if n != len(b):
        return False
    sig = lambda m, i: (tuple(sorted(m[i])), tuple(sorted(m[k][i] for k in range(n))))
    sa = [sig(a, i) for i in range(n)]
    sb = [sig(b, i) for i in range(n)]
    if sorted(sa) != sorted(sb):
        return False
    p: list[int] = []

    def extend(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if c in p or sa[c] != sb[i]:
                continue
            if all(a[c][p[k]] == b[i][k] and a[p[k]][c] == b[k][i] for k in range(i)):
                p.append(c)
                if extend(i + 1):
                    return True
                p.pop()
        return False

    return extend(0)


def identify_cartan(cartan: Sequence[Sequence[int]]) -> SemisimpleType:
    """Type of a finite-type Cartan matrix, up to simultaneous permutation."""
    m = tuple(tuple(r) for r in cartan)
    comps: list[SimpleType] = []
    for idx in _components(m):
        sub = tuple(tuple(m[i][j] for j in idx) for i in idx)
        for t in _candidates(len(idx)):
            if _isomorphic(sub, cartan_matrix(t)):
                comps.append(t)
                break
        else:
            raise ValueError(f"not a finite-type Cartan matrix: {sub}")
    return SemisimpleType(tuple(comps))
