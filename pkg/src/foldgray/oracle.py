"""Geometric ground truth for foldings, independent of the generators.

Each perforation between stamps ``s`` and ``s+1`` is drawn as an arc joining
their positions in the pile. The perforation between stamps 1 and 2 sits at the
bottom and sides alternate from there, so odd ``s`` arcs are below the pile and
even ``s`` arcs are above it. A permutation is a folding when no two arcs on the
same side cross; a stamp is visible from a side when no arc on that side
strictly spans its position.
"""
from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass
from typing import Sequence

from .common import Kind
from .pile import Pile

DEFAULT_ORACLE_MAX_N = 10
ORACLE_MAX_N_ENV = "FOLDGRAY_ORACLE_MAX_N"


class Side(enum.Enum):
    ABOVE = "above"
    BELOW = "below"


@dataclass(frozen=True)
class Arc:
    a: int
    b: int
    side: Side
    stamp: int

    def spans(self, pos: int) -> bool:
        return self.a < pos < self.b

    def crosses(self, other: "Arc") -> bool:
        if self.side is not other.side:
            return False
        # distinct same-side arcs join disjoint stamp pairs
        assert len({self.a, self.b, other.a, other.b}) == 4, (self, other)
        return self.spans(other.a) != self.spans(other.b)


@dataclass(frozen=True)
class ArcDiagram:
    n: int
    arcs: tuple[Arc, ...]

    def side(self, side: Side) -> list[Arc]:
        return [arc for arc in self.arcs if arc.side is side]


def _positions(p: Pile | Sequence[int]) -> list[int]:
    seq = p.seq if isinstance(p, Pile) else tuple(p)
    pos = [0] * (len(seq) + 1)
    for idx, x in enumerate(seq, start=1):
        pos[x] = idx
    return pos


def arc_diagram(p: Pile | Sequence[int]) -> ArcDiagram:
    pos = _positions(p)
    n = len(pos) - 1
    arcs = []
    for s in range(1, n):
        a, b = sorted((pos[s], pos[s + 1]))
        arcs.append(Arc(a, b, Side.BELOW if s % 2 else Side.ABOVE, s))
    return ArcDiagram(n, tuple(arcs))


def _no_crossings(diagram: ArcDiagram) -> bool:
    for side in Side:
        arcs = diagram.side(side)
        for x, y in itertools.combinations(arcs, 2):
            if x.crosses(y):
                return False
    return True


def _visible(diagram: ArcDiagram, pos: int, side: Side) -> bool:
    return not any(arc.spans(pos) for arc in diagram.side(side))


def _last_stamp_visible(diagram: ArcDiagram, pos: list[int]) -> bool:
    n = diagram.n
    return _visible(diagram, pos[n], Side.ABOVE if n % 2 == 0 else Side.BELOW)


def is_stamp_folding(p: Pile | Sequence[int]) -> bool:
    return _no_crossings(arc_diagram(p))


def is_semi_meander(p: Pile | Sequence[int]) -> bool:
    diagram = arc_diagram(p)
    return _no_crossings(diagram) and _last_stamp_visible(diagram, _positions(p))


def is_open_meander(p: Pile | Sequence[int]) -> bool:
    diagram = arc_diagram(p)
    pos = _positions(p)
    return (
        _no_crossings(diagram)
        and _visible(diagram, pos[1], Side.ABOVE)
        and _last_stamp_visible(diagram, pos)
    )


PREDICATES = {
    Kind.STAMP: is_stamp_folding,
    Kind.SEMI: is_semi_meander,
    Kind.OPEN: is_open_meander,
}


def predicate(kind: Kind | str):
    return PREDICATES[Kind.coerce(kind)]


def oracle_max_n() -> int:
    raw = os.environ.get(ORACLE_MAX_N_ENV)
    if raw is None:
        return DEFAULT_ORACLE_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ORACLE_MAX_N_ENV} must be an integer, got {raw!r}") from None


class OracleBoundError(ValueError):
    pass


def brute_force_enumerate(n: int, kind: Kind | str, max_n: int | None = None) -> list[Pile]:
    """Every permutation of ``1..n`` of the given kind, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    bound = oracle_max_n() if max_n is None else max_n
    if n > bound:
        raise OracleBoundError(f"n={n} exceeds brute-force bound {bound}")
    test = predicate(kind)
    return [Pile(perm) for perm in itertools.permutations(range(1, n + 1)) if test(perm)]
