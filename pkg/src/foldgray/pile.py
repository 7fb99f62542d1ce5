"""Permutation representation of a pile of stamps and the rotation primitives.

Positions are 1-based throughout, matching the way foldings are usually
written down (``p1 p2 ... pn``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class PileError(ValueError):
    """Raised for malformed piles, rotations or out-of-range positions."""


@dataclass(frozen=True)
class Pile:
    """An immutable pile: a permutation of the stamp labels ``1..n``."""

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        seq = tuple(int(x) for x in self.seq)
        object.__setattr__(self, "seq", seq)
        if not seq:
            raise PileError("a pile needs at least one stamp")
        if sorted(seq) != list(range(1, len(seq) + 1)):
            raise PileError(f"not a permutation of 1..{len(seq)}: {seq}")

    @classmethod
    def identity(cls, n: int) -> "Pile":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Pile":
        """Parse ``"6 5 1 2 3 4 7"`` or, for n <= 9, the compact ``"6512347"``."""
        text = text.strip()
        parts = text.replace(",", " ").split()
        if len(parts) == 1 and len(parts[0]) > 1:
            if not parts[0].isdigit():
                raise PileError(f"cannot parse pile: {text!r}")
            parts = list(parts[0])
            if "0" in parts:
                raise PileError(f"compact form only covers n <= 9: {text!r}")
        try:
            return cls(tuple(int(x) for x in parts))
        except ValueError as exc:
            if isinstance(exc, PileError):
                raise
            raise PileError(f"cannot parse pile: {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.seq)

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self) -> Iterator[int]:
        return iter(self.seq)

    def __getitem__(self, pos: int) -> int:
        return self.seq[pos]

    def __str__(self) -> str:
        return " ".join(map(str, self.seq))

    def compact(self) -> str:
        if self.n > 9:
            raise PileError("compact digit form is only defined for n <= 9")
        return "".join(map(str, self.seq))

    def reversed(self) -> "Pile":
        return Pile(self.seq[::-1])


@dataclass(frozen=True)
class StampRotation:
    """Move the block at positions ``i..j`` so that it starts at position ``k``."""

    i: int
    j: int
    k: int

    def check(self, n: int) -> None:
        if not (1 <= self.k < self.i <= self.j <= n):
            raise PileError(f"need 1 <= k < i <= j <= {n}, got {self}")


@dataclass
class SignArray:
    """Per-level rotation directions; 1 rotates right, 0 rotates left."""

    n: int
    q: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.q:
            self.q = [1] * self.n
        if len(self.q) != self.n:
            raise PileError(f"sign array must have length {self.n}")

    def __getitem__(self, t: int) -> int:
        return self.q[t]

    def flip(self, t: int) -> None:
        self.q[t] ^= 1


def _as_tuple(p: Pile | Sequence[int]) -> tuple[int, ...]:
    return p.seq if isinstance(p, Pile) else tuple(p)


def apply_rotation(p: Pile, r: StampRotation) -> Pile:
    seq = _as_tuple(p)
    r.check(len(seq))
    i, j, k = r.i, r.j, r.k
    return Pile(seq[: k - 1] + seq[i - 1 : j] + seq[k - 1 : i - 1] + seq[j:])


def rotate_left(p: Pile, i: int) -> Pile:
    """Bring the suffix starting at position ``i`` to the front."""
    seq = _as_tuple(p)
    if not 1 <= i <= len(seq):
        raise PileError(f"position {i} out of range 1..{len(seq)}")
    return Pile(seq[i - 1 :] + seq[: i - 1])


def rotate_right(p: Pile, j: int) -> Pile:
    """Send the prefix ending at position ``j`` to the back."""
    seq = _as_tuple(p)
    if not 1 <= j <= len(seq):
        raise PileError(f"position {j} out of range 1..{len(seq)}")
    return Pile(seq[j:] + seq[:j])


def index_of(e: int, p: Pile | Sequence[int]) -> int:
    seq = _as_tuple(p)
    for pos, x in enumerate(seq, start=1):
        if x == e:
            return pos
    raise PileError(f"stamp {e} not in {seq}")


def rots(p: Pile) -> list[Pile]:
    """All ``n`` string rotations of ``p``, starting with ``p`` itself."""
    return [rotate_left(p, i) for i in range(1, len(p) + 1)]


class CircularPile:
    """Working pile stored as a circular doubly linked list with a movable head.

    Node identity is the stamp label itself, so ``nxt[x]`` and ``prv[x]`` are the
    labels following and preceding ``x``. Moving ``head`` is a string rotation;
    the circular order only changes through :meth:`insert_before` and
    :meth:`unlink`. The generators reach into ``nxt``/``prv`` directly in their
    inner loops.
    """

    __slots__ = ("nxt", "prv", "head", "capacity")

    def __init__(self, labels: Iterable[int], capacity: int | None = None) -> None:
        labels = list(labels)
        if not labels:
            raise PileError("a pile needs at least one stamp")
        cap = max(capacity or 0, max(labels))
        self.capacity = cap
        self.nxt = [0] * (cap + 2)
        self.prv = [0] * (cap + 2)
        for a, b in zip(labels, labels[1:] + labels[:1]):
            self.nxt[a] = b
            self.prv[b] = a
        self.head = labels[0]

    def labels(self, head: int | None = None, length: int | None = None) -> tuple[int, ...]:
        x = self.head if head is None else head
        out = [x]
        nxt = self.nxt
        y = nxt[x]
        while y != x and (length is None or len(out) < length):
            out.append(y)
            y = nxt[y]
        return tuple(out)

    def __len__(self) -> int:
        return len(self.labels())

    def to_pile(self) -> Pile:
        return Pile(self.labels())

    def rotate_right(self, j: int = 1) -> None:
        """Simple right rotation applied ``j`` times (head moves forward)."""
        nxt = self.nxt
        h = self.head
        for _ in range(j):
            h = nxt[h]
        self.head = h

    def rotate_left(self, j: int = 1) -> None:
        """Simple left rotation applied ``j`` times (head moves backward)."""
        prv = self.prv
        h = self.head
        for _ in range(j):
            h = prv[h]
        self.head = h

    def insert_before(self, at: int, label: int) -> None:
        last = self.prv[at]
        self.nxt[label] = at
        self.prv[label] = last
        self.nxt[last] = label
        self.prv[at] = label

    def unlink(self, label: int) -> None:
        a, b = self.prv[label], self.nxt[label]
        self.nxt[a] = b
        self.prv[b] = a
        if self.head == label:
            self.head = b
