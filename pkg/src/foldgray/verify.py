"""Post-hoc certification of rotation Gray code listings."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .common import Kind
from .oracle import brute_force_enumerate, predicate
from .pile import Pile, PileError, StampRotation, apply_rotation

DEFAULT_EXHAUSTIVE_MAX_N = 8


def find_stamp_rotation(a: Pile, b: Pile) -> StampRotation | None:
    """The stamp rotation taking ``a`` to ``b``, or ``None``.

    The rotation is unique when it exists: ``k`` must be the first position
    where the piles differ, ``i`` is where ``b[k]`` sits in ``a``, and the block
    length is fixed by where ``a[k]`` lands in ``b``. So this is O(n) and
    agrees with any exhaustive tie-broken scan.
    """
    if len(a) != len(b):
        raise PileError(f"order mismatch: {len(a)} vs {len(b)}")
    x, y = a.seq, b.seq
    n = len(x)
    k = next((pos for pos in range(n) if x[pos] != y[pos]), None)
    if k is None:
        return None
    i = x.index(y[k])
    width = y.index(x[k]) - k
    if i <= k or width < 1:
        return None
    rot = StampRotation(i + 1, i + width, k + 1)
    if rot.j > n or apply_rotation(a, rot) != b:
        return None
    return rot


@dataclass
class VerifyReport:
    n: int
    kind: str
    count: int
    all_valid: bool = True
    all_adjacent: bool = True
    cyclic: bool = True
    first_last_ok: bool = True
    witness_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.all_valid and self.all_adjacent and self.cyclic
                and self.first_last_ok and not self.witness_failures)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)


def verify_listing(listing: Sequence[Pile] | Iterable[Pile], kind: Kind | str,
                   exhaustive_max_n: int = DEFAULT_EXHAUSTIVE_MAX_N) -> VerifyReport:
    """Check validity, adjacency, cyclicity, endpoints and exhaustiveness.

    Failures are recorded in the report rather than raised. Exhaustiveness is
    compared against the brute-force oracle only up to ``exhaustive_max_n``;
    beyond that only duplicates are caught.
    """
    kind = Kind.coerce(kind)
    listing = list(listing)
    if not listing:
        raise ValueError("cannot verify an empty listing")
    n = len(listing[0])
    report = VerifyReport(n=n, kind=kind.value, count=len(listing))
    if any(len(p) != n for p in listing):
        raise ValueError("listing mixes piles of different orders")
    is_valid = predicate(kind)

    for idx, p in enumerate(listing):
        if not is_valid(p):
            report.all_valid = False
            report.witness_failures.append((idx, [str(p)], f"not a valid {kind.value} pile"))

    def check_pair(idx: int, a: Pile, b: Pile) -> bool:
        rot = find_stamp_rotation(a, b)
        if rot is None:
            report.witness_failures.append((idx, [str(a), str(b)], "no stamp rotation"))
            return False
        if apply_rotation(a, rot) != b:
            report.witness_failures.append((idx, [str(a), str(b)], f"witness {rot} does not reproduce"))
            return False
        return True

    for idx in range(len(listing) - 1):
        if not check_pair(idx, listing[idx], listing[idx + 1]):
            report.all_adjacent = False
    if len(listing) > 1:
        report.cyclic = check_pair(len(listing) - 1, listing[-1], listing[0])

    if n >= 2:
        first = Pile.identity(n)
        last = Pile((2, 1) + tuple(range(3, n + 1)))
        report.first_last_ok = listing[0] == first and listing[-1] == last
        if not report.first_last_ok:
            report.witness_failures.append(
                (0, [str(listing[0]), str(listing[-1])], f"expected endpoints {first} and {last}"))

    seen: set[Pile] = set()
    for idx, p in enumerate(listing):
        if p in seen:
            report.witness_failures.append((idx, [str(p)], "duplicate pile"))
        seen.add(p)
    if n <= exhaustive_max_n:
        expected = set(brute_force_enumerate(n, kind, max_n=exhaustive_max_n))
        missing = expected - seen
        if missing:
            report.witness_failures.append(
                (len(listing), sorted(str(p) for p in missing)[:10],
                 f"{len(missing)} piles missing from listing"))
    return report
