"""Iterative generator producing the same listings as :mod:`foldgray.recursive`.

The sign array replaces the recursion: after each emission the levels are
scanned from the top down. A level whose window has its largest stamp at the
far end for its direction is fully rotated, so its sign flips and its window
shrinks by that stamp. The first level that is not fully rotated advances by
one step of the rotation Gray code.
"""
from __future__ import annotations

from typing import Iterator

from .common import GenConfig, Kind, OpCounters
from .pile import CircularPile, Pile
from .recursive import DEFAULT_MATERIALIZE_MAX_N, Sink, _linked_nsm, _materialize, iter_stream


def gen_iterative(cfg: GenConfig, sink: Sink | None = None,
                  counters: OpCounters | None = None) -> int:
    """Run the iterative generator; same contract as ``gen_recursive``."""
    n = cfg.n
    stamps = cfg.kind is Kind.STAMP
    work = CircularPile(range(1, n + 1))
    nxt, prv = work.nxt, work.prv
    p = work.head
    q = [1] * n
    count = 0
    last_total = 0

    def emit(head: int) -> None:
        nonlocal count, last_total
        count += 1
        if sink is not None:
            out = [head]
            x = nxt[head]
            while x != head:
                out.append(x)
                x = nxt[x]
            sink(tuple(out))
        if counters is not None:
            total = counters.total
            counters.emissions += 1
            counters.max_ops_per_emission = max(counters.max_ops_per_emission,
                                                total - last_total)
            last_total = total

    while True:
        emit(p)
        head = p
        tail = prv[p]
        t = n - 1
        while t >= 0:
            if q[t] and head == t + 1:
                q[t] = 0
                head = nxt[head]
            elif not q[t] and tail == t + 1:
                q[t] = 1
                tail = prv[tail]
            else:
                break
            t -= 1
        if counters is not None:
            counters.scans += n - t

        if t == n - 1:
            d = q[t]
            if stamps:
                j = 1
                for _ in range(n - 2):
                    p = nxt[p] if d else prv[p]
                    if counters is not None:
                        counters.rotations += 1
                    emit(p)
            else:
                j = _linked_nsm(nxt, prv, p, n, d, counters)
            if d:
                for _ in range(j):
                    p = nxt[p]
            else:
                for _ in range(j):
                    p = prv[p]
            if counters is not None:
                counters.rotations += j
        elif t > 0:
            # detach the window head..tail as its own cycle, rotate it, re-link
            before = prv[head]
            after = nxt[tail]
            prv[head] = tail
            nxt[tail] = head
            d = q[t]
            j = _linked_nsm(nxt, prv, head, t + 1, d, counters)
            moved = head
            if d:
                for _ in range(j):
                    moved = nxt[moved]
            else:
                for _ in range(j):
                    moved = prv[moved]
            if p == head:
                p = moved
            new_tail = prv[moved]
            nxt[before] = moved
            prv[moved] = before
            prv[after] = new_tail
            nxt[new_tail] = after
            if counters is not None:
                counters.rotations += j
                counters.splices += 2
        if t <= 0:
            break
    return count


def iter_iterative(cfg: GenConfig) -> Iterator[Pile]:
    return iter_stream(gen_iterative, cfg)


def listing_iterative(cfg: GenConfig, max_n: int = DEFAULT_MATERIALIZE_MAX_N) -> list[Pile]:
    return _materialize(gen_iterative, cfg, max_n)
