"""Recursive rotation Gray code generator for stamp foldings and semi-meanders.

Level ``t`` of the computation tree holds the semi-meanders of order ``t+1``.
A node's children are obtained by inserting stamp ``t+2`` at the back (sign 1)
or the front (sign 0) and then rotating through every valid string rotation.
Signs flip each time a node is generated at a level, which reflects the child
order of consecutive siblings and makes the listing a cyclic Gray code.
"""
from __future__ import annotations

import queue
import sys
import threading
from typing import Callable, Iterator, Sequence

from .common import GenConfig, Kind, OpCounters
from .pile import CircularPile, Pile

Sink = Callable[[tuple[int, ...]], None]

DEFAULT_MATERIALIZE_MAX_N = 12


def next_semi_meander_steps(p: Pile | Sequence[int], r: int, d: int) -> int:
    """Number of simple rotations from semi-meander ``p`` to the next one.

    ``d == 1`` counts simple right rotations (the front stamp is examined),
    ``d == 0`` counts simple left rotations (the back stamp is examined). When
    the examined stamp is ``r`` itself the rotation class has been exhausted
    and a single wrapping step is returned.
    """
    seq = p.seq if isinstance(p, Pile) else tuple(p)
    seq = seq[:r]
    e = seq[0] if d else seq[r - 1]
    if e == 1 and r % 2 == 0:
        return 1
    target = e + 1 if (e - r) % 2 == 0 else e - 1
    if target > r:
        return 1
    pos = seq.index(target) + 1
    return pos if d else r - pos + 1


def _linked_nsm(nxt: list[int], prv: list[int], head: int, r: int, d: int,
                counters: OpCounters | None) -> int:
    """Linked-list form of :func:`next_semi_meander_steps` for a circular window."""
    if counters is not None:
        counters.nsm_calls += 1
    e = head if d else prv[head]
    if e == 1 and not r & 1:
        return 1
    target = e + 1 if not (e - r) & 1 else e - 1
    if target > r:
        return 1
    steps = 1
    if d:
        x = head
        while x != target:
            x = nxt[x]
            steps += 1
    else:
        x = prv[head]
        while x != target:
            x = prv[x]
            steps += 1
    if counters is not None:
        counters.scans += steps
    return steps


def gen_recursive(cfg: GenConfig, sink: Sink | None = None,
                  counters: OpCounters | None = None) -> int:
    """Run the recursive generator, pushing each pile to ``sink``.

    ``sink`` receives an immutable tuple of labels; pass ``None`` to count
    only. Returns the number of piles generated.
    """
    n = cfg.n
    stamps = cfg.kind is Kind.STAMP
    work = CircularPile([1], capacity=n)
    nxt, prv = work.nxt, work.prv
    q = [1] * (n + 1)
    count = 0
    last_total = 0
    leaf = n - 1

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

    def gen(head: int, t: int) -> None:
        r = t + 1
        i = 1
        while i <= r:
            if t >= leaf:
                emit(head)
            else:
                new = t + 2
                last = prv[head]
                nxt[new] = head
                prv[new] = last
                nxt[last] = new
                prv[head] = new
                gen(head if q[t + 1] else new, t + 1)
                q[t + 1] ^= 1
                # rotations never change circular order, so new still precedes head
                last = prv[new]
                nxt[last] = head
                prv[head] = last
                if counters is not None:
                    counters.splices += 2
            if stamps and t >= leaf:
                j = 1
            else:
                j = _linked_nsm(nxt, prv, head, r, q[t], counters)
            if q[t]:
                for _ in range(j):
                    head = nxt[head]
            else:
                for _ in range(j):
                    head = prv[head]
            if counters is not None:
                counters.rotations += j
            i += j

    limit = sys.getrecursionlimit()
    if n + 50 > limit:
        sys.setrecursionlimit(n + 50)
    gen(1, 0)
    return count


def iter_stream(run: Callable[[GenConfig, Sink], int], cfg: GenConfig,
                buffer: int = 256) -> Iterator[Pile]:
    """Pull-style adapter over a push-style generator with bounded buffering."""
    chunks: queue.Queue = queue.Queue(maxsize=8)
    done = object()
    failure: list[BaseException] = []
    stop = threading.Event()

    def producer() -> None:
        batch: list[tuple[int, ...]] = []

        def sink(labels: tuple[int, ...]) -> None:
            if stop.is_set():
                raise GeneratorExit
            batch.append(labels)
            if len(batch) >= buffer:
                chunks.put(batch.copy())
                batch.clear()

        try:
            run(cfg, sink)
            if batch:
                chunks.put(batch)
        except GeneratorExit:
            pass
        except BaseException as exc:  # re-raised in the consumer
            failure.append(exc)
        finally:
            chunks.put(done)

    worker = threading.Thread(target=producer, daemon=True)
    worker.start()
    try:
        while True:
            item = chunks.get()
            if item is done:
                break
            for labels in item:
                yield Pile(labels)
        if failure:
            raise failure[0]
    finally:
        stop.set()
        while worker.is_alive():
            try:
                chunks.get(timeout=0.05)
            except queue.Empty:
                pass


def iter_recursive(cfg: GenConfig) -> Iterator[Pile]:
    return iter_stream(gen_recursive, cfg)


def _materialize(run: Callable[[GenConfig, Sink], int], cfg: GenConfig,
                 max_n: int) -> list[Pile]:
    if cfg.n > max_n:
        raise ValueError(f"refusing to materialize a listing for n={cfg.n} > {max_n}")
    out: list[Pile] = []
    run(cfg, lambda labels: out.append(Pile(labels)))
    return out


def listing_recursive(cfg: GenConfig, max_n: int = DEFAULT_MATERIALIZE_MAX_N) -> list[Pile]:
    return _materialize(gen_recursive, cfg, max_n)
