"""Seeded random diagrams for the property suites.

Plain event diagrams never contain self-crossings.  :func:`joined_diagram`
fixes that while staying realizable: two event strands ``a`` and ``b``
become one component by a connector that leaves the bottom of ``a``, runs
right below the box, up past every strand, left above the box and into
the top of ``b``, always in front.  The other strands are extended to the
new top and bottom so they cross the connector; those crossings are
recorded with the same sign geometry as the event builder.
"""

from __future__ import annotations

import random
from typing import Sequence

from .diagram import LOOSE, OVER, UNDER, Diagram, Pass, check, from_events, trace_events

Event = tuple[int, int]


def random_events(rng: random.Random, strands: int, count: int) -> list[Event]:
    if strands < 2:
        return []
    return [(rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(count)]


def random_event_diagram(
    rng: random.Random, max_n: int = 3, max_crossings: int = 14, min_n: int = 1
) -> Diagram:
    n = rng.randint(min_n, max_n)
    events = random_events(rng, n + 1, rng.randint(0, max_crossings))
    return from_events(n, rng.randint(1, n + 1), events)


def joined_diagram(
    strands: int, loose_strand: int, events: Sequence[Event], a: int, b: int
) -> Diagram:
    """Event diagram on ``strands`` strands with strand ``a`` continued into ``b``.

    Strand numbers are 0-based starting positions.  The strand
    ``loose_strand`` (or the joined component, if it contains it) is the
    loose arc; the other components are labelled 1.. by the top position
    where they start.
    """
    if a == b or not (0 <= a < strands and 0 <= b < strands):
        raise ValueError("join needs two distinct strands")
    paths, signs, bottom = trace_events(strands, events)
    top = list(range(strands))
    head: dict[int, list[Pass]] = {s: [] for s in range(strands)}
    tail: dict[int, list[Pass]] = {s: [] for s in range(strands)}
    connector: list[Pass] = []
    counter = len(signs)

    def cross(strand_passes: list[Pass], sign: int) -> None:
        nonlocal counter
        counter += 1
        cid = f"c{counter}"
        connector.append(Pass(cid, OVER))
        strand_passes.append(Pass(cid, UNDER))
        signs[cid] = sign

    # run below the box, moving right: crosses bottom extensions of strands to the right of a
    for s in sorted((s for s in range(strands) if bottom[s] > bottom[a]), key=lambda s: bottom[s]):
        if s != a:
            cross(tail[s], 1)
    # run above the box, moving left: crosses top extensions of strands right of b
    for s in sorted((s for s in range(strands) if top[s] > top[b]), key=lambda s: -top[s]):
        if s != b:
            cross(head[s], -1)

    full = {s: head[s] + paths[s] + tail[s] for s in range(strands)}
    joined = full[a] + connector + full[b]
    comps: list[tuple[int, list[Pass]]] = []  # (top position, path)
    loose = None
    for s in range(strands):
        if s == b:
            continue
        p = joined if s == a else full[s]
        if s == loose_strand or (s == a and loose_strand == b):
            loose = p
        else:
            comps.append((top[s], p))
    comps.sort(key=lambda t: t[0])
    return check(
        Diagram(
            labels=tuple(range(1, len(comps) + 1)),
            components={k + 1: tuple(p) for k, (_, p) in enumerate(comps)},
            loose=None if loose is None else tuple(loose),
            loose_end="bottom",
            signs=signs,
        )
    )


def random_joined_diagram(
    rng: random.Random, max_n: int = 3, max_crossings: int = 14
) -> Diagram:
    """Random diagram in which one component (of L or the loose arc) is joined."""
    n = rng.randint(1, max_n)
    strands = n + 2  # one strand disappears into the join
    events = random_events(rng, strands, rng.randint(0, max_crossings))
    a, b = rng.sample(range(strands), 2)
    return joined_diagram(strands, rng.randrange(strands), events, a, b)


def random_diagram(rng: random.Random, max_n: int = 3, max_crossings: int = 14) -> Diagram:
    """Mostly plain event diagrams, a quarter of them with a joined component."""
    if rng.random() < 0.25:
        return random_joined_diagram(rng, max_n, max_crossings)
    return random_event_diagram(rng, max_n, max_crossings)


def front_passing(d: Diagram) -> Diagram:
    """Switch every crossing where the loose arc goes under a strand of L."""
    from .diagram import switch_crossing

    table = d.passes_of()
    for pos, (cid, role) in enumerate(d.loose or ()):
        if role == UNDER and any(o != LOOSE for o, _, _ in table[cid]):
            d = switch_crossing(d, cid)
    return d


def random_word(rng: random.Random, n: int, max_len: int) -> tuple[int, ...]:
    return tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(rng.randint(0, max_len)))
