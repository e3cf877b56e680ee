"""Gauss-code diagrams of string links with an optional loose component.

Strands of L carry positive integer labels.  Each strand, and the loose
arc, is a path: the ordered list of passes through crossings, read along
the orientation (top to bottom for strands of L).  A pass records the
crossing id and whether the path goes over (``"o"``) or under (``"u"``)
there.  Crossing signs live in a separate table.

Planar realizability is never checked.  Link-homotopy invariance of the
computed invariants is only meaningful for realizable codes; the
:func:`from_events` builder always produces one.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import DiagramError, SplitError

OVER = "o"
UNDER = "u"
LOOSE = 0  # owner id used for the loose component in crossing lookups


class Pass(NamedTuple):
    crossing: str
    role: str


Path = tuple[Pass, ...]


@dataclass(frozen=True, eq=True)
class Diagram:
    labels: tuple[int, ...] = ()
    components: dict[int, Path] = field(default_factory=dict)
    loose: Path | None = None
    loose_end: str = "bottom"
    signs: dict[str, int] = field(default_factory=dict)

    __hash__ = None  # type: ignore[assignment]

    @property
    def n(self) -> int:
        return len(self.labels)

    def path(self, owner: int) -> Path:
        if owner == LOOSE:
            if self.loose is None:
                raise DiagramError("diagram has no loose component")
            return self.loose
        return self.components[owner]

    def owners(self) -> list[int]:
        out = list(self.labels)
        if self.loose is not None:
            out.append(LOOSE)
        return out

    def passes_of(self) -> dict[str, list[tuple[int, int, str]]]:
        """Map crossing id -> list of (owner, position in path, role)."""
        found: dict[str, list[tuple[int, int, str]]] = {}
        for owner in self.owners():
            for pos, (cid, role) in enumerate(self.path(owner)):
                found.setdefault(cid, []).append((owner, pos, role))
        return found


def _natural(s: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s)]


# -- validation ---------------------------------------------------------------


def validate(d: Diagram) -> list[str]:
    """Return every invariant violation; an empty list means valid."""
    problems: list[str] = []
    if len(set(d.labels)) != len(d.labels):
        problems.append("duplicate component labels")
    for lab in d.labels:
        if not isinstance(lab, int) or isinstance(lab, bool) or lab <= 0:
            problems.append(f"label {lab!r} is not a positive integer")
    if set(d.components) != set(d.labels):
        extra = sorted(set(d.components) - set(d.labels))
        missing = sorted(set(d.labels) - set(d.components))
        if extra:
            problems.append(f"unknown component labels {extra}")
        if missing:
            problems.append(f"labels without a path {missing}")
    if d.loose_end not in ("top", "bottom"):
        problems.append(f"loose_end must be 'top' or 'bottom', got {d.loose_end!r}")
    for cid, s in d.signs.items():
        if s not in (1, -1) or isinstance(s, bool):
            problems.append(f"crossing {cid!r} has bad sign {s!r}")

    roles: dict[str, list[str]] = {}
    paths = [d.components[k] for k in d.labels if k in d.components]
    if d.loose is not None:
        paths.append(d.loose)
    for p in paths:
        for ps in p:
            if ps.role not in (OVER, UNDER):
                problems.append(f"crossing {ps.crossing!r} has bad role {ps.role!r}")
            roles.setdefault(ps.crossing, []).append(ps.role)
    for cid in sorted(roles, key=_natural):
        rs = roles[cid]
        if cid not in d.signs:
            problems.append(f"pass references unknown crossing {cid!r}")
        if len(rs) != 2:
            problems.append(f"crossing {cid!r} is referenced {len(rs)} times, expected 2")
        elif sorted(rs) != [OVER, UNDER]:
            problems.append(f"crossing {cid!r} needs one over and one under pass, got {rs}")
    for cid in sorted(set(d.signs) - set(roles), key=_natural):
        problems.append(f"crossing {cid!r} is never referenced")
    return problems


def check(d: Diagram) -> Diagram:
    problems = validate(d)
    if problems:
        raise DiagramError("invalid diagram: " + "; ".join(problems), problems)
    return d


# -- JSON format --------------------------------------------------------------


def _path_from_json(raw, where: str) -> Path:
    if not isinstance(raw, list):
        raise DiagramError(f"{where}: expected a list of passes")
    out = []
    for item in raw:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not isinstance(item[0], str)
            or not isinstance(item[1], str)
        ):
            raise DiagramError(f"{where}: malformed pass {item!r}")
        out.append(Pass(item[0], item[1]))
    return tuple(out)


def _label_from_json(tok) -> int:
    if not isinstance(tok, str) or not tok.isdigit() or int(tok) <= 0:
        raise DiagramError(f"unknown label {tok!r}: labels are positive integer strings")
    return int(tok)


def diagram_from_dict(doc: dict) -> Diagram:
    if not isinstance(doc, dict):
        raise DiagramError("diagram document must be a JSON object")
    required = {"n", "labels", "components", "signs"}
    missing = required - set(doc)
    if missing:
        raise DiagramError(f"missing keys {sorted(missing)}")
    labels = doc["labels"]
    if not isinstance(labels, list):
        raise DiagramError("'labels' must be a list")
    labels_t = tuple(_label_from_json(t) for t in labels)
    if not isinstance(doc["n"], int) or doc["n"] != len(labels_t):
        raise DiagramError(f"'n' = {doc['n']!r} does not match {len(labels_t)} labels")
    comps_raw = doc["components"]
    if not isinstance(comps_raw, dict):
        raise DiagramError("'components' must be an object")
    components = {
        _label_from_json(k): _path_from_json(v, f"component {k}") for k, v in comps_raw.items()
    }
    loose_raw = doc.get("loose")
    loose = None if loose_raw is None else _path_from_json(loose_raw, "loose")
    signs_raw = doc["signs"]
    if not isinstance(signs_raw, dict):
        raise DiagramError("'signs' must be an object")
    for cid, s in signs_raw.items():
        if not isinstance(s, int) or isinstance(s, bool) or s not in (1, -1):
            raise DiagramError(f"crossing {cid!r} has bad sign {s!r}")
    return check(
        Diagram(
            labels=labels_t,
            components=components,
            loose=loose,
            loose_end=doc.get("loose_end", "bottom"),
            signs=dict(signs_raw),
        )
    )


def parse_gauss(text: str) -> Diagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed JSON: {exc}") from exc
    return diagram_from_dict(doc)


def _dump_path(p: Path) -> str:
    return json.dumps([[cid, role] for cid, role in p])


def serialize(d: Diagram) -> str:
    """Canonical JSON text: sorted keys, one component per line."""
    comp_lines = [
        f'    "{lab}": {_dump_path(d.components[lab])}' for lab in sorted(d.labels)
    ]
    comps = "{\n" + ",\n".join(comp_lines) + "\n  }" if comp_lines else "{}"
    signs = {cid: d.signs[cid] for cid in sorted(d.signs, key=_natural)}
    loose = "null" if d.loose is None else _dump_path(d.loose)
    lines = [
        f'  "components": {comps}',
        f'  "labels": {json.dumps([str(x) for x in d.labels])}',
        f'  "loose": {loose}',
        f'  "loose_end": {json.dumps(d.loose_end)}',
        f'  "n": {d.n}',
        f'  "signs": {json.dumps(signs)}',
    ]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def to_dict(d: Diagram) -> dict:
    return json.loads(serialize(d))


# -- event builder ------------------------------------------------------------


def trace_events(
    strands: int, events: Sequence[Sequence[int]]
) -> tuple[list[list[Pass]], dict[str, int], list[int]]:
    """Run crossing events on ``strands`` vertical strands.

    Strands are numbered 0.. by starting position.  Event ``(p, +1)``: the
    strand at position p crosses over the strand at p+1 and they swap,
    giving a positive crossing; ``(p, -1)`` is the same move with the left
    strand passing under, a negative crossing.  Returns the passes of each
    strand, the sign table, and the final position (0-based) of each strand.
    """
    at = list(range(strands))  # position -> strand
    paths: list[list[Pass]] = [[] for _ in range(strands)]
    signs: dict[str, int] = {}
    for idx, ev in enumerate(events, start=1):
        p, e = int(ev[0]), int(ev[1])
        if not 1 <= p < strands:
            raise DiagramError(f"event {idx}: position {p} out of range 1..{strands - 1}")
        if e not in (1, -1):
            raise DiagramError(f"event {idx}: exponent must be +1 or -1, got {e}")
        cid = f"c{idx}"
        left, right = at[p - 1], at[p]
        paths[left].append(Pass(cid, OVER if e > 0 else UNDER))
        paths[right].append(Pass(cid, UNDER if e > 0 else OVER))
        signs[cid] = e
        at[p - 1], at[p] = right, left
    final = [0] * strands
    for pos, s in enumerate(at):
        final[s] = pos
    return paths, signs, final


def from_events(n: int, loose_position: int, events: Sequence[Sequence[int]]) -> Diagram:
    """Monotone diagram on n strands of L plus the loose strand.

    The strand starting at ``loose_position`` (1-based among n+1) is the
    loose component; the others become L_1..L_n in starting order.
    """
    if n < 0:
        raise DiagramError("n must be non-negative")
    if not 1 <= loose_position <= n + 1:
        raise DiagramError(f"loose_position {loose_position} out of range 1..{n + 1}")
    paths, signs, _ = trace_events(n + 1, events)
    loose_idx = loose_position - 1
    others = [s for s in range(n + 1) if s != loose_idx]
    return check(
        Diagram(
            labels=tuple(range(1, n + 1)),
            components={k + 1: tuple(paths[s]) for k, s in enumerate(others)},
            loose=tuple(paths[loose_idx]),
            loose_end="bottom",
            signs=signs,
        )
    )


def parse_events(text: str) -> Diagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or not {"n", "loose_position", "events"} <= set(doc):
        raise DiagramError("event document needs 'n', 'loose_position' and 'events'")
    events = doc["events"]
    if not isinstance(events, list) or not all(
        isinstance(ev, list) and len(ev) == 2 and all(isinstance(x, int) for x in ev)
        for ev in events
    ):
        raise DiagramError("'events' must be a list of [position, exponent] pairs")
    return from_events(doc["n"], doc["loose_position"], events)


# -- editing ------------------------------------------------------------------


def switch_crossing(d: Diagram, cid: str) -> Diagram:
    if cid not in d.signs:
        raise DiagramError(f"unknown crossing {cid!r}")
    flip = {OVER: UNDER, UNDER: OVER}

    def sw(p: Path) -> Path:
        return tuple(Pass(c, flip[r]) if c == cid else Pass(c, r) for c, r in p)

    signs = dict(d.signs)
    signs[cid] = -signs[cid]
    return Diagram(
        labels=d.labels,
        components={k: sw(v) for k, v in d.components.items()},
        loose=None if d.loose is None else sw(d.loose),
        loose_end=d.loose_end,
        signs=signs,
    )


def _prune(
    labels: Iterable[int],
    components: dict[int, Path],
    loose: Path | None,
    loose_end: str,
    signs: dict[str, int],
    flipped: Iterable[str] = (),
) -> Diagram:
    """Drop crossings that lost a pass; negate signs of ``flipped`` survivors."""
    count: dict[str, int] = {}
    paths = list(components.values()) + ([loose] if loose is not None else [])
    for p in paths:
        for ps in p:
            count[ps.crossing] = count.get(ps.crossing, 0) + 1
    alive = {cid for cid, k in count.items() if k == 2}

    def keep(p: Path) -> Path:
        return tuple(ps for ps in p if ps.crossing in alive)

    new_signs = {cid: s for cid, s in signs.items() if cid in alive}
    for cid in flipped:
        if cid in new_signs:
            new_signs[cid] = -new_signs[cid]
    return Diagram(
        labels=tuple(labels),
        components={k: keep(v) for k, v in components.items()},
        loose=None if loose is None else keep(loose),
        loose_end=loose_end,
        signs=new_signs,
    )


def delete_component(d: Diagram, label: int) -> Diagram:
    """Remove strand ``label`` of L together with every crossing on it."""
    if label == LOOSE or label not in d.labels:
        raise DiagramError(f"unknown component label {label!r}")
    comps = {k: v for k, v in d.components.items() if k != label}
    return _prune(
        [k for k in d.labels if k != label], comps, d.loose, d.loose_end, d.signs
    )


def split_crossing(d: Diagram, cid: str) -> tuple[Diagram, Diagram]:
    """Smooth a crossing of the loose arc with a strand L_k both ways.

    With v, w the parts of the loose arc before and after the crossing and
    u the part of L_k before it, returns ``(D_zero, D_infty)`` where L_k
    is removed and the loose arc becomes ``u w`` resp. ``v`` followed by
    ``u`` traversed backwards.  Crossings with exactly one pass on the
    reversed material change sign.
    """
    if d.loose is None:
        raise SplitError("diagram has no loose component")
    entries = d.passes_of().get(cid)
    if entries is None:
        raise SplitError(f"unknown crossing {cid!r}")
    owners = sorted(e[0] for e in entries)
    if owners[0] != LOOSE or owners[1] == LOOSE:
        raise SplitError(f"crossing {cid!r} is not between the loose arc and a strand of L")
    lpos = next(pos for owner, pos, _ in entries if owner == LOOSE)
    k, kpos = next((owner, pos) for owner, pos, _ in entries if owner != LOOSE)
    v, w = d.loose[:lpos], d.loose[lpos + 1 :]
    u = d.components[k][:kpos]
    rest = {j: p for j, p in d.components.items() if j != k}
    labels = [j for j in d.labels if j != k]

    zero = _prune(labels, rest, u + w, d.loose_end, d.signs)
    on_u: dict[str, int] = {}
    for ps in u:
        on_u[ps.crossing] = on_u.get(ps.crossing, 0) + 1
    infty = _prune(
        labels,
        rest,
        v + tuple(reversed(u)),
        "top",
        d.signs,
        flipped=[c for c, m in on_u.items() if m == 1],
    )
    return zero, infty


def loose_underpass_signs(d: Diagram, label: int) -> int:
    """Sum of signs where the loose arc passes under strand ``label``."""
    if d.loose is None:
        raise DiagramError("diagram has no loose component")
    if label not in d.labels:
        raise DiagramError(f"unknown component label {label!r}")
    table = d.passes_of()
    total = 0
    for pos, (cid, role) in enumerate(d.loose):
        if role != UNDER:
            continue
        if any(owner == label for owner, _, _ in table[cid]):
            total += d.signs[cid]
    return total


def crossing_kind(d: Diagram, cid: str) -> tuple[int, int]:
    """Sorted pair of owners (LOOSE = 0) of the two passes of ``cid``."""
    entries = d.passes_of()[cid]
    a, b = sorted(e[0] for e in entries)
    return a, b


def self_crossings(d: Diagram) -> list[str]:
    out = []
    for cid, entries in d.passes_of().items():
        if len(entries) == 2 and entries[0][0] == entries[1][0]:
            out.append(cid)
    return sorted(out, key=_natural)


def loose_crossings(d: Diagram) -> list[tuple[str, int]]:
    """Crossings of the loose arc with strands of L, as (id, label)."""
    out = []
    for cid, entries in d.passes_of().items():
        owners = sorted(e[0] for e in entries)
        if owners[0] == LOOSE and owners[1] != LOOSE:
            out.append((cid, owners[1]))
    return sorted(out, key=lambda t: _natural(t[0]))


def as_loose(d: Diagram, j: int) -> Diagram:
    """Reinterpret strand j of a loose-free diagram as the loose arc."""
    if d.loose is not None:
        raise DiagramError("diagram already has a loose component")
    if j not in d.labels:
        raise DiagramError(f"unknown component label {j!r}")
    return Diagram(
        labels=tuple(k for k in d.labels if k != j),
        components={k: v for k, v in d.components.items() if k != j},
        loose=d.components[j],
        loose_end="bottom",
        signs=dict(d.signs),
    )
