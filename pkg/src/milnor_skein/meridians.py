"""Arc meridians of L and the loose-arc closure, as series and as words.

Arcs of a strand of L are the pieces between consecutive places where it
passes under another piece of L.  Passing under the loose arc does not
cut a strand: the loose arc is not part of L, so it is invisible in the
complement of L.

Arc 0 of strand i has meridian ``x_i``.  Going under an arc with meridian
``a`` at a crossing of sign ``e`` the meridian changes from ``m`` to
``a^-e m a^e``.  Equivalently, the meridian of an arc equals ``g^-1 x_i g``,
where g is the word read off the strand down to that arc; the loose arc
reads ``a^e`` at each place where it passes under L.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LOOSE, UNDER, Diagram, Pass
from .errors import ConsistencyError, DiagramError, ResourceError
from .group_words import Word, word_inverse, word_multiply
from .multilinear import ONE, Series, conjugate, series_inverse, series_multiply

DEFAULT_MAX_LETTERS = 10**5

# exponent of the over-arc meridian on the left of the conjugation, per unit sign
CONJUGATION_SIDE = -1

ArcMeridianTable = dict[int, list[Series]]


@dataclass(frozen=True)
class Arc:
    component: int
    ordinal: int
    passes: tuple[Pass, ...]


@dataclass(frozen=True)
class _Undercrossing:
    crossing: str
    over: int  # label of the strand on top
    over_arc: int
    sign: int


class _ArcIndex:
    """Arc bookkeeping shared by the series and word solvers."""

    def __init__(self, d: Diagram):
        self.d = d
        self.table = table = d.passes_of()
        self.arc_at: dict[int, list[int]] = {}
        self.under: dict[int, list[_Undercrossing]] = {lab: [] for lab in d.labels}
        cuts = []
        for lab in d.labels:
            ords, arc = [], 0
            for pos, (cid, role) in enumerate(d.components[lab]):
                ords.append(arc)
                if role == UNDER:
                    owner, opos = self.partner(cid, lab, pos)
                    if owner != LOOSE:
                        cuts.append((lab, cid, owner, opos))
                        arc += 1
            self.arc_at[lab] = ords
        for lab, cid, owner, opos in cuts:
            self.under[lab].append(
                _Undercrossing(cid, owner, self.arc_at[owner][opos], d.signs[cid])
            )

    def partner(self, cid: str, owner: int, pos: int) -> tuple[int, int]:
        """Owner and path position of the other pass of ``cid``."""
        for o, p, _ in self.table[cid]:
            if (o, p) != (owner, pos):
                return o, p
        raise DiagramError(f"crossing {cid!r} has a single pass")

    def loose_letters(self) -> list[tuple[int, int, int]]:
        """(label, arc, sign) for each place the loose arc goes under L."""
        d = self.d
        if d.loose is None:
            raise DiagramError("diagram has no loose component")
        out = []
        for pos, (cid, role) in enumerate(d.loose):
            if role != UNDER:
                continue
            owner, opos = self.partner(cid, LOOSE, pos)
            if owner == LOOSE:
                continue
            out.append((owner, self.arc_at[owner][opos], d.signs[cid]))
        return out


def arcs_of(d: Diagram, label: int) -> list[Arc]:
    if label not in d.labels:
        raise DiagramError(f"unknown component label {label!r}")
    idx = _ArcIndex(d)
    count = len(idx.under[label]) + 1
    buckets: list[list[Pass]] = [[] for _ in range(count)]
    for pos, ps in enumerate(d.components[label]):
        if ps.role != UNDER:
            buckets[idx.arc_at[label][pos]].append(ps)
    return [Arc(label, k, tuple(b)) for k, b in enumerate(buckets)]


def _sweep(idx: _ArcIndex, table: ArcMeridianTable, max_degree: int | None) -> bool:
    changed = False
    for lab in idx.d.labels:
        arcs = table[lab]
        for k, ev in enumerate(idx.under[lab]):
            a = table[ev.over][ev.over_arc]
            new = conjugate(a, arcs[k], CONJUGATION_SIDE * ev.sign, max_degree)
            if new != arcs[k + 1]:
                arcs[k + 1] = new
                changed = True
    return changed


def solve_meridians(d: Diagram, max_degree: int | None = None) -> ArcMeridianTable:
    """Meridian of every arc of L in the multilinear quotient ring.

    Runs one Gauss-Seidel sweep per strand count; each sweep makes the
    table exact in one more degree, so the result is a fixpoint, which a
    final sweep confirms.
    """
    idx = _ArcIndex(d)
    table: ArcMeridianTable = {
        lab: [Series.generator(lab) for _ in range(len(idx.under[lab]) + 1)]
        for lab in d.labels
    }
    for _ in range(len(d.labels)):
        if not _sweep(idx, table, max_degree):
            break
    if _sweep(idx, table, max_degree):
        raise ConsistencyError("meridian table did not reach a fixpoint")
    return table


def loose_closure_series(
    d: Diagram, table: ArcMeridianTable | None = None, max_degree: int | None = None
) -> Series:
    """Magnus image of the loose arc closed in front of L."""
    idx = _ArcIndex(d)
    letters = idx.loose_letters()
    if table is None:
        table = solve_meridians(d, max_degree)
    result = ONE
    for lab, arc, sign in letters:
        m = table[lab][arc]
        if sign < 0:
            m = series_inverse(m, max_degree)
        result = series_multiply(result, m, max_degree)
    return result


def _conj_word(a: Word, m: Word, e: int) -> Word:
    left, right = (a, word_inverse(a)) if e > 0 else (word_inverse(a), a)
    return word_multiply(word_multiply(left, m), right)


def loose_closure_word(
    d: Diagram, depth: int | None = None, max_letters: int = DEFAULT_MAX_LETTERS
) -> Word:
    """The loose closure as a free-group word, from ``depth`` substitution rounds.

    Its Magnus expansion agrees with :func:`loose_closure_series` once
    ``depth`` is at least the number of strands of L.
    """
    idx = _ArcIndex(d)
    letters = idx.loose_letters()
    if depth is None:
        depth = max(1, len(d.labels))
    if depth < 1:
        raise ValueError("depth must be at least 1")
    words: dict[int, list[Word]] = {
        lab: [(lab,)] * (len(idx.under[lab]) + 1) for lab in d.labels
    }
    for _ in range(depth):
        new: dict[int, list[Word]] = {}
        for lab in d.labels:
            cur = [(lab,)]
            for ev in idx.under[lab]:
                a = words[ev.over][ev.over_arc]
                nxt = _conj_word(a, cur[-1], CONJUGATION_SIDE * ev.sign)
                if len(nxt) > max_letters:
                    raise ResourceError(
                        f"arc word exceeded {max_letters} letters; use the series method"
                    )
                cur.append(nxt)
            new[lab] = cur
        words = new
    out: Word = ()
    for lab, arc, sign in letters:
        m = words[lab][arc]
        out = word_multiply(out, m if sign > 0 else word_inverse(m))
        if len(out) > max_letters:
            raise ResourceError(f"loose word exceeded {max_letters} letters; use the series method")
    return out
