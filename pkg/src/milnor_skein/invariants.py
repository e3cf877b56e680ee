"""Milnor mu-invariants of a string link with a loose component.

Three routes compute the same numbers:

* ``magnus`` -- coefficient of the loose closure in the multilinear ring;
* ``fox`` -- augmented iterated Fox derivatives of the loose closure word;
* ``skein`` -- recursion on crossing changes and smoothings of the loose
  arc, bottoming out at a loose arc that passes in front of everything.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .diagram import LOOSE, UNDER, Diagram, as_loose, serialize, split_crossing, switch_crossing
from .errors import DiagramError
from .group_words import DEFAULT_MAX_TERMS, check_distinct, mu_of_word
from .meridians import DEFAULT_MAX_LETTERS, loose_closure_series, loose_closure_word
from .multilinear import coefficient

METHODS = ("magnus", "fox", "skein")


@dataclass
class MuTable:
    rmax: int
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __getitem__(self, seq: Sequence[int]) -> int:
        seq = tuple(seq)
        return 1 if not seq else self.entries[seq]

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def to_tsv(self) -> str:
        return "".join(f"{' '.join(map(str, k))}\t{v}\n" for k, v in self.rows())


def _check_query(d: Diagram, seq: Sequence[int]) -> tuple[int, ...]:
    if d.loose is None:
        raise DiagramError("diagram has no loose component")
    seq = check_distinct(seq)
    unknown = [i for i in seq if i not in d.labels]
    if unknown:
        raise DiagramError(f"unknown component labels {unknown}")
    return seq


def mu(
    d: Diagram,
    seq: Sequence[int],
    method: str = "magnus",
    max_terms: int = DEFAULT_MAX_TERMS,
    max_letters: int = DEFAULT_MAX_LETTERS,
) -> int:
    seq = _check_query(d, seq)
    if method == "magnus":
        return coefficient(loose_closure_series(d, max_degree=len(seq)), seq)
    if method == "fox":
        if not seq:
            return 1
        return mu_of_word(loose_closure_word(d, max_letters=max_letters), seq, max_terms)
    if method == "skein":
        return mu_via_skein(d, seq)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def mu_table(d: Diagram, rmax: int | None = None) -> MuTable:
    if d.loose is None:
        raise DiagramError("diagram has no loose component")
    if rmax is None:
        rmax = d.n
    if not 0 <= rmax <= d.n:
        raise ValueError(f"rmax must lie in 0..{d.n}, got {rmax}")
    series = loose_closure_series(d, max_degree=rmax)
    table = MuTable(rmax)
    for r in range(1, rmax + 1):
        for seq in permutations(d.labels, r):
            table.entries[seq] = series.coeffs.get(seq, 0)
    return table


def mu_string_link(d: Diagram, j: int, seq: Sequence[int]) -> int:
    """mu_{seq, j}(L): strand j read as a loose arc against the others."""
    if j in seq:
        raise ValueError(f"index {j} cannot occur in both seq and j")
    return mu(as_loose(d, j), seq, "magnus")


def _first_relevant_underpass(d: Diagram, seq: tuple[int, ...]) -> tuple[str, int] | None:
    table = d.passes_of()
    wanted = set(seq)
    for pos, (cid, role) in enumerate(d.loose or ()):
        if role != UNDER:
            continue
        for owner, opos, _ in table[cid]:
            if (owner, opos) != (LOOSE, pos) and owner in wanted:
                return cid, owner
    return None


def mu_via_skein(d: Diagram, seq: Sequence[int]) -> int:
    """mu by crossing-change recursion on the loose arc.

    At the first place the loose arc passes under a strand j named in
    ``seq`` (position k), with sign e:

        mu_seq(d) = mu_seq(d switched) + e * mu_{seq[:k]}(D_infty) * mu_{seq[k+1:]}(D_zero)

    Under-passes beneath strands not in ``seq`` never affect the value.
    When none are left the loose arc is in front of the strands that
    matter and the value is 0.
    """
    seq = _check_query(d, seq)
    memo: dict[tuple[str, tuple[int, ...]], int] = {}

    def rec(dg: Diagram, s: tuple[int, ...]) -> int:
        if not s:
            return 1
        key = (serialize(dg), s)
        if key in memo:
            return memo[key]
        hit = _first_relevant_underpass(dg, s)
        if hit is None:
            value = 0
        else:
            cid, j = hit
            k = s.index(j)
            zero, infty = split_crossing(dg, cid)
            value = rec(switch_crossing(dg, cid), s)
            head = rec(infty, s[:k])
            if head:
                value += dg.signs[cid] * head * rec(zero, s[k + 1 :])
        memo[key] = value
        return value

    return rec(d, seq)
