"""Seeded randomized property suites behind ``milnor-skein random-suite``.

Every trial draws from its own ``random.Random`` seeded by
``"<suite>/<seed>/<trial>"``, so a summary depends only on (seed, trials).
"""

from __future__ import annotations

import random
from itertools import permutations
from typing import Callable, Iterator

from .diagram import (
    Diagram,
    delete_component,
    from_events,
    loose_crossings,
    loose_underpass_signs,
    self_crossings,
    switch_crossing,
    to_dict,
)
from .generators import front_passing, random_diagram, random_events, random_word
from .invariants import mu, mu_table
from .skein import verify_fox_lemma, verify_theorem_suite


class _Tally:
    def __init__(self) -> None:
        self.checks = 0
        self.failures = 0
        self.first: dict | None = None

    def record(self, ok: bool, witness: Callable[[], dict]) -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = witness()

    def summary(self) -> dict:
        out: dict = {"checks": self.checks, "failures": self.failures}
        if self.first is not None:
            out["first_counterexample"] = self.first
        return out


def _rngs(name: str, seed: int, trials: int) -> Iterator[random.Random]:
    for t in range(trials):
        yield random.Random(f"{name}/{seed}/{t}")


def all_seqs(d: Diagram, rmax: int | None = None) -> Iterator[tuple[int, ...]]:
    top = d.n if rmax is None else rmax
    for r in range(1, top + 1):
        yield from permutations(d.labels, r)


def method_agreement(seed: int, trials: int, max_n: int = 3, max_crossings: int = 14) -> dict:
    tally = _Tally()
    for rng in _rngs("methods", seed, trials):
        d = random_diagram(rng, max_n, max_crossings)
        for seq in all_seqs(d):
            vals = {m: mu(d, seq, m) for m in ("magnus", "fox", "skein")}
            tally.record(
                len(set(vals.values())) == 1,
                lambda: {"diagram": to_dict(d), "seq": list(seq), "values": vals},
            )
    return tally.summary()


def linking_numbers(seed: int, trials: int, max_n: int = 4, max_crossings: int = 20) -> dict:
    tally = _Tally()
    for rng in _rngs("linking", seed, trials):
        d = random_diagram(rng, max_n, max_crossings)
        for i in d.labels:
            got, want = mu(d, [i]), loose_underpass_signs(d, i)
            tally.record(
                got == want,
                lambda: {"diagram": to_dict(d), "label": i, "mu": got, "underpass_signs": want},
            )
    return tally.summary()


def vanishing(seed: int, trials: int, max_n: int = 4, max_crossings: int = 20) -> dict:
    tally = _Tally()
    for rng in _rngs("vanishing", seed, trials):
        d = front_passing(random_diagram(rng, max_n, max_crossings))
        table = mu_table(d)
        tally.record(
            not any(table.entries.values()),
            lambda: {"diagram": to_dict(d), "nonzero": {
                " ".join(map(str, k)): v for k, v in table.entries.items() if v
            }},
        )
    return tally.summary()


def invariance(seed: int, trials: int, max_n: int = 3, max_crossings: int = 14) -> dict:
    """Self-crossing switches, absent-index switches, deletion and cancelling pairs."""
    tally = _Tally()
    for rng in _rngs("invariance", seed, trials):
        d = random_diagram(rng, max_n, max_crossings)
        base = mu_table(d).entries
        selfs = self_crossings(d)
        if selfs:
            cid = rng.choice(selfs)
            after = mu_table(switch_crossing(d, cid)).entries
            tally.record(
                after == base,
                lambda: {"diagram": to_dict(d), "switched_self_crossing": cid},
            )
        loose = loose_crossings(d)
        if loose:
            cid, j = rng.choice(loose)
            after = mu_table(switch_crossing(d, cid)).entries
            bad = [k for k in base if j not in k and base[k] != after[k]]
            tally.record(
                not bad,
                lambda: {"diagram": to_dict(d), "switched": cid, "changed": [list(k) for k in bad]},
            )
        if d.n:
            j = rng.choice(d.labels)
            gone = mu_table(delete_component(d, j)).entries
            bad = [k for k in gone if gone[k] != base[k]]
            tally.record(
                not bad,
                lambda: {"diagram": to_dict(d), "deleted": j, "changed": [list(k) for k in bad]},
            )
        # cancelling pair inserted into an event word
        n = rng.randint(1, max_n)
        events = random_events(rng, n + 1, rng.randint(0, max_crossings - 2))
        lp = rng.randint(1, n + 1)
        at = rng.randint(0, len(events))
        p = rng.randint(1, n)
        padded = events[:at] + [(p, 1), (p, -1)] + events[at:]
        same = mu_table(from_events(n, lp, events)).entries == mu_table(
            from_events(n, lp, padded)
        ).entries
        tally.record(
            same,
            lambda: {"n": n, "loose_position": lp, "events": events, "padded": padded},
        )
    return tally.summary()


def fox_lemma(seed: int, trials: int, per_trial: int = 10) -> dict:
    tally = _Tally()
    for rng in _rngs("lemma", seed, trials):
        for _ in range(per_trial):
            inst = random_lemma_instance(rng)
            lhs, rhs = verify_fox_lemma(*inst)
            tally.record(
                lhs == rhs,
                lambda: {"u": list(inst[0]), "v": list(inst[1]), "k": inst[2], "eps": inst[3],
                         "seq": list(inst[4]), "lhs": lhs, "rhs": rhs},
            )
    return tally.summary()


def random_lemma_instance(rng: random.Random, max_n: int = 5, max_len: int = 10):
    n = rng.randint(1, max_n)
    r = rng.randint(1, n)
    seq = tuple(rng.sample(range(1, n + 1), r))
    k = rng.choice(seq)
    return (
        random_word(rng, n, max_len),
        random_word(rng, n, max_len),
        k,
        rng.choice((1, -1)),
        seq,
    )


def run_all(seed: int, trials: int) -> dict:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    suites = {
        "method_agreement": method_agreement(seed, trials),
        "skein_identity": verify_theorem_suite(seed, trials),
        "fox_lemma": fox_lemma(seed, trials),
        "invariance": invariance(seed, trials),
        "linking_number": linking_numbers(seed, trials),
        "vanishing": vanishing(seed, trials),
    }
    summary: dict = {
        "seed": seed,
        "trials": trials,
        "checks": sum(s["checks"] for s in suites.values()),
        "failures": sum(s["failures"] for s in suites.values()),
        "suites": suites,
    }
    for name, s in suites.items():
        if "first_counterexample" in s:
            summary["first_counterexample"] = {"suite": name, **s["first_counterexample"]}
            break
    return summary
