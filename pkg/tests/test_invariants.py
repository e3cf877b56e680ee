import random
from math import factorial

import pytest

from milnor_skein.diagram import delete_component, from_events, loose_crossings, switch_crossing
from milnor_skein.errors import DiagramError
from milnor_skein.generators import front_passing, random_diagram, random_event_diagram
from milnor_skein.invariants import METHODS, MuTable, mu, mu_string_link, mu_table, mu_via_skein
from milnor_skein.suites import all_seqs

from support import load


@pytest.mark.parametrize("method", METHODS)
def test_examples_by_method(method, borromean, one_crossing):
    assert mu(from_events(2, 3, []), [1, 2], method) == 0
    assert mu(borromean, [1, 2], method) == -1
    assert mu(borromean, [2, 1], method) == 1
    assert mu(one_crossing, [1], method) == 1
    assert mu(borromean, [], method) == 1


def test_query_errors(borromean):
    with pytest.raises(ValueError):
        mu(borromean, [1, 1])
    with pytest.raises(DiagramError):
        mu(borromean, [3])
    with pytest.raises(DiagramError):
        mu(load("hopf.json"), [1])
    with pytest.raises(ValueError):
        mu(borromean, [1], "bogus")


def test_table_examples(borromean):
    assert not any(mu_table(from_events(3, 1, [])).entries.values())
    table = mu_table(borromean)
    assert table[(1, 2)] == -1
    assert table[()] == 1
    assert table.to_tsv() == "1\t0\n2\t0\n1 2\t-1\n2 1\t1\n"


@pytest.mark.parametrize("n, rmax", [(1, 1), (3, 2), (4, 4), (4, 0)])
def test_table_size(n, rmax):
    table = mu_table(from_events(n, 1, []), rmax)
    assert len(table.entries) == sum(factorial(n) // factorial(n - r) for r in range(1, rmax + 1))


def test_table_rmax_bounds(borromean):
    with pytest.raises(ValueError):
        mu_table(borromean, 3)


def test_rows_sorted_by_length_then_lex():
    t = MuTable(2, {(2, 1): 5, (2,): 1, (1, 2): 0, (1,): 3})
    assert [k for k, _ in t.rows()] == [(1,), (2,), (1, 2), (2, 1)]


def test_string_link_examples():
    braid = from_events(1, 2, [])
    closed = load("hopf.json")
    assert mu_string_link(as_gauss_closed(braid), 2, [1]) == 0
    assert mu_string_link(closed, 2, [1]) == 1
    assert mu_string_link(load("borromean_closed.json"), 3, [1, 2]) == mu(load("borromean.json"), [1, 2])
    with pytest.raises(ValueError):
        mu_string_link(closed, 2, [2])
    with pytest.raises(DiagramError):
        mu_string_link(load("borromean.json"), 2, [1])


def as_gauss_closed(d):
    """Treat the loose strand of an event diagram as one more labelled strand."""
    from milnor_skein.diagram import Diagram

    top = d.n + 1
    return Diagram(
        labels=d.labels + (top,),
        components={**d.components, top: d.loose},
        signs=dict(d.signs),
    )


def test_skein_examples(one_crossing, borromean):
    assert mu_via_skein(load("front.json"), [1, 2]) == 0
    assert mu_via_skein(one_crossing, [1]) == 1
    assert mu_via_skein(borromean, [1, 2]) == -1


def test_methods_agree_on_random_diagrams():
    rng = random.Random(21)
    for _ in range(60):
        d = random_diagram(rng, max_n=3, max_crossings=12)
        for seq in all_seqs(d):
            assert mu(d, seq, "fox") == mu(d, seq, "magnus") == mu(d, seq, "skein")


def test_front_passing_vanishes():
    rng = random.Random(8)
    for _ in range(50):
        d = front_passing(random_diagram(rng, max_n=4, max_crossings=20))
        assert not any(mu_table(d).entries.values())


def test_absent_index_and_deletion_stability():
    rng = random.Random(13)
    for _ in range(60):
        d = random_event_diagram(rng, max_n=4, max_crossings=16)
        base = mu_table(d).entries
        for cid, j in loose_crossings(d):
            after = mu_table(switch_crossing(d, cid)).entries
            assert {k: v for k, v in after.items() if j not in k} == {
                k: v for k, v in base.items() if j not in k
            }
        for j in d.labels:
            gone = mu_table(delete_component(d, j)).entries
            assert all(base[k] == v for k, v in gone.items())


def test_cancelling_pair():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(1, 3)
        events = [(rng.randint(1, n), rng.choice((1, -1))) for _ in range(rng.randint(0, 12))]
        at, p = rng.randint(0, len(events)), rng.randint(1, n)
        padded = events[:at] + [(p, 1), (p, -1)] + events[at:]
        lp = rng.randint(1, n + 1)
        assert mu_table(from_events(n, lp, padded)).entries == mu_table(from_events(n, lp, events)).entries
