"""Milnor mu-invariants of string links with a loose component."""

from .diagram import (
    Diagram,
    Pass,
    delete_component,
    from_events,
    loose_underpass_signs,
    parse_events,
    parse_gauss,
    serialize,
    split_crossing,
    switch_crossing,
    validate,
)
from .errors import (
    ConsistencyError,
    DiagramError,
    NonUnitError,
    ResourceError,
    SplitError,
)
from .group_words import (
    GroupRingElement,
    augment,
    fox_derivative,
    mu_of_word,
    word_inverse,
    word_multiply,
    word_normalize,
)
from .invariants import MuTable, mu, mu_string_link, mu_table, mu_via_skein
from .meridians import arcs_of, loose_closure_series, loose_closure_word, solve_meridians
from .multilinear import (
    Series,
    coefficient,
    format_series,
    magnus_of_word,
    series_add,
    series_inverse,
    series_multiply,
)
from .skein import SkeinReport, skein_sides, verify_fox_lemma, verify_theorem_suite

__version__ = "0.1.0"
