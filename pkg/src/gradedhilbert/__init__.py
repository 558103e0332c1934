"""Monomial and graded algebras with prescribed Hilbert series."""

from .analysis import detect_recurrence, fatou_verdict, gk_estimate, growth_classify, hr_compare
from .constructions import closed_form, structured_count, verify
from .engine import build_automaton, count_automaton, count_bruteforce, rationalize
from .monoid import enumerate_comm, enumerate_words, minimal_d, realize_A
from .powseries import (
    IntPoly,
    IntSeries,
    RationalFn,
    SeriesSpec,
    add,
    expand_rational,
    generate,
    mul,
    normalize_rational,
)
from .presentations import (
    ConstructionSpec,
    Presentation,
    Variant,
    construction_forbidden,
    parse_presentation,
)

__version__ = "0.1.0"
