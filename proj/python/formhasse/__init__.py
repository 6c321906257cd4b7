"""Exact quadratic form invariants over Q and Q(sqrt5)."""

import json

from ._formhasse import (
    FormhasseError,
    classify,
    equivalent,
    find_witness,
    hasse,
    hilbert_q,
    in_prime_set_P,
    prime_set_P,
    run_cli,
    sections,
    three_squares_representable,
)
from ._formhasse import verify_paper as _verify_paper


def verify_paper(section, dmax=300):
    return json.loads(_verify_paper(section, dmax))


__all__ = [
    "FormhasseError",
    "classify",
    "equivalent",
    "find_witness",
    "hasse",
    "hilbert_q",
    "in_prime_set_P",
    "prime_set_P",
    "run_cli",
    "sections",
    "three_squares_representable",
    "verify_paper",
]
