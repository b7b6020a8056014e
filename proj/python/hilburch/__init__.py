"""Canonical Hilbert-Burch matrices and Groebner cells in k[[x,y]]."""

import json

from ._hilburch import (
    BudgetError,
    DomainError,
    Error,
    ParseError,
    Staircase,
    canonical,
    is_member,
    lex_segment,
    lt,
    minimal_generators,
    phi,
    run,
    same_ideal,
    staircases,
    standard_basis,
)


def run_json(*args):
    """Run a CLI subcommand with --json and decode its output."""
    code, out, err = run([*args, "--json"])
    if code != 0:
        raise Error(err.strip())
    return json.loads(out)


__all__ = [
    "BudgetError", "DomainError", "Error", "ParseError", "Staircase", "canonical",
    "is_member", "lex_segment", "lt", "minimal_generators", "phi", "run", "run_json",
    "same_ideal", "staircases", "standard_basis",
]
