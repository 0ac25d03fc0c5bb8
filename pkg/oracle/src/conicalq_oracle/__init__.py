"""Arbitrary-precision reference generator for the conicalq fixture CSVs."""

from .generator import FixtureSpec, generate, parse_spec, self_check

__all__ = ["FixtureSpec", "generate", "parse_spec", "self_check"]
