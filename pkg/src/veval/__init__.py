"""Exact deciders for the evaluation and word problems of Thompson's group V,
the Brin-Thompson group 2V, and the Thompson monoid, with the circuit-value
reduction and a one-pass stack recognizer."""

__version__ = "0.1.0"
