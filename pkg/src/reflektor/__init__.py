"""reflektor: exact arithmetic for a Chebyshev-like integer polynomial family
and the rank-3/4 reflection representations parameterized by its roots."""

__version__ = "0.1.0"
