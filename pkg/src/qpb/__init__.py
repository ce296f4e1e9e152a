"""qpb: exact computer algebra for quantum principal bundles.

Builds bicovariant differential calculi over finite-dimensional Hopf
*-algebra data, the graded-differential algebras derived from them
(universal envelopes, braided exterior algebras, invariant-polynomial
algebras, the universal differential algebra and its regular quotient),
trivial quantum principal bundles with connections and curvature, quantum
characteristic classes along both the invariant-polynomial and the
cohomological route, and the vertical-order spectral sequence.

All arithmetic is exact over the field Q(q) of rational functions.
Every object is immutable after construction and every computation is
deterministic (pivot choices, basis orders and section choices are fixed),
so results are reproducible across runs and platforms.
"""

from .scalar import KERNEL_BACKEND, ONE, Q, ZERO, Scalar, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "Q",
    "parse_scalar",
    "format_scalar",
    "KERNEL_BACKEND",
    "__version__",
]
