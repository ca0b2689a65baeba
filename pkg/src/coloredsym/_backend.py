"""Selects the term-arithmetic kernels at import time.

The compiled extension is preferred when present; ``COLOREDSYM_PURE=1``
forces the pure-Python kernels (useful for benchmarking and debugging).
"""

import os

if os.environ.get("COLOREDSYM_PURE") == "1":
    from ._poly_py import add_terms, mul_terms

    BACKEND = "python"
else:
    try:
        from ._speedups import add_terms, mul_terms

        BACKEND = "compiled"
    except ImportError:
        from ._poly_py import add_terms, mul_terms

        BACKEND = "python"

__all__ = ["BACKEND", "add_terms", "mul_terms"]
