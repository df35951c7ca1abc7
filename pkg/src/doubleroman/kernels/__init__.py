"""Hot-path kernels with a numba fast path and a pure numpy/Python fallback.

The numba twins are used when importable; set DOUBLEROMAN_NUMBA=0 to force
the fallback. Both paths run the identical algorithm and return equal
results (see tests/test_kernels.py and benchmarks/bench_kernels.py).
"""

import os
import warnings

from ._numpy import INFEASIBLE, ITERATION_LIMIT, OPTIMAL, UNBOUNDED


def _numba_enabled() -> bool:
    flag = os.environ.get("DOUBLEROMAN_NUMBA", "1").strip().lower()
    return flag not in ("0", "false", "off", "no")


USING_NUMBA = False
if _numba_enabled():
    try:
        from ._numba import enumerate_drdf, enumerate_rdf, simplex_solve

        USING_NUMBA = True
    except ImportError as exc:  # pragma: no cover - depends on environment
        warnings.warn(f"numba unavailable ({exc}); using pure numpy kernels")
        from ._numpy import enumerate_drdf, enumerate_rdf, simplex_solve
else:
    from ._numpy import enumerate_drdf, enumerate_rdf, simplex_solve

__all__ = [
    "OPTIMAL",
    "INFEASIBLE",
    "UNBOUNDED",
    "ITERATION_LIMIT",
    "USING_NUMBA",
    "simplex_solve",
    "enumerate_drdf",
    "enumerate_rdf",
]
