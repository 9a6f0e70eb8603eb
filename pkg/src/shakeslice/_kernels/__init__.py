"""Kernel selection: the compiled extension when built, pure Python otherwise.

``IMPL`` reports which twin is active ("compiled" or "pure"); the benchmark
script and the twin-equivalence tests import both implementations directly.
"""

from __future__ import annotations

try:
    from . import _speedups as _impl  # type: ignore[attr-defined]
except ImportError:
    from . import pure as _impl

IMPL = _impl.IMPL
poly_mul = _impl.poly_mul
cyclo_mul = _impl.cyclo_mul
vec_scalar_divexact = _impl.vec_scalar_divexact
bareiss_det = _impl.bareiss_det
hermitian_inertia = _impl.hermitian_inertia

__all__ = [
    "IMPL",
    "poly_mul",
    "cyclo_mul",
    "vec_scalar_divexact",
    "bareiss_det",
    "hermitian_inertia",
]
