"""Backend dispatch for the verification kernels.

The compiled extension is preferred when importable; setting RENNER_PURE=1 in
the environment forces the pure backend.  The rational convolution falls back
to the pure implementation per call when the compiled one reports overflow or
non-integer coefficients.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("RENNER_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

compose_table = _impl.compose_table
eta_orthogonality = _impl.eta_orthogonality
centrality = _impl.centrality
psi_multiplicative = _impl.psi_multiplicative
block_multiplicative = _impl.block_multiplicative


def sparse_mul(table, ia, na, da, ib, nb, db):
    try:
        return _impl.sparse_mul(table, ia, na, da, ib, nb, db)
    except OverflowError:
        return _kernels_py.sparse_mul(table, ia, na, da, ib, nb, db)


def available_backends():
    """Importable kernel backends keyed by name, for benchmarks and tests."""
    out = {"pure": _kernels_py}
    try:
        from . import _ckernels
        out["compiled"] = _ckernels
    except ImportError:
        pass
    return out
