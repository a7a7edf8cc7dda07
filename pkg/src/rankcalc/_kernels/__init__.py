"""Kernel backend selection.

The hot verification sweeps run either through the compiled extension
(``rankcalc._kernels._core``, built from Cython) or through a NumPy
fallback with identical outputs.  Selection happens once at import; set
``RANKCALC_KERNEL=fallback`` or ``=compiled`` to force a backend.
"""

from __future__ import annotations

import os

from . import _fallback

_forced = os.environ.get("RANKCALC_KERNEL", "").strip().lower()

if _forced == "fallback":
    _impl = _fallback
    BACKEND = "fallback"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise ImportError(
                "RANKCALC_KERNEL=compiled but the extension is not built")
        _impl = _fallback
        BACKEND = "fallback"

INF = _fallback.INF

# Sweeps enumerate all 2^n proposition masks; keep n sane.
MAX_SWEEP_WORLDS = 16
# Rank magnitudes must stay far below INF so saturating sums stay exact.
MAX_KERNEL_RANK = 1 << 38


def _check_ranks(world_ranks):
    n = len(world_ranks)
    if n > MAX_SWEEP_WORLDS:
        raise ValueError("kernel sweeps support at most %d worlds, got %d"
                         % (MAX_SWEEP_WORLDS, n))
    if n and max(world_ranks) > MAX_KERNEL_RANK:
        raise ValueError("world rank too large for kernel arithmetic")


def backend() -> str:
    return BACKEND


def rank_table(world_ranks):
    _check_ranks(world_ranks)
    return _impl.rank_table(world_ranks)


def scan_rank_table(world_ranks):
    _check_ranks(world_ranks)
    return _impl.scan_rank_table(world_ranks)


def basic_laws_sweep(world_ranks, limit=8):
    _check_ranks(world_ranks)
    return _impl.basic_laws_sweep(world_ranks, limit)


def partition_laws_sweep(world_ranks, atom_masks, limit=8):
    _check_ranks(world_ranks)
    return _impl.partition_laws_sweep(world_ranks, atom_masks, limit)


def union_law_sweep(world_ranks, limit=8):
    _check_ranks(world_ranks)
    return _impl.union_law_sweep(world_ranks, limit)


def additivity_check(pair_table, r1, r2):
    if len(r1) > 14 or len(r2) > 14:
        raise ValueError("additivity check supports at most 14 atoms per side")
    return _impl.additivity_check(pair_table, r1, r2)


def poly_order_table(exponents, coefficients):
    if len(exponents) > MAX_SWEEP_WORLDS:
        raise ValueError("order table supports at most %d worlds" % MAX_SWEEP_WORLDS)
    if len(coefficients) and max(abs(int(c)) for c in coefficients) > MAX_KERNEL_RANK:
        raise ValueError("coefficient too large for kernel arithmetic")
    return _impl.poly_order_table(exponents, coefficients)


def bridge_pair_sweep(orders, ranks, limit=8):
    return _impl.bridge_pair_sweep(orders, ranks, limit)
