"""Pure NumPy kernels: vectorized exact-integer sweeps.

Mirrors the compiled core bit for bit: same INF sentinel, same violation
ordering, same return shapes.  Everything is int64 arithmetic; callers
guarantee rank magnitudes stay far below the INF sentinel.
"""

from __future__ import annotations

import numpy as np

INF = 1 << 40

_BITS_CACHE = {}
_DISJOINT_PAIRS_CACHE = {}


def _bits(n):
    """(2^n, n) bool matrix: row m has the bits of mask m."""
    if n not in _BITS_CACHE:
        masks = np.arange(1 << n, dtype=np.int64)
        _BITS_CACHE[n] = (masks[:, None] >> np.arange(n)[None, :] & 1).astype(bool)
    return _BITS_CACHE[n]


def rank_table(world_ranks):
    """Min world rank per proposition mask, by subset doubling; INF at 0."""
    wr = np.asarray(world_ranks, dtype=np.int64)
    table = np.array([INF], dtype=np.int64)
    for w in range(wr.shape[0]):
        table = np.concatenate([table, np.minimum(table, wr[w])])
    return table


def scan_rank_table(world_ranks):
    """Same values as :func:`rank_table`, by direct per-mask scan."""
    wr = np.asarray(world_ranks, dtype=np.int64)
    n = wr.shape[0]
    spread = np.where(_bits(n), wr[None, :], INF)
    return spread.min(axis=1)


def _saturate(values):
    return np.minimum(values, INF)


def basic_laws_sweep(world_ranks, limit=8):
    """Negation, disjunction and conjunction laws over all proposition
    pairs.  Returns ((negation, disjunction, conjunction) violation counts,
    capped example list)."""
    wr = np.asarray(world_ranks, dtype=np.int64)
    n = wr.shape[0]
    size = 1 << n
    full = size - 1
    r = rank_table(wr)
    rs = scan_rank_table(wr)
    masks = np.arange(size, dtype=np.int64)
    counts = [0, 0, 0]
    examples = []

    contingent = masks[1:full]
    neg = np.minimum(r[contingent], r[full ^ contingent])
    idx = np.flatnonzero(neg != 0)
    counts[0] += idx.size
    for i in idx[: max(0, limit - len(examples))]:
        examples.append((1, int(contingent[i]), int(full ^ contingent[i]),
                         int(neg[i]), 0))

    chunk = max(1, (1 << 22) // size)
    for start in range(0, size, chunk):
        rows = masks[start:start + chunk]
        orid = rows[:, None] | masks[None, :]
        lhs = r[orid]
        rhs = np.minimum(r[rows][:, None], r[None, :])
        bad = lhs != rhs
        a_idx, b_idx = np.nonzero(bad)
        counts[1] += a_idx.size
        for i in range(min(a_idx.size, max(0, limit - len(examples)))):
            examples.append((2, int(rows[a_idx[i]]), int(b_idx[i]),
                             int(lhs[a_idx[i], b_idx[i]]),
                             int(rhs[a_idx[i], b_idx[i]])))

    for start in range(0, size, chunk):
        rows = masks[start:start + chunk]
        rows = rows[rows > 0]
        if rows.size == 0:
            continue
        andid = rows[:, None] & masks[None, :]
        valid = andid != 0
        lhs = r[andid]
        rhs = r[rows][:, None] + (rs[andid] - rs[rows][:, None])
        bad = valid & (lhs != rhs)
        a_idx, b_idx = np.nonzero(bad)
        counts[2] += a_idx.size
        for i in range(min(a_idx.size, max(0, limit - len(examples)))):
            examples.append((3, int(rows[a_idx[i]]), int(b_idx[i]),
                             int(lhs[a_idx[i], b_idx[i]]),
                             int(rhs[a_idx[i], b_idx[i]])))
    return tuple(counts), examples


def partition_laws_sweep(world_ranks, atom_masks, limit=8):
    """Total-rank and rank-Bayes laws through one partition, for every
    proposition.  Returns (violation count, capped example list)."""
    wr = np.asarray(world_ranks, dtype=np.int64)
    atom_masks = np.asarray(atom_masks, dtype=np.int64)
    n = wr.shape[0]
    size = 1 << n
    r = rank_table(wr)
    rs = scan_rank_table(wr)
    masks = np.arange(size, dtype=np.int64)
    k = atom_masks.shape[0]

    terms = np.empty((k, size), dtype=np.int64)
    for q in range(k):
        aq = atom_masks[q]
        andv = masks & aq
        cond = np.where(andv > 0, rs[andv] - rs[aq], INF)
        terms[q] = _saturate(np.where(cond >= INF, INF, r[aq] + cond))
    minv = terms.min(axis=0)

    counts = [0, 0]
    examples = []

    bad4 = minv != r
    idx = np.flatnonzero(bad4)
    counts[0] += idx.size
    for b in idx[:limit]:
        examples.append((4, int(b), -1, int(minv[b]), int(r[b])))

    lhs = np.where(terms >= INF, INF, terms - minv[None, :])
    andq = masks[None, :] & atom_masks[:, None]
    rhs = np.where(andq > 0, r[andq] - r[None, :], INF)
    bad5 = (lhs != rhs)
    bad5[:, 0] = False
    b_idx, q_idx = np.nonzero(bad5.T)
    counts[1] += b_idx.size
    for i in range(min(b_idx.size, max(0, limit - len(examples)))):
        b, q = int(b_idx[i]), int(q_idx[i])
        examples.append((5, b, q, int(lhs[q, b]), int(rhs[q, b])))
    return tuple(counts), examples


def _disjoint_pairs(n):
    """Ascending (A, B) with A contingent, B a non-empty submask of ~A."""
    if n not in _DISJOINT_PAIRS_CACHE:
        full = (1 << n) - 1
        a_list, b_list = [], []
        for a in range(1, full):
            comp = full ^ a
            b = (0 - comp) & comp
            while b:
                a_list.append(a)
                b_list.append(b)
                b = (b - comp) & comp
        _DISJOINT_PAIRS_CACHE[n] = (np.array(a_list, dtype=np.int64),
                                    np.array(b_list, dtype=np.int64))
    return _DISJOINT_PAIRS_CACHE[n]


def _indep4(r, full, p, q):
    """Vectorized proposition-level rank independence (all four quadrants)."""
    pc = full ^ p
    qc = full ^ q
    ok = r[p & q] == r[p] + r[q]
    ok &= r[p & qc] == r[p] + r[qc]
    ok &= r[pc & q] == r[pc] + r[q]
    ok &= r[pc & qc] == r[pc] + r[qc]
    return ok


def union_law_sweep(world_ranks, limit=8):
    """Union law under the disjointness proviso, over all triples.

    A violation is a proviso-satisfying triple where the biconditional
    between "B,C independent" and "A|B,C independent" breaks.
    Returns (count, examples [(A, B, C, bc, union)]).
    """
    wr = np.asarray(world_ranks, dtype=np.int64)
    n = wr.shape[0]
    size = 1 << n
    full = size - 1
    r = rank_table(wr)
    a_arr, b_arr = _disjoint_pairs(n)
    ab_arr = a_arr | b_arr
    count = 0
    examples = []
    for c in range(1, full):
        proviso = _indep4(r, full, a_arr, np.int64(c))
        if not proviso.any():
            continue
        bc = _indep4(r, full, b_arr, np.int64(c))
        union = np.where(ab_arr == full, True, _indep4(r, full, ab_arr, np.int64(c)))
        bad = proviso & (bc != union)
        idx = np.flatnonzero(bad)
        count += idx.size
        for i in idx[: max(0, limit - len(examples))]:
            examples.append((int(a_arr[i]), int(b_arr[i]), c,
                             int(bc[i]), int(union[i])))
    return count, examples


def additivity_check(pair_table, r1, r2):
    """Exhaustive member-pair additivity over two atom lists.

    ``pair_table[a, b]`` is the (possibly INF) rank of atom_a & atom_b;
    ``r1``/``r2`` the atom ranks.  Checks min-decomposition additivity for
    every pair of non-empty atom unions; returns
    (ok, s_subset, t_subset, lhs, rhs) with the first violating pair in
    (S-major, T-minor) ascending order.
    """
    m = np.asarray(pair_table, dtype=np.int64)
    r1 = np.asarray(r1, dtype=np.int64)
    r2 = np.asarray(r2, dtype=np.int64)
    k1, k2 = m.shape

    g = np.full((1, k2), INF, dtype=np.int64)
    for a in range(k1):
        g = np.concatenate([g, np.minimum(g, m[a][None, :])], axis=0)
    r1min = np.array([INF], dtype=np.int64)
    for a in range(k1):
        r1min = np.concatenate([r1min, np.minimum(r1min, r1[a])])
    r2min = np.array([INF], dtype=np.int64)
    for b in range(k2):
        r2min = np.concatenate([r2min, np.minimum(r2min, r2[b])])

    if k1 + k2 <= 16:
        q = np.full((1 << k1, 1), INF, dtype=np.int64)
        for b in range(k2):
            q = np.concatenate([q, np.minimum(q, g[:, b][:, None])], axis=1)
        rhs = _saturate(r1min[:, None] + r2min[None, :])
        bad = q != rhs
        if not bad.any():
            return (True, 0, 0, 0, 0)
        s_idx, t_idx = np.nonzero(bad)
        s, t = int(s_idx[0]), int(t_idx[0])
        return (False, s, t, int(q[s, t]), int(rhs[s, t]))

    for s in range(1, 1 << k1):
        row = g[s]
        q = np.array([INF], dtype=np.int64)
        for b in range(k2):
            q = np.concatenate([q, np.minimum(q, row[b])])
        rhs = _saturate(r1min[s] + r2min)
        bad = q != rhs
        if bad.any():
            t = int(np.flatnonzero(bad)[0])
            return (False, s, t, int(q[t]), int(rhs[t]))
    return (True, 0, 0, 0, 0)


def poly_order_table(exponents, coefficients):
    """Order (least exponent with a non-zero coefficient sum) of the weight
    polynomial of every proposition mask; INF for the zero polynomial.

    Genuine coefficient-wise accumulation: this is polynomial addition, not
    a min shortcut, so it is an independent route from the rank tables.
    """
    exps = np.asarray(exponents, dtype=np.int64)
    coeffs = np.asarray(coefficients, dtype=np.int64)
    n = exps.shape[0]
    width = int(exps.max()) + 1 if n else 1
    buckets = np.zeros((1, width), dtype=np.int64)
    for w in range(n):
        row = np.zeros(width, dtype=np.int64)
        row[exps[w]] = coeffs[w]
        buckets = np.concatenate([buckets, buckets + row[None, :]], axis=0)
    nonzero = buckets != 0
    has_any = nonzero.any(axis=1)
    first = nonzero.argmax(axis=1)
    return np.where(has_any, first, INF).astype(np.int64)


def bridge_pair_sweep(orders, ranks, limit=8):
    """Compare measure orders against ranks: pointwise, conditionally over
    all pairs, and the min law on disjoint unions.
    Returns (violation count, capped examples)."""
    o = np.asarray(orders, dtype=np.int64)
    r = np.asarray(ranks, dtype=np.int64)
    size = o.shape[0]
    masks = np.arange(size, dtype=np.int64)
    counts = [0, 0, 0]
    examples = []

    bad1 = o != r
    idx = np.flatnonzero(bad1)
    counts[0] += idx.size
    for a in idx[:limit]:
        examples.append((1, int(a), -1, int(o[a]), int(r[a])))

    chunk = max(1, (1 << 22) // size)
    for start in range(0, size, chunk):
        rows = masks[start:start + chunk]
        rows = rows[rows > 0]
        if rows.size == 0:
            continue
        andid = rows[:, None] & masks[None, :]
        lhs = np.where(o[andid] >= INF, INF, o[andid] - o[rows][:, None])
        rhs = np.where(r[andid] >= INF, INF, r[andid] - r[rows][:, None])
        bad = lhs != rhs
        a_idx, b_idx = np.nonzero(bad)
        counts[1] += a_idx.size
        for i in range(min(a_idx.size, max(0, limit - len(examples)))):
            examples.append((2, int(rows[a_idx[i]]), int(b_idx[i]),
                             int(lhs[a_idx[i], b_idx[i]]),
                             int(rhs[a_idx[i], b_idx[i]])))

    for start in range(0, size, chunk):
        rows = masks[start:start + chunk]
        disjoint = (rows[:, None] & masks[None, :]) == 0
        orid = rows[:, None] | masks[None, :]
        lhs = o[orid]
        rhs = np.minimum(o[rows][:, None], o[None, :])
        bad = disjoint & (lhs != rhs)
        a_idx, b_idx = np.nonzero(bad)
        counts[2] += a_idx.size
        for i in range(min(a_idx.size, max(0, limit - len(examples)))):
            examples.append((3, int(rows[a_idx[i]]), int(b_idx[i]),
                             int(lhs[a_idx[i], b_idx[i]]),
                             int(rhs[a_idx[i], b_idx[i]])))
    return tuple(counts), examples
