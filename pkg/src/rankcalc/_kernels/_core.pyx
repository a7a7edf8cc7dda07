# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: tight C loops for the exact-integer sweeps.

Must stay output-identical to the NumPy fallback (same INF sentinel, same
violation ordering); the parity tests enforce this.
"""

import numpy as np

cdef long long INF_C = (<long long>1) << 40

INF = INF_C


def rank_table(world_ranks):
    """Min world rank per proposition mask, by subset doubling; INF at 0."""
    wr_arr = np.ascontiguousarray(world_ranks, dtype=np.int64)
    cdef long long[::1] wr = wr_arr
    cdef Py_ssize_t n = wr.shape[0]
    out = np.empty(1 << n, dtype=np.int64)
    cdef long long[::1] r = out
    cdef Py_ssize_t w, m, block = 1
    cdef long long v
    r[0] = INF_C
    for w in range(n):
        v = wr[w]
        for m in range(block):
            r[block + m] = r[m] if r[m] < v else v
        block <<= 1
    return out


def scan_rank_table(world_ranks):
    """Same values as rank_table, by direct per-mask bit scan."""
    wr_arr = np.ascontiguousarray(world_ranks, dtype=np.int64)
    cdef long long[::1] wr = wr_arr
    cdef Py_ssize_t n = wr.shape[0]
    cdef Py_ssize_t size = 1 << n
    out = np.empty(size, dtype=np.int64)
    cdef long long[::1] r = out
    cdef Py_ssize_t m, w
    cdef long long best
    r[0] = INF_C
    for m in range(1, size):
        best = INF_C
        for w in range(n):
            if (m >> w) & 1:
                if wr[w] < best:
                    best = wr[w]
        r[m] = best
    return out


def basic_laws_sweep(world_ranks, Py_ssize_t limit=8):
    """Negation, disjunction and conjunction laws over all pairs."""
    wr_arr = np.ascontiguousarray(world_ranks, dtype=np.int64)
    cdef Py_ssize_t n = wr_arr.shape[0]
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t full = size - 1
    r_arr = rank_table(wr_arr)
    rs_arr = scan_rank_table(wr_arr)
    cdef long long[::1] r = r_arr
    cdef long long[::1] rs = rs_arr
    cdef Py_ssize_t a, b, ab
    cdef long long lhs, rhs
    cdef long long c1 = 0, c2 = 0, c3 = 0
    examples = []

    for a in range(1, full):
        lhs = r[a] if r[a] < r[full ^ a] else r[full ^ a]
        if lhs != 0:
            c1 += 1
            if len(examples) < limit:
                examples.append((1, a, full ^ a, lhs, 0))

    for a in range(size):
        for b in range(size):
            lhs = r[a | b]
            rhs = r[a] if r[a] < r[b] else r[b]
            if lhs != rhs:
                c2 += 1
                if len(examples) < limit:
                    examples.append((2, a, b, lhs, rhs))

    for a in range(1, size):
        for b in range(size):
            ab = a & b
            if ab == 0:
                continue
            lhs = r[ab]
            rhs = r[a] + (rs[ab] - rs[a])
            if lhs != rhs:
                c3 += 1
                if len(examples) < limit:
                    examples.append((3, a, b, lhs, rhs))
    return (c1, c2, c3), examples


def partition_laws_sweep(world_ranks, atom_masks, Py_ssize_t limit=8):
    """Total-rank and rank-Bayes laws through one partition."""
    wr_arr = np.ascontiguousarray(world_ranks, dtype=np.int64)
    am_arr = np.ascontiguousarray(atom_masks, dtype=np.int64)
    cdef long long[::1] atoms = am_arr
    cdef Py_ssize_t n = wr_arr.shape[0]
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t k = atoms.shape[0]
    r_arr = rank_table(wr_arr)
    rs_arr = scan_rank_table(wr_arr)
    cdef long long[::1] r = r_arr
    cdef long long[::1] rs = rs_arr
    terms_arr = np.empty((k, size), dtype=np.int64)
    cdef long long[:, ::1] terms = terms_arr
    minv_arr = np.empty(size, dtype=np.int64)
    cdef long long[::1] minv = minv_arr
    cdef Py_ssize_t q, b
    cdef long long aq, ab, val, lhs, rhs
    cdef long long c4 = 0, c5 = 0
    examples = []

    for q in range(k):
        aq = atoms[q]
        for b in range(size):
            ab = aq & b
            if ab == 0:
                terms[q, b] = INF_C
            else:
                val = r[aq] + (rs[ab] - rs[aq])
                terms[q, b] = val if val < INF_C else INF_C
    for b in range(size):
        val = INF_C
        for q in range(k):
            if terms[q, b] < val:
                val = terms[q, b]
        minv[b] = val

    for b in range(size):
        if minv[b] != r[b]:
            c4 += 1
            if len(examples) < limit:
                examples.append((4, b, -1, minv[b], r[b]))

    for b in range(1, size):
        for q in range(k):
            if terms[q, b] >= INF_C:
                lhs = INF_C
            else:
                lhs = terms[q, b] - minv[b]
            ab = atoms[q] & b
            if ab > 0:
                rhs = r[ab] - r[b]
            else:
                rhs = INF_C
            if lhs != rhs:
                c5 += 1
                if len(examples) < limit:
                    examples.append((5, b, q, lhs, rhs))
    return (c4, c5), examples


cdef inline bint _indep4(long long[::1] r, Py_ssize_t full,
                         Py_ssize_t p, Py_ssize_t q) nogil:
    cdef Py_ssize_t pc = full ^ p
    cdef Py_ssize_t qc = full ^ q
    if r[p & q] != r[p] + r[q]:
        return 0
    if r[p & qc] != r[p] + r[qc]:
        return 0
    if r[pc & q] != r[pc] + r[q]:
        return 0
    if r[pc & qc] != r[pc] + r[qc]:
        return 0
    return 1


def union_law_sweep(world_ranks, Py_ssize_t limit=8):
    """Union law under the disjointness proviso, over all triples."""
    wr_arr = np.ascontiguousarray(world_ranks, dtype=np.int64)
    cdef Py_ssize_t n = wr_arr.shape[0]
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t full = size - 1
    r_arr = rank_table(wr_arr)
    cdef long long[::1] r = r_arr
    cdef Py_ssize_t a, b, c, comp, ab
    cdef bint bc, union_ok
    cdef long long count = 0
    examples = []
    for c in range(1, full):
        for a in range(1, full):
            if not _indep4(r, full, a, c):
                continue
            comp = full ^ a
            b = (0 - comp) & comp
            while b:
                ab = a | b
                bc = _indep4(r, full, b, c)
                if ab == full:
                    union_ok = 1
                else:
                    union_ok = _indep4(r, full, ab, c)
                if bc != union_ok:
                    count += 1
                    if len(examples) < limit:
                        examples.append((a, b, c, <int>bc, <int>union_ok))
                b = (b - comp) & comp
    return count, examples


def additivity_check(pair_table, r1, r2):
    """Exhaustive member-pair additivity over two atom lists."""
    m_arr = np.ascontiguousarray(pair_table, dtype=np.int64)
    r1_arr = np.ascontiguousarray(r1, dtype=np.int64)
    r2_arr = np.ascontiguousarray(r2, dtype=np.int64)
    cdef long long[:, ::1] m = m_arr
    cdef long long[::1] ra = r1_arr
    cdef long long[::1] rb = r2_arr
    cdef Py_ssize_t k1 = m.shape[0]
    cdef Py_ssize_t k2 = m.shape[1]
    cdef Py_ssize_t size1 = 1 << k1
    cdef Py_ssize_t size2 = 1 << k2

    g_arr = np.empty((size1, k2), dtype=np.int64)
    cdef long long[:, ::1] g = g_arr
    r1min_arr = np.empty(size1, dtype=np.int64)
    r2min_arr = np.empty(size2, dtype=np.int64)
    cdef long long[::1] r1min = r1min_arr
    cdef long long[::1] r2min = r2min_arr
    q_arr = np.empty(size2, dtype=np.int64)
    cdef long long[::1] q = q_arr

    cdef Py_ssize_t a, b, s, t, block
    cdef long long v, lhs, rhs

    for b in range(k2):
        g[0, b] = INF_C
    block = 1
    for a in range(k1):
        for s in range(block):
            for b in range(k2):
                v = m[a, b]
                g[block + s, b] = g[s, b] if g[s, b] < v else v
        block <<= 1

    r1min[0] = INF_C
    block = 1
    for a in range(k1):
        v = ra[a]
        for s in range(block):
            r1min[block + s] = r1min[s] if r1min[s] < v else v
        block <<= 1
    r2min[0] = INF_C
    block = 1
    for b in range(k2):
        v = rb[b]
        for s in range(block):
            r2min[block + s] = r2min[s] if r2min[s] < v else v
        block <<= 1

    for s in range(size1):
        q[0] = INF_C
        block = 1
        for b in range(k2):
            v = g[s, b]
            for t in range(block):
                q[block + t] = q[t] if q[t] < v else v
            block <<= 1
        for t in range(size2):
            lhs = q[t]
            rhs = r1min[s] + r2min[t]
            if rhs > INF_C:
                rhs = INF_C
            if lhs != rhs:
                return (False, s, t, lhs, rhs)
    return (True, 0, 0, 0, 0)


def poly_order_table(exponents, coefficients):
    """Order of the weight-polynomial sum for every proposition mask, by
    genuine coefficient-bucket accumulation; INF for the zero polynomial."""
    e_arr = np.ascontiguousarray(exponents, dtype=np.int64)
    c_arr = np.ascontiguousarray(coefficients, dtype=np.int64)
    cdef long long[::1] exps = e_arr
    cdef long long[::1] coeffs = c_arr
    cdef Py_ssize_t n = exps.shape[0]
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t width = 1
    cdef Py_ssize_t w, s, j, block
    for w in range(n):
        if exps[w] + 1 > width:
            width = exps[w] + 1
    buckets_arr = np.zeros((size, width), dtype=np.int64)
    cdef long long[:, ::1] buckets = buckets_arr
    out = np.empty(size, dtype=np.int64)
    cdef long long[::1] orders = out

    block = 1
    for w in range(n):
        for s in range(block):
            for j in range(width):
                buckets[block + s, j] = buckets[s, j]
            buckets[block + s, exps[w]] += coeffs[w]
        block <<= 1

    for s in range(size):
        orders[s] = INF_C
        for j in range(width):
            if buckets[s, j] != 0:
                orders[s] = j
                break
    return out


def bridge_pair_sweep(orders, ranks, Py_ssize_t limit=8):
    """Compare measure orders against ranks pointwise, conditionally over
    all pairs, and via the min law on disjoint unions."""
    o_arr = np.ascontiguousarray(orders, dtype=np.int64)
    r_arr = np.ascontiguousarray(ranks, dtype=np.int64)
    cdef long long[::1] o = o_arr
    cdef long long[::1] r = r_arr
    cdef Py_ssize_t size = o.shape[0]
    cdef Py_ssize_t a, b, ab
    cdef long long lhs, rhs
    cdef long long c1 = 0, c2 = 0, c3 = 0
    examples = []

    for a in range(size):
        if o[a] != r[a]:
            c1 += 1
            if len(examples) < limit:
                examples.append((1, a, -1, o[a], r[a]))

    for a in range(1, size):
        for b in range(size):
            ab = a & b
            lhs = INF_C if o[ab] >= INF_C else o[ab] - o[a]
            rhs = INF_C if r[ab] >= INF_C else r[ab] - r[a]
            if lhs != rhs:
                c2 += 1
                if len(examples) < limit:
                    examples.append((2, a, b, lhs, rhs))

    for a in range(size):
        for b in range(size):
            if a & b:
                continue
            lhs = o[a | b]
            rhs = o[a] if o[a] < o[b] else o[b]
            if lhs != rhs:
                c3 += 1
                if len(examples) < limit:
                    examples.append((3, a, b, lhs, rhs))
    return (c1, c2, c3), examples
