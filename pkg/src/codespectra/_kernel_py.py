"""Pure-Python enumeration kernel.

Reference implementation of the contract shared with the compiled extension
``_kernel``: walk every non-decreasing index sequence of length n over
columns 0..P-1 whose first index lies in [first_lo, first_hi); for each
full-rank multiset count the distinct codeword weights over the canonical
messages; return the best count, the witness index tuples in enumeration
order (capped), and how many full-rank multisets were evaluated.

State is updated incrementally along the depth-first walk: a weight
accumulator per canonical message, and a pivot table for the running rank of
the chosen columns. Subtrees whose rank cannot reach k with the slots left
are pruned, which is the only way rank-deficient multisets are skipped.
"""

from __future__ import annotations


def enumerate_shard(colw, cols, q, n, k, max_weight, first_lo, first_hi, witness_cap):
    """Returns (best, witnesses, evaluated); see the module docstring."""
    colw = [list(row) for row in colw]  # (P, Mc): weight per (column, message)
    cols = [list(row) for row in cols]  # (P, k): column entries
    P = len(colw)
    mc = len(colw[0]) if P else 0
    inv = [0] * q
    for x in range(1, q):
        inv[x] = pow(x, q - 2, q)

    acc = [0] * mc
    stamp = [0] * (max_weight + 1)
    gen = 0
    piv = [[0] * k for _ in range(k)]  # pivot row with leading 1 at its index
    has_piv = [False] * k
    added_pos = [-1] * max(n, 1)
    idx = [0] * max(n, 1)
    rank = 0
    best = 0
    evaluated = 0
    witnesses: list[tuple[int, ...]] = []

    def reduce_col(j):
        # Reduce column j against the pivots; return (reduced, pos) where pos
        # is the new pivot position (reduced normalized) or -1 if it vanished.
        c = cols[j][:]
        for pos in range(k):
            v = c[pos]
            if v == 0:
                continue
            if has_piv[pos]:
                prow = piv[pos]
                for t in range(pos, k):
                    c[t] = (c[t] - v * prow[t]) % q
            else:
                f = inv[v]
                for t in range(pos, k):
                    c[t] = (c[t] * f) % q
                return c, pos
        return c, -1

    def push(depth, j):
        nonlocal rank
        cw = colw[j]
        for i in range(mc):
            acc[i] += cw[i]
        added = -1
        if rank < k:
            c, pos = reduce_col(j)
            if pos >= 0:
                piv[pos] = c
                has_piv[pos] = True
                rank += 1
                added = pos
        added_pos[depth] = added

    def pop(depth, j):
        nonlocal rank
        cw = colw[j]
        for i in range(mc):
            acc[i] -= cw[i]
        pos = added_pos[depth]
        if pos >= 0:
            has_piv[pos] = False
            rank -= 1

    def last_level(lo, hi):
        nonlocal best, evaluated, gen
        full = rank == k
        for j in range(lo, hi):
            if not full:
                _, pos = reduce_col(j)  # rank == k-1 here; does j finish it?
                if pos < 0:
                    continue
            cw = colw[j]
            gen += 1
            cnt = 0
            for i in range(mc):
                w = acc[i] + cw[i]
                if stamp[w] != gen:
                    stamp[w] = gen
                    cnt += 1
            evaluated += 1
            if cnt > best:
                best = cnt
                witnesses.clear()
                if witness_cap > 0:
                    idx[n - 1] = j
                    witnesses.append(tuple(idx[:n]))
            elif cnt == best and len(witnesses) < witness_cap:
                idx[n - 1] = j
                witnesses.append(tuple(idx[:n]))

    def rec(depth, lo, hi):
        if depth == n - 1:
            last_level(lo, hi)
            return
        slots_after = n - depth - 1
        for j in range(lo, hi):
            idx[depth] = j
            push(depth, j)
            if rank + slots_after >= k:
                rec(depth + 1, j, P)
            pop(depth, j)

    if P and mc and first_lo < first_hi:
        rec(0, first_lo, first_hi)
    return best, witnesses, evaluated
