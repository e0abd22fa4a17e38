# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernel; ``_kernel_py`` holds the reference semantics.

Same contract: enumerate non-decreasing index multisets, keep the weight
accumulator and the rank pivots incrementally, count distinct weights at the
full size, return (best, witness index tuples, evaluated).
"""

from libc.stdlib cimport calloc, free

import numpy as np


cdef class _Shard:
    cdef int[:, ::1] colw
    cdef int[:, ::1] cols
    cdef int q, n, k, P, mc, witness_cap
    cdef int rank, best
    cdef long long evaluated, gen
    cdef int* acc
    cdef long long* stamp
    cdef int* inv
    cdef int* piv          # k*k pivot rows, row for position p at piv[p*k..]
    cdef char* has_piv
    cdef int* added_pos
    cdef int* idx
    cdef int* tmp
    cdef list witnesses

    def __cinit__(self, colw, cols, int q, int n, int k, int max_weight,
                  int witness_cap):
        self.colw = np.ascontiguousarray(colw, dtype=np.intc)
        self.cols = np.ascontiguousarray(cols, dtype=np.intc)
        self.q = q
        self.n = n
        self.k = k
        self.P = self.colw.shape[0]
        self.mc = self.colw.shape[1]
        self.witness_cap = witness_cap
        self.rank = 0
        self.best = 0
        self.evaluated = 0
        self.gen = 0
        self.acc = <int*> calloc(self.mc if self.mc else 1, sizeof(int))
        self.stamp = <long long*> calloc(max_weight + 1, sizeof(long long))
        self.inv = <int*> calloc(q, sizeof(int))
        self.piv = <int*> calloc(k * k, sizeof(int))
        self.has_piv = <char*> calloc(k, sizeof(char))
        self.added_pos = <int*> calloc(n if n else 1, sizeof(int))
        self.idx = <int*> calloc(n if n else 1, sizeof(int))
        self.tmp = <int*> calloc(k, sizeof(int))
        self.witnesses = []
        cdef int x
        for x in range(1, q):
            self.inv[x] = pow(x, q - 2, q)

    def __dealloc__(self):
        free(self.acc)
        free(self.stamp)
        free(self.inv)
        free(self.piv)
        free(self.has_piv)
        free(self.added_pos)
        free(self.idx)
        free(self.tmp)

    cdef int _reduce(self, int j):
        # Reduce column j into tmp; return the new pivot position (tmp
        # normalized) or -1 when the column lies in the pivot span.
        cdef int pos, t, v, f
        cdef int k = self.k, q = self.q
        for t in range(k):
            self.tmp[t] = self.cols[j, t]
        for pos in range(k):
            v = self.tmp[pos]
            if v == 0:
                continue
            if self.has_piv[pos]:
                for t in range(pos, k):
                    self.tmp[t] = (self.tmp[t] - v * self.piv[pos * k + t]) % q
                    if self.tmp[t] < 0:
                        self.tmp[t] += q
            else:
                f = self.inv[v]
                for t in range(pos, k):
                    self.tmp[t] = (self.tmp[t] * f) % q
                return pos
        return -1

    cdef void _push(self, int depth, int j):
        cdef int i, pos
        for i in range(self.mc):
            self.acc[i] += self.colw[j, i]
        cdef int added = -1
        if self.rank < self.k:
            pos = self._reduce(j)
            if pos >= 0:
                for i in range(self.k):
                    self.piv[pos * self.k + i] = self.tmp[i]
                self.has_piv[pos] = 1
                self.rank += 1
                added = pos
        self.added_pos[depth] = added

    cdef void _pop(self, int depth, int j):
        cdef int i
        for i in range(self.mc):
            self.acc[i] -= self.colw[j, i]
        cdef int pos = self.added_pos[depth]
        if pos >= 0:
            self.has_piv[pos] = 0
            self.rank -= 1

    cdef _path(self, int last):
        self.idx[self.n - 1] = last
        cdef int t
        return tuple([self.idx[t] for t in range(self.n)])

    cdef void _last_level(self, int lo, int hi):
        cdef bint full = self.rank == self.k
        cdef int j, i, cnt, w
        for j in range(lo, hi):
            if not full:
                if self._reduce(j) < 0:
                    continue
            self.gen += 1
            cnt = 0
            for i in range(self.mc):
                w = self.acc[i] + self.colw[j, i]
                if self.stamp[w] != self.gen:
                    self.stamp[w] = self.gen
                    cnt += 1
            self.evaluated += 1
            if cnt > self.best:
                self.best = cnt
                self.witnesses = []
                if self.witness_cap > 0:
                    self.witnesses.append(self._path(j))
            elif cnt == self.best and len(self.witnesses) < self.witness_cap:
                self.witnesses.append(self._path(j))

    cdef void _rec(self, int depth, int lo, int hi):
        if depth == self.n - 1:
            self._last_level(lo, hi)
            return
        cdef int slots_after = self.n - depth - 1
        cdef int j
        for j in range(lo, hi):
            self.idx[depth] = j
            self._push(depth, j)
            if self.rank + slots_after >= self.k:
                self._rec(depth + 1, j, self.P)
            self._pop(depth, j)

    def run(self, int first_lo, int first_hi):
        if self.P and self.mc and first_lo < first_hi:
            self._rec(0, first_lo, first_hi)
        return self.best, self.witnesses, self.evaluated


def enumerate_shard(colw, cols, q, n, k, max_weight, first_lo, first_hi,
                    witness_cap):
    """Same contract as ``_kernel_py.enumerate_shard``."""
    shard = _Shard(colw, cols, q, n, k, max_weight, witness_cap)
    return shard.run(first_lo, first_hi)
