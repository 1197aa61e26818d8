# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot simulation kernels.

Bit-for-bit equivalent to the numpy fallback in _pykernels.py: the pair walk
uses the same integer arithmetic (IEEE sqrt guess plus exact fixup) and the
graph measures are plain integer algorithms.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport floor, sqrt

cnp.import_array()

NAME = "cython"


def pair_count(int n):
    return <long long> n * (n - 1) // 2


cdef inline long long _offset(long long r, long long n) nogil:
    return r * n - (r * (r + 1)) // 2


cdef inline long long _row_of(long long pos, long long n) nogil:
    cdef long long guess
    guess = <long long> floor(n - 0.5 - sqrt((n - 0.5) * (n - 0.5) - 2.0 * pos))
    if guess < 0:
        guess = 0
    if guess > n - 2:
        guess = n - 2
    while _offset(guess + 1, n) <= pos:
        guess += 1
    while _offset(guess, n) > pos:
        guess -= 1
    return guess


def walk_pairs(int n, long long start, const cnp.int64_t[::1] skips):
    """Advance through the linearized pair sequence by skips[t] + 1 per step."""
    cdef long long m = <long long> n * (n - 1) // 2
    cdef Py_ssize_t nskips = skips.shape[0]
    cdef cnp.int64_t[::1] out_i = np.empty(nskips, np.int64)
    cdef cnp.int64_t[::1] out_j = np.empty(nskips, np.int64)
    cdef long long pos = start
    cdef long long row
    cdef Py_ssize_t t, k = 0
    for t in range(nskips):
        pos += 1 + skips[t]
        if pos >= m:
            break
        row = _row_of(pos, n)
        out_i[k] = row
        out_j[k] = pos - _offset(row, n) + row + 1
        k += 1
    return np.asarray(out_i[:k]).copy(), np.asarray(out_j[:k]).copy(), pos


cdef long long _find(cnp.int64_t[::1] parent, long long a) nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def components(int n, const cnp.int64_t[::1] edges_i, const cnp.int64_t[::1] edges_j):
    """Connected-component labels, numbered by first appearance in node order."""
    cdef cnp.int64_t[::1] parent = np.arange(n, dtype=np.int64)
    cdef Py_ssize_t e, v
    cdef long long ra, rb
    for e in range(edges_i.shape[0]):
        ra = _find(parent, edges_i[e])
        rb = _find(parent, edges_j[e])
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    cdef cnp.int64_t[::1] labels = np.empty(n, np.int64)
    cdef cnp.int64_t[::1] label_of_root = np.full(n, -1, np.int64)
    cdef long long next_label = 0, root
    for v in range(n):
        root = _find(parent, v)
        if label_of_root[root] < 0:
            label_of_root[root] = next_label
            next_label += 1
        labels[v] = label_of_root[root]
    return np.asarray(labels)


cdef int _bfs(int n, const cnp.int64_t[::1] indptr, const cnp.int64_t[::1] indices,
              int source, cnp.int32_t[::1] dist, cnp.int32_t[::1] queue) nogil:
    """BFS from source; fills dist; returns eccentricity or -1 if not all reached."""
    cdef Py_ssize_t v
    for v in range(n):
        dist[v] = -1
    cdef Py_ssize_t head = 0, tail = 0
    cdef long long u, w, k
    cdef int ecc = 0
    dist[source] = 0
    queue[tail] = source
    tail += 1
    cdef Py_ssize_t reached = 1
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                if dist[w] > ecc:
                    ecc = dist[w]
                queue[tail] = <cnp.int32_t> w
                tail += 1
                reached += 1
    if reached < n:
        return -1
    return ecc


def diameter_csr(int n, const cnp.int64_t[::1] indptr, const cnp.int64_t[::1] indices):
    """Exact diameter by all-source BFS; -1 when the graph is disconnected."""
    if n <= 1:
        return 0
    if indices.shape[0] == 0:
        return -1
    cdef cnp.int32_t[::1] dist = np.empty(n, np.int32)
    cdef cnp.int32_t[::1] queue = np.empty(n, np.int32)
    cdef int best = 0, ecc
    cdef int s
    with nogil:
        ecc = _bfs(n, indptr, indices, 0, dist, queue)
    if ecc < 0:
        return -1
    best = ecc
    for s in range(1, n):
        with nogil:
            ecc = _bfs(n, indptr, indices, s, dist, queue)
        if ecc > best:
            best = ecc
    return best


def bfs_eccentricity(int n, const cnp.int64_t[::1] indptr, const cnp.int64_t[::1] indices, int source):
    """Eccentricity of one node; -1 if it does not reach the whole graph."""
    cdef cnp.int32_t[::1] dist = np.empty(n, np.int32)
    cdef cnp.int32_t[::1] queue = np.empty(n, np.int32)
    cdef int ecc
    with nogil:
        ecc = _bfs(n, indptr, indices, source, dist, queue)
    return ecc


def isolated_triangles(int n, const cnp.int64_t[::1] indptr, const cnp.int64_t[::1] indices,
                       const cnp.int64_t[::1] degrees):
    """Count triangles whose three vertices have no other links."""
    cdef long long count = 0
    cdef long long a, b, c, s, sb
    for a in range(n):
        if degrees[a] != 2:
            continue
        s = indptr[a]
        b = indices[s]
        c = indices[s + 1]
        if a < b and degrees[b] == 2 and degrees[c] == 2:
            sb = indptr[b]
            if indices[sb] == c or indices[sb + 1] == c:
                count += 1
    return count
