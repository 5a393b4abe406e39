# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gray-code accumulation over all subsets of a root list.

Every subset's weight is tracked as a single mixed-radix integer ``code``;
toggling root ``k`` shifts the code by ``+delta[k]`` (enter) or ``-delta[k]``
(leave).
"""
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from cython.operator cimport dereference as deref, preincrement as inc

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef int64_t _start_code(const int64_t[:] delta, int64_t base, uint64_t state) noexcept nogil:
    cdef int64_t code = base
    cdef Py_ssize_t k
    for k in range(delta.shape[0]):
        if (state >> k) & 1:
            code += delta[k]
    return code


def gray_code_counts(const int64_t[:] delta, int64_t base, int64_t start, int64_t stop):
    cdef unordered_map[int64_t, int64_t] counts
    cdef uint64_t i, state
    cdef int bit
    cdef int64_t code
    if stop <= start:
        return {}
    state = <uint64_t>start ^ (<uint64_t>start >> 1)
    code = _start_code(delta, base, state)
    with nogil:
        counts[code] += 1
        for i in range(<uint64_t>start + 1, <uint64_t>stop):
            bit = __builtin_ctzll(i)
            state ^= (<uint64_t>1) << bit
            if (state >> bit) & 1:
                code += delta[bit]
            else:
                code -= delta[bit]
            counts[code] += 1
    out = {}
    cdef unordered_map[int64_t, int64_t].iterator it = counts.begin()
    while it != counts.end():
        out[deref(it).first] = deref(it).second
        inc(it)
    return out


def gray_code_match(const int64_t[:] delta, int64_t base, int64_t start, int64_t stop, int64_t target):
    cdef uint64_t i, state
    cdef int bit
    cdef int64_t code, hits = 0
    if stop <= start:
        return 0
    state = <uint64_t>start ^ (<uint64_t>start >> 1)
    code = _start_code(delta, base, state)
    with nogil:
        if code == target:
            hits += 1
        for i in range(<uint64_t>start + 1, <uint64_t>stop):
            bit = __builtin_ctzll(i)
            state ^= (<uint64_t>1) << bit
            if (state >> bit) & 1:
                code += delta[bit]
            else:
                code -= delta[bit]
            if code == target:
                hits += 1
    return hits
