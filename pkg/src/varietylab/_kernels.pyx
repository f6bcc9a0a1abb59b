# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: transformation closure, Cayley tables, identity search.

Mirrors ``_kernels_py`` exactly; see that module for the contracts.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.string cimport memcmp, memcpy

cnp.import_array()

cdef enum:
    OP_VAR = 0
    OP_ONE = 1
    OP_MUL = 2
    OP_POW = 3


cdef inline uint64_t _hash(const int32_t* row, Py_ssize_t q) nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef Py_ssize_t i
    for i in range(q):
        h ^= <uint64_t>row[i]
        h *= 1099511628211ULL
    return h


def transformation_closure(gens_in, Py_ssize_t cap):
    gens_arr = np.ascontiguousarray(gens_in, dtype=np.int32)
    if gens_arr.ndim != 2:
        gens_arr = gens_arr.reshape(0, 0)
    cdef const int32_t[:, ::1] gens = gens_arr
    cdef Py_ssize_t k = gens.shape[0]
    cdef Py_ssize_t q = gens.shape[1]
    cdef Py_ssize_t capacity = 256
    cdef Py_ssize_t hsize = 1024
    cdef Py_ssize_t n = 1, head = 0, i, s, slot, j
    cdef uint64_t h
    cdef bint found

    elem_arr = np.empty((capacity, q), dtype=np.int32)
    right_arr = np.empty((capacity, k), dtype=np.int32)
    parent_arr = np.empty(capacity, dtype=np.int32)
    letter_arr = np.empty(capacity, dtype=np.int32)
    hash_arr = np.full(hsize, -1, dtype=np.int64)
    cdef int32_t[:, ::1] elems = elem_arr
    cdef int32_t[:, ::1] right = right_arr
    cdef int32_t[::1] parent = parent_arr
    cdef int32_t[::1] letter = letter_arr
    cdef int64_t[::1] table = hash_arr
    cdef int32_t[::1] cand = np.empty(max(q, 1), dtype=np.int32)

    for s in range(q):
        elems[0, s] = s
    parent[0] = -1
    letter[0] = -1
    h = _hash(&elems[0, 0], q) if q else 0
    table[h & (hsize - 1)] = 0

    while head < n:
        for i in range(k):
            for s in range(q):
                cand[s] = gens[i, elems[head, s]]
            h = _hash(&cand[0], q) if q else 0
            slot = h & (hsize - 1)
            found = False
            while table[slot] != -1:
                j = table[slot]
                if q == 0 or memcmp(&elems[j, 0], &cand[0], q * sizeof(int32_t)) == 0:
                    found = True
                    break
                slot = (slot + 1) & (hsize - 1)
            if not found:
                if n >= cap:
                    return None
                if n >= capacity:
                    capacity *= 2
                    elem_arr = np.resize(elem_arr, (capacity, q))
                    right_arr = np.resize(right_arr, (capacity, k))
                    parent_arr = np.resize(parent_arr, capacity)
                    letter_arr = np.resize(letter_arr, capacity)
                    elems = elem_arr
                    right = right_arr
                    parent = parent_arr
                    letter = letter_arr
                j = n
                if q:
                    memcpy(&elems[j, 0], &cand[0], q * sizeof(int32_t))
                parent[j] = head
                letter[j] = i
                table[slot] = j
                n += 1
                if 2 * n > hsize:
                    hsize *= 4
                    hash_arr = np.full(hsize, -1, dtype=np.int64)
                    table = hash_arr
                    for j in range(n):
                        slot = (_hash(&elems[j, 0], q) if q else 0) & (hsize - 1)
                        while table[slot] != -1:
                            slot = (slot + 1) & (hsize - 1)
                        table[slot] = j
                    j = n - 1
            right[head, i] = j
        head += 1

    return (
        np.array(elem_arr[:n]),
        np.array(right_arr[:n]),
        np.array(parent_arr[:n]),
        np.array(letter_arr[:n]),
    )


def cayley_table(right_in, parent_in, letter_in):
    cdef const int32_t[:, ::1] right = np.ascontiguousarray(right_in, dtype=np.int32)
    cdef const int32_t[::1] parent = np.ascontiguousarray(parent_in, dtype=np.int32)
    cdef const int32_t[::1] letter = np.ascontiguousarray(letter_in, dtype=np.int32)
    cdef Py_ssize_t n = right.shape[0], i, j
    out = np.empty((n, n), dtype=np.int32)
    cdef int32_t[:, ::1] t = out
    for i in range(n):
        t[i, 0] = i
        for j in range(1, n):
            t[i, j] = right[t[i, parent[j]], letter[j]]
    return out


cdef inline int32_t _eval(const int32_t[:, ::1] prog, const int32_t[:, ::1] tab,
                          const int32_t[::1] omega, const int32_t[::1] period,
                          int32_t one, const int32_t* values, int32_t* stack) nogil:
    cdef Py_ssize_t pc, top = 0, r
    cdef int32_t a, b, m, x
    for pc in range(prog.shape[0]):
        if prog[pc, 0] == OP_VAR:
            stack[top] = values[prog[pc, 1]]
            top += 1
        elif prog[pc, 0] == OP_ONE:
            stack[top] = one
            top += 1
        elif prog[pc, 0] == OP_MUL:
            b = stack[top - 1]
            a = stack[top - 2]
            top -= 1
            stack[top - 1] = tab[a, b]
        else:
            m = stack[top - 1]
            x = omega[m]
            r = prog[pc, 1] % period[m]
            if r < 0:
                r += period[m]
            while r > 0:
                x = tab[x, m]
                r -= 1
            stack[top - 1] = x
    return stack[0]


def find_identity_failure(table_in, omega_in, period_in, int one, prog_l_in, prog_r_in,
                          Py_ssize_t nvars, domain_in, leq_in):
    cdef const int32_t[:, ::1] tab = np.ascontiguousarray(table_in, dtype=np.int32)
    cdef const int32_t[::1] omega = np.ascontiguousarray(omega_in, dtype=np.int32)
    cdef const int32_t[::1] period = np.ascontiguousarray(period_in, dtype=np.int32)
    cdef const int32_t[:, ::1] pl = np.ascontiguousarray(prog_l_in, dtype=np.int32).reshape(-1, 2)
    cdef const int32_t[:, ::1] pr = np.ascontiguousarray(prog_r_in, dtype=np.int32).reshape(-1, 2)
    cdef const int32_t[::1] domain = np.ascontiguousarray(domain_in, dtype=np.int32)
    cdef bint ordered = leq_in is not None
    cdef const cnp.uint8_t[:, ::1] leq
    if ordered:
        leq = np.ascontiguousarray(leq_in, dtype=np.uint8)
    cdef Py_ssize_t size = domain.shape[0], v
    if size == 0 and nvars > 0:
        return -1
    cdef int32_t[::1] digits = np.zeros(max(nvars, 1), dtype=np.int32)
    cdef int32_t[::1] values = np.zeros(max(nvars, 1), dtype=np.int32)
    cdef int32_t[::1] stack = np.zeros(max(pl.shape[0], pr.shape[0], 1), dtype=np.int32)
    cdef int64_t count = 0
    cdef int32_t lhs, rhs
    for v in range(nvars):
        values[v] = domain[0]
    with nogil:
        while True:
            lhs = _eval(pl, tab, omega, period, one, &values[0], &stack[0])
            rhs = _eval(pr, tab, omega, period, one, &values[0], &stack[0])
            if ordered:
                if not leq[lhs, rhs]:
                    break
            elif lhs != rhs:
                break
            count += 1
            v = nvars - 1
            while v >= 0:
                digits[v] += 1
                if digits[v] < size:
                    values[v] = domain[digits[v]]
                    break
                digits[v] = 0
                values[v] = domain[0]
                v -= 1
            if v < 0:
                count = -1
                break
    return count
