# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled multiplication kernel for packed truncated series.

Same contract as ``_pykernel.mul``.  Returns ``None`` when the operands fall
outside what the int64 dense accumulator can represent exactly; the caller
then uses the Python kernel.
"""

from libc.stdlib cimport calloc, malloc, free
from libc.stdint cimport int64_t

MAX_DENSE = 1 << 18
COEFF_LIMIT = 1 << 62


def mul(dict a, dict b, long long base, int cap):
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return {}
    if base ** cap > MAX_DENSE:
        return None
    cdef Py_ssize_t size = base ** cap
    maxa = max(abs(c) for c in a.values())
    maxb = max(abs(c) for c in b.values())
    if maxa * maxb * min(na, nb) >= COEFF_LIMIT:
        return None

    cdef int64_t *pw = <int64_t *> malloc((cap + 1) * sizeof(int64_t))
    cdef int64_t *ka = <int64_t *> malloc(na * sizeof(int64_t))
    cdef int64_t *ca = <int64_t *> malloc(na * sizeof(int64_t))
    cdef int *la = <int *> malloc(na * sizeof(int))
    cdef int64_t *kb = <int64_t *> malloc(nb * sizeof(int64_t))
    cdef int64_t *cb = <int64_t *> malloc(nb * sizeof(int64_t))
    cdef int *lb = <int *> malloc(nb * sizeof(int))
    cdef int64_t *acc = <int64_t *> calloc(<size_t> size, sizeof(int64_t))
    cdef char *hit = <char *> calloc(<size_t> size, sizeof(char))
    cdef int64_t *touched = <int64_t *> malloc(<size_t> min(na * nb, size) * sizeof(int64_t))
    cdef Py_ssize_t i, j, ntouched = 0
    cdef int s
    cdef int64_t k
    try:
        if not (pw and ka and ca and la and kb and cb and lb and acc and hit and touched):
            raise MemoryError()
        pw[0] = 1
        for s in range(1, cap + 1):
            pw[s] = pw[s - 1] * base
        i = 0
        for key, c in a.items():
            ka[i] = key
            ca[i] = c
            s = 0
            while ka[i] >= pw[s]:
                s += 1
            la[i] = s
            i += 1
        j = 0
        for key, c in b.items():
            kb[j] = key
            cb[j] = c
            s = 0
            while kb[j] >= pw[s]:
                s += 1
            lb[j] = s
            j += 1
        with nogil:
            for i in range(na):
                for j in range(nb):
                    if la[i] + lb[j] < cap:
                        k = ka[i] * pw[lb[j]] + kb[j]
                        if not hit[k]:
                            hit[k] = 1
                            touched[ntouched] = k
                            ntouched += 1
                        acc[k] += ca[i] * cb[j]
        out = {}
        for i in range(ntouched):
            k = touched[i]
            if acc[k] != 0:
                out[k] = acc[k]
        return out
    finally:
        free(pw); free(ka); free(ca); free(la)
        free(kb); free(cb); free(lb)
        free(acc); free(hit); free(touched)
