# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for sparse term maps (see ``_poly_py`` for semantics)."""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize, PyBytes_GET_SIZE


def mul_terms(dict a, dict b):
    """Product of two term maps as a new dict (zero coefficients dropped)."""
    cdef dict out = {}
    if not a or not b:
        return out
    cdef bytes ka, kb, key
    cdef object ca, cb, cur, prod
    cdef Py_ssize_t m, i
    cdef const char * pa
    cdef const char * pb
    cdef char * pk
    cdef int s
    for ka, ca in a.items():
        pa = PyBytes_AS_STRING(ka)
        m = PyBytes_GET_SIZE(ka)
        for kb, cb in b.items():
            pb = PyBytes_AS_STRING(kb)
            key = PyBytes_FromStringAndSize(NULL, m)
            pk = PyBytes_AS_STRING(key)
            for i in range(m):
                s = (<unsigned char> pa[i]) + (<unsigned char> pb[i])
                if s > 255:
                    raise OverflowError("exponent exceeds one byte")
                pk[i] = <char> s
            prod = ca * cb
            cur = out.get(key)
            if cur is None:
                out[key] = prod
            else:
                cur = cur + prod
                if cur:
                    out[key] = cur
                else:
                    del out[key]
    return out


def add_terms(dict acc, dict other, object coeff=1):
    """In-place ``acc += coeff * other``; returns ``acc``."""
    if coeff == 0:
        return acc
    cdef bytes k
    cdef object c, cur
    for k, c in other.items():
        cur = acc.get(k)
        if cur is None:
            acc[k] = coeff * c
        else:
            cur = cur + coeff * c
            if cur:
                acc[k] = cur
            else:
                del acc[k]
    return acc
