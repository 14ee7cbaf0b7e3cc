# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-arithmetic kernel (same contract as `_kernel_py`).

Coefficients stay Python ints (arbitrary precision is non-negotiable); the
win comes from compiled loops and tuple construction.
"""
cimport cython
from cpython.tuple cimport PyTuple_New, PyTuple_GET_SIZE, PyTuple_GET_ITEM, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF


@cython.boundscheck(False)
cdef inline tuple _tuple_add(tuple ea, tuple eb):
    cdef Py_ssize_t n = PyTuple_GET_SIZE(ea)
    cdef tuple out = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object s
    for i in range(n):
        s = (<object>PyTuple_GET_ITEM(ea, i)) + (<object>PyTuple_GET_ITEM(eb, i))
        Py_INCREF(s)
        PyTuple_SET_ITEM(out, i, s)
    return out


def add_terms(dict a, dict b):
    """Coefficient-wise sum of two term dicts."""
    cdef dict out = dict(a)
    cdef object e, c, v
    for e, c in b.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v = v + c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def mul_terms(dict a, dict b):
    """Convolution product of two term dicts."""
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef list bitems = list(b.items())
    cdef object ea, ca, cb, v
    cdef tuple k, eb
    cdef Py_ssize_t j, nb = len(bitems)
    for ea, ca in a.items():
        for j in range(nb):
            eb = <tuple>(<tuple>bitems[j])[0]
            cb = (<tuple>bitems[j])[1]
            k = _tuple_add(<tuple>ea, eb)
            v = out.get(k)
            if v is None:
                out[k] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[k] = v
                else:
                    del out[k]
    return out


def axpy_terms(dict acc, object coef, tuple shift, dict b):
    """In place: acc += coef * x^shift * b.  Returns the keys it touched."""
    cdef list touched = []
    cdef object eb, cb, v
    cdef tuple k
    for eb, cb in b.items():
        k = _tuple_add(shift, <tuple>eb)
        touched.append(k)
        v = acc.get(k)
        if v is None:
            acc[k] = coef * cb
        else:
            v = v + coef * cb
            if v:
                acc[k] = v
            else:
                del acc[k]
    return touched


def scale_shift_terms(object coef, tuple shift, dict b):
    """New term dict coef * x^shift * b (coef nonzero)."""
    cdef dict out = {}
    cdef object eb, cb
    for eb, cb in b.items():
        out[_tuple_add(shift, <tuple>eb)] = coef * cb
    return out
