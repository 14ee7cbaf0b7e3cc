"""Pure-Python term-arithmetic kernel.

Terms are dicts mapping exponent tuples (doubled-integer convention) to
nonzero arbitrary-precision integer coefficients.  These four functions are
the hot loops of every character computation; `_kernel.pyx` is the compiled
twin with the same contract.  Zero coefficients are never stored.
"""


def add_terms(a, b):
    """Coefficient-wise sum of two term dicts."""
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def mul_terms(a, b):
    """Convolution product of two term dicts."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    bitems = list(b.items())
    for ea, ca in a.items():
        for eb, cb in bitems:
            k = tuple(map(sum, zip(ea, eb)))
            v = out.get(k, 0) + ca * cb
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def axpy_terms(acc, coef, shift, b):
    """In place: acc += coef * x^shift * b.  Returns the keys it touched."""
    touched = []
    for eb, cb in b.items():
        k = tuple(map(sum, zip(shift, eb)))
        touched.append(k)
        v = acc.get(k, 0) + coef * cb
        if v:
            acc[k] = v
        elif k in acc:
            del acc[k]
    return touched


def scale_shift_terms(coef, shift, b):
    """New term dict coef * x^shift * b (coef nonzero)."""
    out = {}
    for eb, cb in b.items():
        out[tuple(map(sum, zip(shift, eb)))] = coef * cb
    return out
