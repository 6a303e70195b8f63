# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; API mirrors ``pbei._purekernels``."""

from cpython.tuple cimport PyTuple_GET_SIZE


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t k, n = PyTuple_GET_SIZE(a)
    for k in range(n):
        if <long>a[k] > <long>b[k]:
            return False
    return True


cdef inline tuple _sub(tuple a, tuple b):
    cdef Py_ssize_t k, n = PyTuple_GET_SIZE(a)
    cdef list out = [0] * n
    for k in range(n):
        out[k] = <long>a[k] - <long>b[k]
    return tuple(out)


cdef inline tuple _add(tuple a, tuple b):
    cdef Py_ssize_t k, n = PyTuple_GET_SIZE(a)
    cdef list out = [0] * n
    for k in range(n):
        out[k] = <long>a[k] + <long>b[k]
    return tuple(out)


def monomial_divides(tuple a, tuple b):
    return _divides(a, b)


cdef dict _reduce_mod(dict f, list basis, long p):
    cdef dict rem = {}
    cdef tuple m, lm, q, gm, nm
    cdef dict g
    cdef long c, gc, val
    cdef bint found
    while f:
        m = max(f)
        c = f.pop(m)
        found = False
        for lm, g in basis:
            if _divides(lm, m):
                q = _sub(m, lm)
                for gm, gco in g.items():
                    if gm == lm:
                        continue
                    gc = gco
                    nm = _add(gm, q)
                    val = (<long>f.get(nm, 0) - c * gc) % p
                    if val < 0:
                        val += p
                    if val:
                        f[nm] = val
                    else:
                        f.pop(nm, None)
                found = True
                break
        if not found:
            rem[m] = c
    return rem


cdef dict _reduce_obj(dict f, list basis):
    cdef dict rem = {}
    cdef tuple m, lm, q, gm, nm
    cdef dict g
    cdef bint found
    while f:
        m = max(f)
        c = f.pop(m)
        found = False
        for lm, g in basis:
            if _divides(lm, m):
                q = _sub(m, lm)
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    nm = _add(gm, q)
                    val = f.get(nm, 0) - c * gc
                    if val:
                        f[nm] = val
                    else:
                        f.pop(nm, None)
                found = True
                break
        if not found:
            rem[m] = c
    return rem


cdef dict _reduce_obj_mod(dict f, list basis, object p):
    cdef dict rem = {}
    cdef tuple m, lm, q, gm, nm
    cdef dict g
    cdef bint found
    while f:
        m = max(f)
        c = f.pop(m)
        found = False
        for lm, g in basis:
            if _divides(lm, m):
                q = _sub(m, lm)
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    nm = _add(gm, q)
                    val = (f.get(nm, 0) - c * gc) % p
                    if val:
                        f[nm] = val
                    else:
                        f.pop(nm, None)
                found = True
                break
        if not found:
            rem[m] = c
    return rem


def reduce_full(f, list basis, long modulus):
    if 0 < modulus < 46341:
        return _reduce_mod(dict(f), basis, modulus)
    if modulus:
        return _reduce_obj_mod(dict(f), basis, modulus)
    return _reduce_obj(dict(f), basis)


def snf_diagonal(rows):
    cdef list a = [list(r) for r in rows]
    cdef Py_ssize_t nr = len(a)
    cdef Py_ssize_t nc = len(a[0]) if nr else 0
    cdef Py_ssize_t t = 0, i, j, pi, pj, bad
    cdef list diag = [], row, ri, rt
    cdef bint dirty
    while t < nr and t < nc:
        best = None
        for i in range(t, nr):
            row = a[i]
            for j in range(t, nc):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        pi = best[1]
        pj = best[2]
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            rt = a[t]
            for i in range(t + 1, nr):
                ri = a[i]
                v = ri[t]
                if v:
                    q = v // p
                    for j in range(t, nc):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        dirty = True
            for j in range(t + 1, nc):
                v = rt[j]
                if v:
                    q = v // p
                    for i in range(t, nr):
                        row = a[i]
                        row[j] -= q * row[t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                bad = -1
                for i in range(t + 1, nr):
                    ri = a[i]
                    for j in range(t + 1, nc):
                        if ri[j] % p:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad < 0:
                    break
                ri = a[bad]
                for j in range(t, nc):
                    rt[j] += ri[j]
                continue
            best = (abs(p), t, t)
            for i in range(t + 1, nr):
                v = a[i][t]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, t)
            for j in range(t + 1, nc):
                v = rt[j]
                if v and abs(v) < best[0]:
                    best = (abs(v), t, j)
            pi = best[1]
            pj = best[2]
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag
