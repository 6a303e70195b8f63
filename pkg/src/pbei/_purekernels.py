"""Pure-Python hot kernels.

Same API as the compiled ``_ckernels`` extension; used when the extension
is not built or when ``PBEI_PURE_PYTHON`` is set.

Monomials are exponent tuples compared lexicographically (the first
variable is the largest).  Polynomials are ``{monomial: coefficient}``
dicts.  ``modulus == 0`` means rational coefficients (``Fraction``),
otherwise coefficients are ints reduced modulo ``modulus``.
"""


def monomial_divides(a, b):
    for u, v in zip(a, b):
        if u > v:
            return False
    return True


def reduce_full(f, basis, modulus):
    """Fully reduce ``f`` modulo ``basis``.

    ``basis`` is a list of ``(leading_monomial, terms)`` pairs whose
    leading coefficients are 1.  Returns the remainder as a new dict.
    """
    f = dict(f)
    rem = {}
    while f:
        m = max(f)
        c = f.pop(m)
        for lm, g in basis:
            for u, v in zip(lm, m):
                if u > v:
                    break
            else:
                q = tuple([v - u for u, v in zip(lm, m)])
                for gm, gc in g.items():
                    if gm is lm or gm == lm:
                        continue
                    nm = tuple([s + t for s, t in zip(gm, q)])
                    val = f.get(nm, 0) - c * gc
                    if modulus:
                        val %= modulus
                    if val:
                        f[nm] = val
                    else:
                        f.pop(nm, None)
                break
        else:
            rem[m] = c
    return rem


def snf_diagonal(rows):
    """Nonzero invariant factors of an integer matrix (list of row lists)."""
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    diag = []
    t = 0
    while t < nr and t < nc:
        # pivot: smallest nonzero absolute value in the trailing block
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
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                v = a[i][t]
                if v:
                    q = v // p
                    ri, rt = a[i], a[t]
                    for j in range(t, nc):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        dirty = True
            rt = a[t]
            for j in range(t + 1, nc):
                v = rt[j]
                if v:
                    q = v // p
                    for i in range(t, nr):
                        a[i][j] -= q * a[i][t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                # divisibility of the rest of the block by the pivot
                bad = None
                for i in range(t + 1, nr):
                    for j in range(t + 1, nc):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                ri, rt = a[bad], a[t]
                for j in range(t, nc):
                    rt[j] += ri[j]
                continue
            # move the smallest entry of row/column t into the pivot slot
            best = (abs(p), t, t)
            for i in range(t + 1, nr):
                v = a[i][t]
                if v and abs(v) < best[0]:
                    best = (abs(v), i, t)
            for j in range(t + 1, nc):
                v = a[t][j]
                if v and abs(v) < best[0]:
                    best = (abs(v), t, j)
            _, pi, pj = best
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag
