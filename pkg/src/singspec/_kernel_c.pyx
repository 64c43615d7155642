# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel.py``.

Same API, same semantics, same deterministic reduction strategy; the exponent
arithmetic and the grevlex scans run as C loops.  Coefficients stay opaque
Python objects (exact rationals), so correctness is identical to the pure
backend by construction.  Any behavioural change here must be mirrored in
``_kernel.py``.
"""

BACKEND = "cython"


cpdef long total_degree(tuple e):
    cdef Py_ssize_t i, n = len(e)
    cdef long s = 0
    for i in range(n):
        s += <long> e[i]
    return s


def grevlex_key(e):
    """Sort key: larger key = larger monomial in grevlex."""
    return (sum(e), tuple(-v for v in reversed(e)))


cpdef bint grevlex_greater(tuple a, tuple b):
    """True if a > b in grevlex."""
    cdef Py_ssize_t i, n = len(a)
    cdef long da = 0, db = 0, d
    for i in range(n):
        da += <long> a[i]
        db += <long> b[i]
    if da != db:
        return da > db
    for i in range(n - 1, -1, -1):
        d = (<long> a[i]) - (<long> b[i])
        if d:
            return d < 0
    return False


cpdef tuple exp_add(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (<long> a[i]) + (<long> b[i])
    return tuple(out)


cpdef tuple exp_sub(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (<long> a[i]) - (<long> b[i])
    return tuple(out)


cpdef tuple exp_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    cdef list out = [0] * n
    for i in range(n):
        x = <long> a[i]
        y = <long> b[i]
        out[i] = x if x > y else y
    return tuple(out)


cpdef bint exp_divides(tuple a, tuple b):
    """True if the monomial with exponent a divides the one with exponent b."""
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if (<long> a[i]) > (<long> b[i]):
            return False
    return True


cpdef bint exp_coprime(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if (<long> a[i]) != 0 and (<long> b[i]) != 0:
            return False
    return True


cpdef tuple leading_exponent(terms):
    """Grevlex-largest exponent of a nonzero polynomial dict."""
    cdef tuple best = None
    cdef tuple e
    for e in terms:
        if best is None or grevlex_greater(e, best):
            best = e
    return best


def normal_form(terms, list lead_exps, list tails):
    """Full normal form of a polynomial dict modulo a monic basis.

    Mirrors ``_kernel.normal_form``: grevlex-largest term first, first
    dividing basis element in list order.
    """
    cdef dict work = dict(terms)
    cdef dict out = {}
    cdef Py_ssize_t i, hit, nbasis = len(lead_exps)
    cdef tuple e, d, k, te
    while work:
        e = leading_exponent(work)
        c = work.pop(e)
        hit = -1
        for i in range(nbasis):
            if exp_divides(<tuple> lead_exps[i], e):
                hit = i
                break
        if hit < 0:
            out[e] = c
            continue
        d = exp_sub(e, <tuple> lead_exps[hit])
        for te, tc in (<dict> tails[hit]).items():
            k = exp_add(d, te)
            v = work.get(k, 0) - c * tc
            if v:
                work[k] = v
            elif k in work:
                del work[k]
    return out


def s_polynomial(dict f, tuple lf, dict g, tuple lg):
    """S-polynomial of two monic polynomial dicts with leading exponents lf, lg."""
    cdef tuple lcm = exp_lcm(lf, lg)
    cdef tuple df = exp_sub(lcm, lf)
    cdef tuple dg = exp_sub(lcm, lg)
    cdef dict out = {}
    cdef tuple e, k
    for e, c in f.items():
        out[exp_add(e, df)] = c
    for e, c in g.items():
        k = exp_add(e, dg)
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out
