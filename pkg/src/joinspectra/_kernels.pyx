# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled characteristic-polynomial kernels over arbitrary-size integers.

Twin of ``joinspectra._kernels_py`` (see there for the recurrence).  The
arithmetic still runs on Python ints, so results stay exact at any magnitude;
the compilation removes the interpreter's loop and indexing overhead, which
dominates at the matrix sizes this package works with.
"""

BACKEND_NAME = "cython"


def charpoly_int(list a, Py_ssize_t n):
    """Ascending coefficients of det(xI - A) for an integer matrix A."""
    coeffs, _ = _faddeev_leverrier(a, n, False)
    return coeffs


def charpoly_adjugate_int(list a, Py_ssize_t n):
    """Charpoly coefficients plus adjugate coefficient matrices.

    Returns (coeffs, mats) where mats[j] is the row-major integer matrix at
    power j of adj(xI - A); len(mats) == n.
    """
    return _faddeev_leverrier(a, n, True)


cdef _faddeev_leverrier(list a, Py_ssize_t n, bint want_adjugate):
    cdef Py_ssize_t i, j, l, k, bi
    cdef list coeffs, b, m, mats
    cdef object s, tr, c
    if n == 0:
        return [1], []
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    b = [0] * (n * n)
    for i in range(n):
        b[i * n + i] = 1
    mats = [list(b)] if want_adjugate else None
    for k in range(1, n + 1):
        m = [0] * (n * n)
        for i in range(n):
            bi = i * n
            for j in range(n):
                s = 0
                for l in range(n):
                    s = s + a[bi + l] * b[l * n + j]
                m[bi + j] = s
        tr = 0
        for i in range(n):
            tr = tr + m[i * n + i]
        c = -tr // k
        coeffs[n - k] = c
        if k < n:
            b = m
            for i in range(n):
                b[i * n + i] = b[i * n + i] + c
            if want_adjugate:
                mats.append(list(b))
    if want_adjugate:
        mats.reverse()
        return coeffs, mats
    return coeffs, None
