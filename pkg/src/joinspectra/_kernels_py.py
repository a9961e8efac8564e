"""Pure-Python characteristic-polynomial kernels over arbitrary-size integers.

Twin of the compiled module ``joinspectra._kernels``; `_backend` picks one at
import time.  Both operate on row-major lists of Python ints so every result
is exact regardless of magnitude.

The recurrence (Faddeev-LeVerrier): with B0 = I and, for k = 1..n,

    Mk = A @ B(k-1),   c[n-k] = -trace(Mk) // k,   Bk = Mk + c[n-k] * I,

c collects the coefficients of det(xI - A) and the Bk are the coefficient
matrices of adj(xI - A) = sum_k x^(n-1-k) Bk.  All divisions are exact.
"""

BACKEND_NAME = "python"


def charpoly_int(a, n):
    """Ascending coefficients of det(xI - A) for an integer matrix A."""
    coeffs, _ = _faddeev_leverrier(a, n, want_adjugate=False)
    return coeffs


def charpoly_adjugate_int(a, n):
    """Charpoly coefficients plus adjugate coefficient matrices.

    Returns (coeffs, mats) where mats[j] is the row-major integer matrix at
    power j of adj(xI - A); len(mats) == n.
    """
    return _faddeev_leverrier(a, n, want_adjugate=True)


def _faddeev_leverrier(a, n, want_adjugate):
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
                    s += a[bi + l] * b[l * n + j]
                m[bi + j] = s
        tr = 0
        for i in range(n):
            tr += m[i * n + i]
        c = -tr // k
        coeffs[n - k] = c
        if k < n:
            b = m
            for i in range(n):
                b[i * n + i] += c
            if want_adjugate:
                mats.append(list(b))
    if want_adjugate:
        mats.reverse()
        return coeffs, mats
    return coeffs, None
