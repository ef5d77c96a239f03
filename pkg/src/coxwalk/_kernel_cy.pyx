# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernel_py.

Same functions, same exact integer semantics; Cython removes the
interpreter overhead of the inner loops while arbitrary-precision integers
keep doing the arithmetic.  Keep the two files in sync; the parity test
compares them on randomized inputs.
"""

from math import gcd

BACKEND = "compiled"


def poly_mul_mod(a, b, mp_low):
    """(a * b) reduced modulo the monic polynomial with low part mp_low."""
    cdef Py_ssize_t d = len(mp_low)
    cdef Py_ssize_t i, j, base
    cdef list r = [0] * (2 * d - 1)
    cdef object ai, bj, c, mj
    for i in range(d):
        ai = a[i]
        if ai:
            for j in range(d):
                bj = b[j]
                if bj:
                    r[i + j] = r[i + j] + ai * bj
    for i in range(2 * d - 2, d - 1, -1):
        c = r[i]
        if c:
            base = i - d
            for j in range(d):
                mj = mp_low[j]
                if mj:
                    r[base + j] = r[base + j] - c * mj
    del r[d:]
    return r


def normalize(nums, den):
    """Divide out gcd(nums, den); den stays positive.  Returns (tuple, int)."""
    cdef object g = den
    cdef object x
    for x in nums:
        if x:
            g = gcd(g, x)
            if g == 1:
                return tuple(nums), den
    if g > 1:
        return tuple([x // g for x in nums]), den // g
    return tuple(nums), den


def dot_mod(anums, adens, bnums, bdens, mp_low):
    """Normalized sum of products a_k * b_k of field elements."""
    cdef Py_ssize_t d = len(mp_low)
    cdef Py_ssize_t n = len(anums)
    cdef Py_ssize_t i, k
    cdef list acc = [0] * d
    cdef object acc_den = 1
    cdef object td, g, sa, st
    cdef list tn
    cdef bint nonzero
    for k in range(n):
        tn = poly_mul_mod(anums[k], bnums[k], mp_low)
        nonzero = False
        for i in range(d):
            if tn[i]:
                nonzero = True
                break
        if not nonzero:
            continue
        td = adens[k] * bdens[k]
        g = gcd(acc_den, td)
        sa = td // g
        st = acc_den // g
        for i in range(d):
            acc[i] = acc[i] * sa + tn[i] * st
        acc_den = acc_den * sa
    return normalize(acc, acc_den)


def interval_sign(nums, lo, hi, shift):
    """Sign of sum nums[i] * c^i for any c in [lo, hi] / 2^shift; 0 means
    inconclusive."""
    cdef Py_ssize_t d = len(nums)
    cdef Py_ssize_t i
    cdef long cur = 0, sh = shift
    cdef object a, b, p1, p2, p3, p4, n, t
    a = nums[d - 1]
    b = a
    for i in range(d - 2, -1, -1):
        p1 = a * lo
        p2 = a * hi
        p3 = b * lo
        p4 = b * hi
        a = p1
        if p2 < a:
            a = p2
        if p3 < a:
            a = p3
        if p4 < a:
            a = p4
        b = p1
        if p2 > b:
            b = p2
        if p3 > b:
            b = p3
        if p4 > b:
            b = p4
        cur += sh
        n = nums[i]
        if n:
            t = n << cur
            a = a + t
            b = b + t
    if a > 0:
        return 1
    if b < 0:
        return -1
    return 0


def eval_sign_at_dyadic(coeffs, num, shift):
    """Exact sign of the integer polynomial `coeffs` at num / 2^shift."""
    cdef Py_ssize_t i
    cdef long cur = 0, sh = shift
    cdef object acc, c
    acc = coeffs[len(coeffs) - 1]
    for i in range(len(coeffs) - 2, -1, -1):
        acc = acc * num
        cur += sh
        c = coeffs[i]
        if c:
            acc = acc + (c << cur)
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0
