"""Exact arithmetic in the real cyclotomic field Q(c), c = 2cos(pi/L).

Every bilinear-form value -cos(pi/m) of a Coxeter diagram with finite label
lcm L lies in Q(c): cos(pi/m) = T_{L/m}(c/2) with T_k the degree-k Chebyshev
polynomial.  Since c is an algebraic integer, its minimal polynomial is
monic with integer coefficients, so elements of Q(c) are integer numerator
vectors in the power basis 1, c, ..., c^(d-1) over a positive common
denominator.  Equality is decidable by coefficient comparison; signs are
decided by exact interval arithmetic over dyadic rationals, refining an
isolating interval for c by bisection until zero is excluded.
"""

import functools
import math
from fractions import Fraction

from . import _kernel as K

__all__ = [
    "FieldSpec",
    "AlgReal",
    "GramMatrix",
    "Definiteness",
    "field_for",
    "field_for_lcm",
    "form_value",
    "gram",
    "definiteness",
    "minpoly_2cos_pi_over",
]


# ---------------------------------------------------------------------------
# integer polynomial helpers (little-endian coefficient lists)

def _poly_mul(a, b):
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] += ai * bj
    return r


def _poly_divexact(num, div):
    """Exact division by a monic integer polynomial; remainder must vanish."""
    num = list(num)
    dn = len(div) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            quot[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * div[j]
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def _poly_sqrt(p):
    """Exact square root of a monic integer polynomial of even degree."""
    if len(p) % 2 == 0:
        raise ArithmeticError("odd degree has no polynomial square root")
    m = (len(p) - 1) // 2
    q = [0] * (m + 1)
    q[m] = 1
    for i in range(m - 1, -1, -1):
        s = 0
        for j in range(i + 1, m):
            s += q[j] * q[m + i - j]
        c = p[m + i] - s
        if c % 2:
            raise ArithmeticError("polynomial is not a perfect square")
        q[i] = c // 2
    if _poly_mul(q, q) != list(p):
        raise ArithmeticError("polynomial is not a perfect square")
    return q


def _dickson(k):
    """Coefficients of 2*T_k(x/2), the monic integer form of cos(k*theta)."""
    if k == 0:
        return [2]
    prev, cur = [2], [0, 1]
    for _ in range(k - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _totient(n):
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@functools.lru_cache(maxsize=None)
def minpoly_2cos_pi_over(L):
    """Minimal polynomial of 2cos(pi/L), monic with integer coefficients.

    Derived from the Chebyshev relation cos(L*theta) = T_L(cos theta):
    2cos(pi/L) is a root of 2*T_L(x/2) + 2, whose distinct irreducible
    factors are the minimal polynomials of 2cos(pi/L') for the divisors L'
    of L with L/L' odd.  Dividing those out recursively and taking the
    exact square root leaves the factor vanishing at 2cos(pi/L).
    """
    if L < 1:
        raise ValueError("L must be a positive integer")
    if L == 1:
        return (2, 1)
    p = _dickson(L)
    p[0] += 2
    for div in _divisors(L):
        if div == L or (L // div) % 2 == 0:
            continue
        if div == 1:
            p = _poly_divexact(p, (2, 1))
        else:
            m = minpoly_2cos_pi_over(div)
            p = _poly_divexact(_poly_divexact(p, m), m)
    return tuple(_poly_sqrt(p))


def _refine_interval(mp, lo, hi, shift, steps):
    """Halve an isolating interval for the largest root of mp, `steps` times.

    The invariant mp(lo) < 0 < mp(hi) is maintained, so the interval always
    brackets the root.  Degenerate intervals (rational root pinned exactly)
    pass through unchanged.
    """
    if lo == hi:
        return lo, hi, shift
    for _ in range(steps):
        lo <<= 1
        hi <<= 1
        shift += 1
        mid = (lo + hi) >> 1
        s = K.eval_sign_at_dyadic(mp, mid, shift)
        if s == 0:
            return mid, mid, shift
        if s < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi, shift


class FieldSpec:
    """The real cyclotomic field Q(2cos(pi/L)).

    Carries the minimal polynomial (monic, integer, little-endian including
    the leading 1), the degree, and an isolating dyadic interval for the
    generator used by sign certification.  Instances are immutable and
    shared; obtain them through field_for / field_for_lcm.
    """

    __slots__ = ("L", "degree", "minpoly", "_mp_low", "_iso", "_zero", "_one", "_gen")

    def __init__(self, L):
        mp = minpoly_2cos_pi_over(L)
        d = len(mp) - 1
        expected = _totient(2 * L) // 2 if L >= 2 else 1
        if d != expected:
            raise ArithmeticError(f"minimal polynomial degree {d} != phi(2L)/2 = {expected}")
        approx = 2.0 * math.cos(math.pi / L)
        self.L = L
        self.degree = d
        self.minpoly = mp
        self._mp_low = mp[:-1]
        self._iso = self._isolate(approx)
        # the isolating interval is certified by exact sign changes of the
        # minimal polynomial; checking it still contains the numeric value
        # ties that root to 2cos(pi/L) itself
        lo, hi, shift = self._iso
        scale = float(1 << shift) if shift < 1024 else None
        if scale is not None and not (
            lo / scale - 1e-9 <= approx <= hi / scale + 1e-9
        ):
            raise ArithmeticError("isolating interval does not contain 2cos(pi/L)")
        self._zero = AlgReal(self, (0,) * d, 1, _raw=True)
        one = [0] * d
        one[0] = 1
        self._one = AlgReal(self, tuple(one), 1, _raw=True)
        if d >= 2:
            g = [0] * d
            g[1] = 1
            self._gen = AlgReal(self, tuple(g), 1, _raw=True)
        else:
            self._gen = AlgReal(self, (-mp[0],), 1, _raw=True)

    def _isolate(self, approx):
        if self.degree == 1:
            c = -self.minpoly[0]
            return (c, c, 0)
        # 2cos(pi/L) is the largest root; separate it from the next
        # conjugate 2cos(k*pi/L).  Conjugate gaps dwarf float error for any
        # realistic L, and the bracketing signs are then certified exactly.
        L = self.L
        conj = sorted(
            2.0 * math.cos(math.pi * k / L)
            for k in range(1, L)
            if math.gcd(k, 2 * L) == 1
        )
        margin = (conj[-1] - conj[-2]) / 4.0
        shift = 32
        lo = math.floor((approx - margin) * (1 << shift))
        hi = 2 << shift
        if K.eval_sign_at_dyadic(self.minpoly, lo, shift) >= 0:
            raise ArithmeticError("failed to bracket 2cos(pi/L) from below")
        if K.eval_sign_at_dyadic(self.minpoly, hi, shift) <= 0:
            raise ArithmeticError("failed to bracket 2cos(pi/L) from above")
        return _refine_interval(self.minpoly, lo, hi, shift, 32)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    @property
    def generator(self):
        """2cos(pi/L) as a field element."""
        return self._gen

    def element(self, coeffs):
        """Element from rational coefficients in the power basis."""
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise ValueError("coefficient vector longer than field degree")
        coeffs += [0] * (self.degree - len(coeffs))
        fracs = [Fraction(c) for c in coeffs]
        den = math.lcm(*[f.denominator for f in fracs]) if fracs else 1
        nums = [int(f * den) for f in fracs]
        nums, den = K.normalize(nums, den)
        return AlgReal(self, nums, den, _raw=True)

    def rational(self, value):
        """Embed a rational number."""
        f = Fraction(value)
        nums = [0] * self.degree
        nums[0] = f.numerator
        nums, den = K.normalize(nums, f.denominator)
        return AlgReal(self, nums, den, _raw=True)

    def approx_generator(self):
        return 2.0 * math.cos(math.pi / self.L)

    def __repr__(self):
        return f"FieldSpec(L={self.L}, degree={self.degree})"


@functools.lru_cache(maxsize=None)
def field_for_lcm(L):
    return FieldSpec(L)


def field_for(diagram):
    """Field housing all form values of the diagram: L = lcm of finite labels."""
    L = 2
    for i in range(diagram.rank):
        for j in range(i + 1, diagram.rank):
            m = diagram.label(i, j)
            if not math.isinf(m):
                L = math.lcm(L, int(m))
    return field_for_lcm(L)


class AlgReal:
    """An element of a FieldSpec: integer numerators over a common denominator.

    The representation is canonical (reduced modulo the minimal polynomial,
    gcd-normalized, positive denominator), so equality and hashing are
    structural and zero is the all-zero vector.
    """

    __slots__ = ("field", "nums", "den")

    def __init__(self, field, nums, den=1, _raw=False):
        self.field = field
        if _raw:
            self.nums = nums
            self.den = den
        else:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                nums = [-x for x in nums]
                den = -den
            self.nums, self.den = K.normalize(list(nums), den)

    @classmethod
    def _new(cls, field, nums, den):
        self = object.__new__(cls)
        self.field = field
        self.nums = nums
        self.den = den
        return self

    def _coerce(self, other):
        if isinstance(other, AlgReal):
            if other.field is not self.field:
                raise ValueError("operands live in different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        g = math.gcd(self.den, other.den)
        sa = other.den // g
        sb = self.den // g
        nums = [x * sa + y * sb for x, y in zip(self.nums, other.nums)]
        nums, den = K.normalize(nums, self.den * sa)
        return AlgReal._new(self.field, nums, den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        g = math.gcd(self.den, other.den)
        sa = other.den // g
        sb = self.den // g
        nums = [x * sa - y * sb for x, y in zip(self.nums, other.nums)]
        nums, den = K.normalize(nums, self.den * sa)
        return AlgReal._new(self.field, nums, den)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AlgReal._new(self.field, tuple(-x for x in self.nums), self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        nums = K.poly_mul_mod(self.nums, other.nums, self.field._mp_low)
        nums, den = K.normalize(nums, self.den * other.den)
        return AlgReal._new(self.field, nums, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        inv = _poly_inverse_mod(self.nums, self.field)
        den = math.lcm(*[f.denominator for f in inv]) if inv else 1
        nums = [int(f * den) for f in inv] + [0] * (self.field.degree - len(inv))
        nums, den = K.normalize(nums, den)
        res = AlgReal._new(self.field, nums, den)
        return res * self.den

    def is_zero(self):
        return not any(self.nums)

    def sign(self):
        """-1, 0 or +1; exact.

        Zero is decided structurally (canonical form).  Otherwise the size
        is certified by interval evaluation at an isolating interval for
        the field generator, bisected with per-call state until zero is
        excluded; termination is guaranteed because a nonzero canonical
        vector evaluates to a nonzero real.
        """
        if not any(self.nums):
            return 0
        lo, hi, shift = self.field._iso
        while True:
            s = K.interval_sign(self.nums, lo, hi, shift)
            if s:
                return s
            lo, hi, shift = _refine_interval(self.field.minpoly, lo, hi, shift, shift)

    def __eq__(self, other):
        if isinstance(other, AlgReal):
            return (
                self.field is other.field
                and self.den == other.den
                and self.nums == other.nums
            )
        if isinstance(other, (int, Fraction)):
            return self == self.field.rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nums, self.den))

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() >= 0

    def to_fractions(self):
        return tuple(Fraction(n, self.den) for n in self.nums)

    def __float__(self):
        c = self.field.approx_generator()
        acc = 0.0
        for n in reversed(self.nums):
            acc = acc * c + n
        return acc / self.den

    def __repr__(self):
        fr = self.to_fractions()
        return f"AlgReal({[str(f) for f in fr]}, L={self.field.L})"


# ---------------------------------------------------------------------------
# rational-polynomial helpers for inversion (cold path)

def _fpoly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _fpoly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    inv = Fraction(1) / b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return q, _fpoly_trim(a[:db])


def _poly_inverse_mod(nums, field):
    """Coefficients (Fractions) of the inverse of sum nums[i] c^i mod minpoly."""
    a = _fpoly_trim([Fraction(n) for n in nums])
    b = [Fraction(c) for c in field.minpoly]
    # extended Euclid: maintain t with t*a = r (mod minpoly)
    r0, r1 = b, a
    t0, t1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 0:
        q, r = _fpoly_divmod(r0, r1)
        qt = [Fraction(0)] * (len(q) + len(t1) - 1)
        for i, qi in enumerate(q):
            if qi:
                for j, tj in enumerate(t1):
                    qt[i + j] += qi * tj
        t2 = [Fraction(0)] * max(len(t0), len(qt))
        for i, v in enumerate(t0):
            t2[i] += v
        for i, v in enumerate(qt):
            t2[i] -= v
        r0, r1 = r1, r
        t0, t1 = t1, _fpoly_trim(t2)
    if len(r0) != 1:
        raise ArithmeticError("element not invertible: gcd with minimal polynomial not constant")
    g = r0[0]
    return [t / g for t in t0]


# ---------------------------------------------------------------------------
# bilinear form of a diagram

def form_value(diagram, i, j, field=None):
    """-cos(pi/m(i,j)) as an exact field element; 1 on the diagonal, -1 for m = oo."""
    if field is None:
        field = field_for(diagram)
    if i == j:
        return field.one
    m = diagram.label(i, j)
    if math.isinf(m):
        return -field.one
    k = field.L // int(m)
    c = field.generator
    acc = field.zero
    for coeff in reversed(_dickson(k)):
        acc = acc * c + coeff
    return acc * Fraction(-1, 2)


class GramMatrix:
    """Symmetric matrix of form values; entries are exact field elements."""

    __slots__ = ("field", "entries")

    def __init__(self, field, entries):
        self.field = field
        self.entries = entries

    @property
    def rank(self):
        return len(self.entries)

    def entry(self, i, j):
        return self.entries[i][j]

    def __repr__(self):
        return f"GramMatrix(rank={self.rank}, L={self.field.L})"


def gram(diagram, field=None):
    if field is None:
        field = field_for(diagram)
    n = diagram.rank
    rows = []
    for i in range(n):
        rows.append(tuple(form_value(diagram, i, j, field) for j in range(n)))
    return GramMatrix(field, tuple(rows))


class Definiteness:
    POS_DEF = "PosDef"
    POS_SEMIDEF_SINGULAR = "PosSemiDefSingular"
    OTHER = "Other"


def definiteness(g):
    """Classify by exact symmetric Gaussian elimination pivot signs.

    Positive definite iff all pivots positive; positive semidefinite and
    singular iff pivots nonnegative with at least one zero pivot whose whole
    trailing row vanishes; anything else (negative pivot, or a zero pivot
    with a nonzero trailing row) is indefinite or negative.
    """
    n = g.rank
    a = [list(row) for row in g.entries]
    saw_zero = False
    for k in range(n):
        s = a[k][k].sign()
        if s < 0:
            return Definiteness.OTHER
        if s == 0:
            if any(a[k][j].sign() != 0 for j in range(k + 1, n)):
                return Definiteness.OTHER
            saw_zero = True
            continue
        inv = a[k][k].inverse()
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f.is_zero():
                continue
            for j in range(k + 1, n):
                a[i][j] = a[i][j] - f * a[k][j]
    return Definiteness.POS_SEMIDEF_SINGULAR if saw_zero else Definiteness.POS_DEF
