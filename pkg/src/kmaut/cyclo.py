"""Exact arithmetic in cyclotomic fields Q(zeta_N) and dense linear algebra over them.

Scalars are coordinate vectors in the power basis 1, z, ..., z^(phi(N)-1)
modulo the N-th cyclotomic polynomial, stored as integer numerators over a
common denominator.  Matrices share one conductor and one denominator across
all entries, which keeps the hot kernel (kernel.matmul) free of per-entry
normalization.

Every operation is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import kernel
from .errors import (
    ConductorOverflow,
    NotAntisymmetric,
    OddDimension,
    OrderMismatch,
)

MAX_CONDUCTOR = 10**6


def _lcm(a, b):
    return a // gcd(a, b) * b


# ---------------------------------------------------------------------------
# cyclotomic polynomial contexts
# ---------------------------------------------------------------------------

def _poly_div_exact(num, den):
    """Exact division of integer polynomials (lists, lowest degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        if q:
            for j, dj in enumerate(den):
                num[k + j] -= q * dj
    assert all(c == 0 for c in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(N):
    """Coefficients of the N-th cyclotomic polynomial, lowest degree first."""
    if N == 1:
        return (-1, 1)
    num = [-1] + [0] * (N - 1) + [1]  # x^N - 1
    den = [1]
    for d in range(1, N):
        if N % d == 0:
            phi_d = cyclotomic_poly(d)
            new = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                for j, b in enumerate(phi_d):
                    new[i + j] += a * b
            den = new
    return tuple(_poly_div_exact(num, den))


class _Context:
    """Per-conductor data: degree, reduction rows, lazy power table."""

    __slots__ = ("N", "phi", "poly", "red", "_pows")

    def __init__(self, N):
        if N < 1:
            raise ConductorOverflow("conductor must be positive")
        if N > MAX_CONDUCTOR:
            raise ConductorOverflow("conductor %d exceeds cap %d" % (N, MAX_CONDUCTOR))
        self.N = N
        self.poly = cyclotomic_poly(N)
        phi = len(self.poly) - 1
        self.phi = phi
        # reduction rows for z^phi .. z^(2phi-2)
        rows = []
        cur = tuple(-c for c in self.poly[:phi])  # z^phi
        rows.append(cur)
        for _ in range(phi - 2):
            shifted = (0,) + cur[:-1]
            top = cur[-1]
            if top:
                shifted = tuple(s + top * r for s, r in zip(shifted, rows[0]))
            cur = shifted
            rows.append(cur)
        self.red = tuple(rows)
        self._pows = None

    def power(self, m):
        """Coordinate vector of z^m (m >= 0), via the lazily built table."""
        m %= self.N
        if m < self.phi:
            vec = [0] * self.phi
            vec[m] = 1
            return tuple(vec)
        if self._pows is None:
            self._pows = {}
        tab = self._pows
        if m not in tab:
            # walk up from the largest cached power (or z^(phi-1))
            best = max((k for k in tab if k <= m), default=self.phi - 1)
            if best < self.phi:
                cur = list(self.power(best))
            else:
                cur = list(tab[best])
            for k in range(best + 1, m + 1):
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    for j, r in enumerate(self.red[0]):
                        cur[j] += top * r
                if k >= self.phi:
                    tab[k] = tuple(cur)
        return tab[m]


@lru_cache(maxsize=None)
def _context(N):
    return _Context(N)


@lru_cache(maxsize=None)
def _embedding(N, M):
    """Images of the conductor-N basis powers in conductor-M coordinates."""
    assert M % N == 0
    ctx = _context(M)
    step = M // N
    return tuple(ctx.power(i * step) for i in range(_context(N).phi))


@lru_cache(maxsize=None)
def _conj_table(N):
    """Images of basis powers under z -> z^(N-1) (complex conjugation)."""
    ctx = _context(N)
    return tuple(ctx.power((N - i) % N) for i in range(ctx.phi))


def _lift(nums, N, M):
    """Map a coordinate vector from conductor N to conductor M (N | M)."""
    if N == M:
        return nums
    emb = _embedding(N, M)
    phiM = _context(M).phi
    out = [0] * phiM
    for i, c in enumerate(nums):
        if c:
            img = emb[i]
            for j in range(phiM):
                if img[j]:
                    out[j] += c * img[j]
    return tuple(out)


def _apply_table(nums, table, phi):
    out = [0] * phi
    for i, c in enumerate(nums):
        if c:
            row = table[i]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


def _normalize(nums, den):
    if den < 0:
        nums = tuple(-c for c in nums)
        den = -den
    g = den
    for c in nums:
        if c:
            g = gcd(g, c)
            if g == 1:
                return tuple(nums), den
    if g > 1:
        return tuple(c // g for c in nums), den // g
    return tuple(nums), den


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

class CycloScalar:
    """An exact element of Q(zeta_N)."""

    __slots__ = ("N", "nums", "den")

    def __init__(self, N, nums, den=1, _normalized=False):
        self.N = N
        if _normalized:
            self.nums = nums
            self.den = den
        else:
            phi = _context(N).phi
            nums = tuple(nums)
            assert len(nums) == phi, (len(nums), phi)
            self.nums, self.den = _normalize(nums, den)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rational(q, N=1):
        q = Fraction(q)
        phi = _context(N).phi
        nums = [0] * phi
        nums[0] = q.numerator
        return CycloScalar(N, tuple(nums), q.denominator)

    # -- conversions -------------------------------------------------------

    def promote(self, M):
        if M == self.N:
            return self
        if M % self.N != 0:
            raise ConductorOverflow("cannot lift conductor %d into %d" % (self.N, M))
        if M > MAX_CONDUCTOR:
            raise ConductorOverflow("conductor %d exceeds cap" % M)
        return CycloScalar(M, _lift(self.nums, self.N, M), self.den)

    def restrict(self, M):
        """Express the value at conductor M (M | N); error if not possible."""
        if M == self.N:
            return self
        if self.N % M != 0:
            raise ConductorOverflow("conductor %d does not divide %d" % (M, self.N))
        emb = _embedding(M, self.N)
        phiN = _context(self.N).phi
        phiM = _context(M).phi
        cols = [list(v) for v in emb]
        target = [Fraction(c, self.den) for c in self.nums]
        sol = _solve_rational([[Fraction(cols[j][i]) for j in range(phiM)]
                               for i in range(phiN)], target)
        if sol is None:
            raise ConductorOverflow("value does not lie in Q(zeta_%d)" % M)
        den = 1
        for s in sol:
            den = _lcm(den, s.denominator)
        return CycloScalar(M, tuple(int(s * den) for s in sol), den)

    def min_conductor(self):
        """Smallest divisor conductor that contains this value."""
        for d in sorted(_divisors(self.N)):
            try:
                return self.restrict(d)
            except ConductorOverflow:
                continue
        return self

    def as_fraction(self):
        if any(self.nums[1:]):
            raise ValueError("not a rational number")
        return Fraction(self.nums[0], self.den)

    def is_rational(self):
        return not any(self.nums[1:])

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not any(self.nums)

    def __bool__(self):
        return any(self.nums)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloScalar.from_rational(other)
        if not isinstance(other, CycloScalar):
            return NotImplemented
        a, b = _common(self, other)
        return a.nums == b.nums and a.den == b.den

    def __hash__(self):
        c = self.min_conductor()
        return hash((c.N, c.nums, c.den))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = _common(self, other)
        den = _lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        nums = tuple(x * fa + y * fb for x, y in zip(a.nums, b.nums))
        return CycloScalar(a.N, nums, den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return CycloScalar(self.N, tuple(-c for c in self.nums), self.den,
                           _normalized=True)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = _common(self, other)
        ctx = _context(a.N)
        nums = kernel.conv_reduce(a.nums, b.nums, ctx.red, ctx.phi)
        return CycloScalar(a.N, nums, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloScalar.from_rational(1, self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        ctx = _context(self.N)
        mod = [Fraction(c) for c in ctx.poly]
        a = [Fraction(c, self.den) for c in self.nums]
        # invariants: r0 = s0*a mod Phi, r1 = s1*a mod Phi
        r0, s0 = mod, [Fraction(0)]
        r1, s1 = a, [Fraction(1)]
        while _deg(r1) > 0:
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, s0, r1, s1 = r1, s1, r, s
        if _deg(r1) < 0:
            raise ZeroDivisionError("zero divisor in cyclotomic ring")
        c = r1[0]
        inv = [x / c for x in s1]
        inv += [Fraction(0)] * (ctx.phi - len(inv))
        den = 1
        for x in inv:
            den = _lcm(den, x.denominator)
        return CycloScalar(self.N, tuple(int(x * den) for x in inv[:ctx.phi]), den)

    def conj(self):
        """Complex conjugation: the field automorphism z -> z^(-1)."""
        table = _conj_table(self.N)
        return CycloScalar(self.N, _apply_table(self.nums, table, _context(self.N).phi),
                           self.den)

    # -- io ------------------------------------------------------------------

    def to_json(self):
        return {"conductor": self.N,
                "coeffs": [str(Fraction(c, self.den)) for c in self.nums]}

    @staticmethod
    def from_json(obj):
        N = int(obj["conductor"])
        coeffs = [Fraction(s) for s in obj["coeffs"]]
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        return CycloScalar(N, tuple(int(c * den) for c in coeffs), den)

    def __repr__(self):
        if self.is_rational():
            return "CycloScalar(%s)" % self.as_fraction()
        terms = []
        for i, c in enumerate(self.nums):
            if c:
                q = Fraction(c, self.den)
                terms.append("%s*z%d^%d" % (q, self.N, i) if i else str(q))
        return "CycloScalar(%s)" % " + ".join(terms)


def _coerce(x):
    if isinstance(x, CycloScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CycloScalar.from_rational(x)
    return None


def _common(a, b):
    if a.N == b.N:
        return a, b
    M = _lcm(a.N, b.N)
    if M > MAX_CONDUCTOR:
        raise ConductorOverflow("conductor %d exceeds cap" % M)
    return a.promote(M), b.promote(M)


def _divisors(N):
    out = []
    d = 1
    while d * d <= N:
        if N % d == 0:
            out.append(d)
            if d != N // d:
                out.append(N // d)
        d += 1
    return out


# rational polynomial helpers (used only in scalar inversion / restriction)

def _deg(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = list(a)
    db = _deg(b)
    q = [Fraction(0)] * max(len(a) - db, 1)
    lead = b[db]
    for k in range(_deg(a) - db, -1, -1):
        c = a[k + db] / lead
        if c:
            q[k] = c
            for j in range(db + 1):
                a[k + j] -= c * b[j]
    return q, a


def _solve_rational(A, b):
    """Solve A x = b over Q (A as list of rows); None if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    M = [list(A[i]) + [b[i]] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = M[i][n]
    return x


def root_of_unity(N, k):
    """zeta_N^k as an exact scalar of conductor N."""
    ctx = _context(N)
    return CycloScalar(N, ctx.power(k % N), 1)


def root_index(value, N):
    """Return k with value == zeta_N^k, or None."""
    for k in range(N):
        if value == root_of_unity(N, k):
            return k
    return None


ZERO = CycloScalar.from_rational(0)
ONE = CycloScalar.from_rational(1)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class CycloMatrix:
    """A square matrix over Q(zeta_N); all entries share one denominator."""

    __slots__ = ("n", "N", "den", "rows")

    def __init__(self, n, N, den, rows, _normalized=False):
        self.n = n
        self.N = N
        if _normalized:
            self.den = den
            self.rows = rows
            return
        g = kernel.rows_gcd(rows, den)
        if den < 0:
            g = -g
        if g != 1:
            rows = tuple(tuple(tuple(c // g for c in vec) for vec in row)
                         for row in rows)
            den //= g
        self.den = den
        self.rows = tuple(tuple(tuple(vec) for vec in row) for row in rows)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_scalars(entries):
        """Build from a nested list of CycloScalar / Fraction / int."""
        n = len(entries)
        scal = [[_coerce(x) for x in row] for row in entries]
        N = 1
        for row in scal:
            assert len(row) == n
            for x in row:
                N = _lcm(N, x.N)
        if N > MAX_CONDUCTOR:
            raise ConductorOverflow("conductor %d exceeds cap" % N)
        den = 1
        for row in scal:
            for x in row:
                den = _lcm(den, x.den)
        rows = []
        for row in scal:
            out = []
            for x in row:
                x = x.promote(N)
                f = den // x.den
                out.append(tuple(c * f for c in x.nums))
            rows.append(tuple(out))
        return CycloMatrix(n, N, den, tuple(rows))

    @staticmethod
    def identity(n, N=1):
        phi = _context(N).phi
        zero = (0,) * phi
        one = (1,) + (0,) * (phi - 1)
        rows = tuple(tuple(one if i == j else zero for j in range(n))
                     for i in range(n))
        return CycloMatrix(n, N, 1, rows, _normalized=True)

    @staticmethod
    def zeros(n, N=1):
        phi = _context(N).phi
        zero = (0,) * phi
        rows = tuple(tuple(zero for _ in range(n)) for _ in range(n))
        return CycloMatrix(n, N, 1, rows, _normalized=True)

    @staticmethod
    def diag(values, N=None):
        scal = [_coerce(v) for v in values]
        M = 1
        for s in scal:
            M = _lcm(M, s.N)
        if N is not None:
            M = _lcm(M, N)
        n = len(scal)
        out = CycloMatrix.zeros(n, M)
        entries = [[out.entry(i, j) for j in range(n)] for i in range(n)]
        for i, s in enumerate(scal):
            entries[i][i] = s
        return CycloMatrix.from_scalars(entries)

    # -- access ------------------------------------------------------------

    def entry(self, i, j):
        return CycloScalar(self.N, self.rows[i][j], self.den)

    def scalars(self):
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def promote(self, M):
        if M == self.N:
            return self
        if M % self.N or M > MAX_CONDUCTOR:
            raise ConductorOverflow("cannot lift conductor %d into %d" % (self.N, M))
        rows = tuple(tuple(_lift(vec, self.N, M) for vec in row) for row in self.rows)
        return CycloMatrix(self.n, M, self.den, rows, _normalized=True)

    def min_conductor(self):
        entries = [[self.entry(i, j).min_conductor() for j in range(self.n)]
                   for i in range(self.n)]
        return CycloMatrix.from_scalars(entries)

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return all(not any(vec) for row in self.rows for vec in row)

    def is_identity(self):
        return self == CycloMatrix.identity(self.n)

    def is_scalar(self):
        """Return the scalar c if self == c*I, else None."""
        c = self.entry(0, 0)
        if self == CycloMatrix.identity(self.n) * c:
            return c
        return None

    def __eq__(self, other):
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        if self.n != other.n:
            return False
        M = _lcm(self.N, other.N)
        a, b = self.promote(M), other.promote(M)
        return a.den == b.den and a.rows == b.rows

    def __hash__(self):
        m = self.min_conductor()
        return hash((m.n, m.N, m.den, m.rows))

    # -- arithmetic ----------------------------------------------------------

    def _pair(self, other):
        M = _lcm(self.N, other.N)
        if M > MAX_CONDUCTOR:
            raise ConductorOverflow("conductor %d exceeds cap" % M)
        return self.promote(M), other.promote(M)

    def __mul__(self, other):
        if isinstance(other, CycloMatrix):
            assert self.n == other.n
            a, b = self._pair(other)
            ctx = _context(a.N)
            rows = kernel.matmul(a.rows, b.rows, ctx.red, ctx.phi, a.n)
            return CycloMatrix(a.n, a.N, a.den * b.den, tuple(rows))
        s = _coerce(other)
        if s is None:
            return NotImplemented
        a, b = _common(CycloScalar(self.N, (1,) + (0,) * (_context(self.N).phi - 1), 1), s)
        mat = self.promote(a.N)
        ctx = _context(a.N)
        rows = tuple(tuple(kernel.conv_reduce(vec, b.nums, ctx.red, ctx.phi)
                           for vec in row) for row in mat.rows)
        return CycloMatrix(mat.n, mat.N, mat.den * b.den, rows)

    def __rmul__(self, other):
        s = _coerce(other)
        if s is None:
            return NotImplemented
        return self * s

    def __add__(self, other):
        assert isinstance(other, CycloMatrix) and self.n == other.n
        a, b = self._pair(other)
        den = _lcm(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        rows = tuple(tuple(tuple(x * fa + y * fb for x, y in zip(va, vb))
                           for va, vb in zip(ra, rb))
                     for ra, rb in zip(a.rows, b.rows))
        return CycloMatrix(a.n, a.N, den, rows)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        rows = tuple(tuple(tuple(-c for c in vec) for vec in row) for row in self.rows)
        return CycloMatrix(self.n, self.N, self.den, rows, _normalized=True)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloMatrix.identity(self.n, self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def transpose(self):
        rows = tuple(tuple(self.rows[j][i] for j in range(self.n))
                     for i in range(self.n))
        return CycloMatrix(self.n, self.N, self.den, rows, _normalized=True)

    def conj(self):
        table = _conj_table(self.N)
        phi = _context(self.N).phi
        rows = tuple(tuple(_apply_table(vec, table, phi) for vec in row)
                     for row in self.rows)
        return CycloMatrix(self.n, self.N, self.den, rows)

    def conj_transpose(self):
        return self.conj().transpose()

    def trace(self):
        t = CycloScalar.from_rational(0, self.N)
        for i in range(self.n):
            t = t + self.entry(i, i)
        return t

    def det(self):
        rows = self.scalars()
        n = self.n
        det = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if rows[i][c]), None)
            if p is None:
                return CycloScalar.from_rational(0, self.N)
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            pivot = rows[c][c]
            det = det * pivot
            inv = pivot.inverse()
            for i in range(c + 1, n):
                f = rows[i][c] * inv
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
        return det

    def inverse(self):
        n = self.n
        rows = [r + [ONE if i == j else ZERO for j in range(n)]
                for i, r in enumerate(self.scalars())]
        r = 0
        for c in range(n):
            p = next((i for i in range(r, n) if rows[i][c]), None)
            if p is None:
                raise ZeroDivisionError("singular matrix")
            rows[r], rows[p] = rows[p], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [x * inv for x in rows[r]]
            for i in range(n):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            r += 1
        return CycloMatrix.from_scalars([row[n:] for row in rows])

    def matvec(self, vec):
        """Apply to a coordinate vector of CycloScalar; returns a list."""
        out = []
        for i in range(self.n):
            acc = CycloScalar.from_rational(0)
            for j in range(self.n):
                if any(self.rows[i][j]) and vec[j]:
                    acc = acc + self.entry(i, j) * vec[j]
            out.append(acc)
        return out

    # -- io ------------------------------------------------------------------

    def to_json(self):
        return [[self.entry(i, j).to_json() for j in range(self.n)]
                for i in range(self.n)]

    @staticmethod
    def from_json(obj):
        entries = [[CycloScalar.from_json(x) for x in row] for row in obj]
        return CycloMatrix.from_scalars(entries)

    def __repr__(self):
        return "CycloMatrix(%d, conductor=%d)" % (self.n, self.N)


# ---------------------------------------------------------------------------
# finite-order eigenstructure and pfaffians
# ---------------------------------------------------------------------------

def finite_order_eigenprojectors(M, N):
    """Eigenprojector resolution of a matrix with M^N = I.

    Returns [(eigenvalue, projector)] for the nonzero projectors
    P_k = (1/N) * sum_j zeta_N^(-kj) M^j; they are idempotent, pairwise
    orthogonal, sum to the identity, and satisfy M P_k = zeta_N^k P_k.
    """
    powers = [CycloMatrix.identity(M.n, M.N)]
    for _ in range(N - 1):
        powers.append(powers[-1] * M)
    if not (powers[-1] * M).is_identity():
        raise OrderMismatch("matrix does not satisfy M^%d = I" % N)
    out = []
    inv_n = Fraction(1, N)
    for k in range(N):
        acc = powers[0]
        for j in range(1, N):
            acc = acc + powers[j] * root_of_unity(N, (-k * j) % N)
        P = acc * inv_n
        if not P.is_zero():
            out.append((root_of_unity(N, k), P))
    return out


def pfaffian(M):
    """Pfaffian of an antisymmetric matrix of even dimension, exactly."""
    n = M.n
    if n % 2:
        raise OddDimension("pfaffian needs even dimension")
    if not (M.transpose() + M).is_zero():
        raise NotAntisymmetric("matrix is not antisymmetric")
    entries = M.scalars()
    cache = {}

    def rec(idx):
        if not idx:
            return ONE
        if idx in cache:
            return cache[idx]
        i = idx[0]
        rest = idx[1:]
        total = CycloScalar.from_rational(0)
        for pos, j in enumerate(rest):
            a = entries[i][j]
            if a:
                sub = tuple(x for x in rest if x != j)
                sign = 1 if pos % 2 == 0 else -1
                term = a * rec(sub)
                total = total + (term if sign > 0 else -term)
        cache[idx] = total
        return total

    return rec(tuple(range(n)))
