"""Matrix realizations of the classical simple Lie algebras.

Classical families are realized inside their defining complex representation:
sl(n+1,C), so(m,C) as antisymmetric matrices, sp(2n,C); the compact mode tags
the same complexified model together with the conjugation fixing the compact
real form.  Exceptional families carry no matrix model, only a static record.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import linalg
from .cyclo import CycloMatrix, CycloScalar, root_of_unity
from .errors import (
    AlgebraMismatch,
    MembershipError,
    OrderMismatch,
    UnsupportedExceptional,
    UnsupportedParam,
)

CLASSICAL = ("a", "b", "c", "d")
EXCEPTIONAL = ("e6", "e7", "e8", "f4", "g2")

# family -> (dimension, rank, order of the outer automorphism group,
#            number of involution classes in the standard list)
_EXCEPTIONAL_DATA = {
    "e6": (78, 6, 2, 4),
    "e7": (133, 7, 1, 3),
    "e8": (248, 8, 1, 2),
    "f4": (52, 4, 1, 2),
    "g2": (14, 2, 1, 1),
}

# outer involution labels per exceptional family (indices p with rho_p outer)
_EXCEPTIONAL_OUTER = {"e6": (1, 4), "e7": (), "e8": (), "f4": (), "g2": ()}


def _unit(i, j, size, one=1):
    rows = [[0] * size for _ in range(size)]
    rows[i][j] = one
    return CycloMatrix.from_scalars(rows)


@lru_cache(maxsize=None)
def tau_matrix(p, size):
    """diag(-1 x p, 1 x (size-p))."""
    return CycloMatrix.diag([-1] * p + [1] * (size - p))


@lru_cache(maxsize=None)
def j_matrix(half):
    """[[0, E], [-E, 0]] of size 2*half."""
    rows = [[0] * (2 * half) for _ in range(2 * half)]
    for i in range(half):
        rows[i][half + i] = 1
        rows[half + i][i] = -1
    return CycloMatrix.from_scalars(rows)


class SimpleAlgebra:
    """Descriptor plus (for classical families) a defining matrix model."""

    def __init__(self, family, param, mode="compact"):
        if mode not in ("compact", "complex"):
            raise UnsupportedParam("mode must be compact or complex")
        self.family = family
        self.param = param
        self.mode = mode
        if family in EXCEPTIONAL:
            self.dim, self.rank, self.out_order, self.n_involutions = \
                _EXCEPTIONAL_DATA[family]
            self.size = None
            return
        if family not in CLASSICAL:
            raise UnsupportedParam("unknown family %r" % (family,))
        n = param
        lo = {"a": 1, "b": 2, "c": 3, "d": 4}[family]
        if not isinstance(n, int) or n < lo:
            raise UnsupportedParam("family %s needs integer rank >= %d" % (family, lo))
        self.rank = n
        if family == "a":
            self.size = n + 1
            self.dim = (n + 1) ** 2 - 1
        elif family == "b":
            self.size = 2 * n + 1
            self.dim = self.size * (self.size - 1) // 2
        elif family == "c":
            self.size = 2 * n
            self.dim = n * (2 * n + 1)
        else:
            self.size = 2 * n
            self.dim = self.size * (self.size - 1) // 2
        self.out_order = {"a": 2 if n >= 2 else 1,
                          "b": 1,
                          "c": 1,
                          "d": 6 if n == 4 else 2}[family]

    # -- identity ------------------------------------------------------------

    @property
    def is_exceptional(self):
        return self.family in EXCEPTIONAL

    def _key(self):
        return (self.family, self.param, self.mode)

    def __eq__(self, other):
        return isinstance(other, SimpleAlgebra) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.is_exceptional:
            return "SimpleAlgebra(%s, %s)" % (self.family, self.mode)
        return "SimpleAlgebra(%s%d, %s)" % (self.family, self.param, self.mode)

    def label(self):
        return self.family if self.is_exceptional else "%s%d" % (self.family, self.param)

    def to_json(self):
        return {"family": self.family, "n": self.param, "mode": self.mode}

    @staticmethod
    def from_json(obj):
        return SimpleAlgebra(obj["family"], obj.get("n"), obj.get("mode", "compact"))

    # -- matrix model ----------------------------------------------------------

    def _need_matrix(self):
        if self.is_exceptional:
            raise UnsupportedExceptional(
                "%s has no matrix model; only static data" % self.family)

    @property
    def killing_scale(self):
        """c with killing(x, y) = c * tr(xy) in the defining representation."""
        self._need_matrix()
        if self.family == "a":
            return Fraction(2 * (self.param + 1))
        if self.family in ("b", "d"):
            return Fraction(self.size - 2)
        return Fraction(2 * self.param + 2)

    @lru_cache(maxsize=None)
    def basis(self):
        """Defining-representation basis, closed under bracket."""
        self._need_matrix()
        m = self.size
        out = []
        if self.family == "a":
            for i in range(m):
                for j in range(m):
                    if i != j:
                        out.append(_unit(i, j, m))
            for k in range(m - 1):
                out.append(_unit(k, k, m) - _unit(k + 1, k + 1, m))
        elif self.family in ("b", "d"):
            for i in range(m):
                for j in range(i + 1, m):
                    out.append(_unit(i, j, m) - _unit(j, i, m))
        else:
            n = self.param
            for i in range(n):
                for j in range(n):
                    out.append(_unit(i, j, m) - _unit(n + j, n + i, m))
            for i in range(n):
                for j in range(i, n):
                    if i == j:
                        out.append(_unit(i, n + i, m))
                    else:
                        out.append(_unit(i, n + j, m) + _unit(j, n + i, m))
            for i in range(n):
                for j in range(i, n):
                    if i == j:
                        out.append(_unit(n + i, i, m))
                    else:
                        out.append(_unit(n + i, j, m) + _unit(n + j, i, m))
        assert len(out) == self.dim
        return tuple(out)

    def contains_matrix(self, M):
        """Exact membership in the complexified algebra."""
        self._need_matrix()
        if M.n != self.size:
            return False
        if self.family == "a":
            return M.trace().is_zero()
        if self.family in ("b", "d"):
            return (M.transpose() + M).is_zero()
        J = j_matrix(self.param)
        return (M.transpose() * J + J * M).is_zero()

    def coords(self, M):
        """Coordinates of M w.r.t. basis(); closed form, no linear solve."""
        self._need_matrix()
        out = []
        m = self.size
        if self.family == "a":
            for i in range(m):
                for j in range(m):
                    if i != j:
                        out.append(M.entry(i, j))
            acc = CycloScalar.from_rational(0)
            for k in range(m - 1):
                acc = acc + M.entry(k, k)
                out.append(acc)
        elif self.family in ("b", "d"):
            for i in range(m):
                for j in range(i + 1, m):
                    out.append(M.entry(i, j))
        else:
            n = self.param
            for i in range(n):
                for j in range(n):
                    out.append(M.entry(i, j))
            for i in range(n):
                for j in range(i, n):
                    out.append(M.entry(i, n + j))
            for i in range(n):
                for j in range(i, n):
                    out.append(M.entry(n + i, j))
        return out

    def from_coords(self, coords):
        self._need_matrix()
        acc = CycloMatrix.zeros(self.size)
        for c, b in zip(coords, self.basis()):
            if c:
                acc = acc + b * c
        return acc

    # -- operations -------------------------------------------------------------

    def bracket_matrix(self, X, Y):
        return X * Y - Y * X

    def killing_matrix(self, X, Y):
        return (X * Y).trace() * self.killing_scale

    def omega_matrix(self, X):
        """Conjugation fixing the compact form: X -> -conj(X)^T."""
        return -X.conj_transpose()

    def element(self, matrix, validate=True):
        return AlgebraElement(self, matrix, validate=validate)

    def basis_elements(self):
        return [AlgebraElement(self, b, validate=False) for b in self.basis()]

    # -- distinguished semisimple elements ----------------------------------------

    def torus_element(self, rates):
        """Standard-torus element with rational eigenvalue data.

        a/c families: i*diag(...) built from the rates (a: rates of length
        size summing to 0; c: length n, extended to (r, -r)); b/d: rotation
        rates per coordinate plane (i, i+1) pairing, length floor(size/2).
        """
        self._need_matrix()
        rates = [Fraction(r) for r in rates]
        i = root_of_unity(4, 1)
        if self.family == "a":
            assert len(rates) == self.size and sum(rates) == 0
            M = CycloMatrix.diag([i * r for r in rates])
            eig = sorted(set(rates))
            return SemisimpleElement(self, M, eig)
        if self.family == "c":
            assert len(rates) == self.param
            full = rates + [-r for r in rates]
            M = CycloMatrix.diag([i * r for r in full])
            eig = sorted(set(full))
            return SemisimpleElement(self, M, eig)
        half = self.size // 2
        assert len(rates) == half
        rows = [[Fraction(0)] * self.size for _ in range(self.size)]
        for k, r in enumerate(rates):
            rows[2 * k][2 * k + 1] = r
            rows[2 * k + 1][2 * k] = -r
        M = CycloMatrix.from_scalars(rows)
        eig = set()
        for r in rates:
            eig.update((r, -r))
        if self.size % 2:
            eig.add(Fraction(0))
        return SemisimpleElement(self, M, sorted(eig))

    def plane_rotation(self, i, j, rate=Fraction(1)):
        """Rotation generator in the (i, j) coordinate plane; semisimple."""
        self._need_matrix()
        rate = Fraction(rate)
        m = self.size
        M = (_unit(i, j, m) - _unit(j, i, m)) * rate
        if self.family == "c":
            n = self.param
            M = M + (_unit(n + i, n + j, m) - _unit(n + j, n + i, m)) * rate
        eig = sorted({rate, -rate} | ({Fraction(0)} if m > 2 else set()))
        return SemisimpleElement(self, M, eig)


@lru_cache(maxsize=None)
def make_algebra(family, param=None, mode="compact"):
    """Construct (and cache) an algebra descriptor."""
    return SimpleAlgebra(family, param, mode)


class AlgebraElement:
    """An element of the (complexified) algebra in its defining representation."""

    __slots__ = ("algebra", "matrix")

    def __init__(self, algebra, matrix, validate=True):
        if validate and not algebra.contains_matrix(matrix):
            raise MembershipError("matrix is not in %r" % algebra)
        self.algebra = algebra
        self.matrix = matrix

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.algebra == other.algebra and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.algebra, self.matrix))

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, self.matrix + other.matrix, validate=False)

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, self.matrix - other.matrix, validate=False)

    def __neg__(self):
        return AlgebraElement(self.algebra, -self.matrix, validate=False)

    def __mul__(self, scalar):
        return AlgebraElement(self.algebra, self.matrix * scalar, validate=False)

    __rmul__ = __mul__

    def is_zero(self):
        return self.matrix.is_zero()

    def _check(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra != self.algebra:
            raise AlgebraMismatch("operands live in different algebras")

    def __repr__(self):
        return "AlgebraElement(%r)" % (self.algebra,)


class SemisimpleElement(AlgebraElement):
    """Element whose defining matrix is i * (rational diagonalizable).

    eigenrates lists the distinct rational r with eigenvalue i*r; the list is
    validated exactly via the product of (X - i*r) over all rates.
    """

    __slots__ = ("eigenrates", "_projs")

    def __init__(self, algebra, matrix, eigenrates, validate=True):
        super().__init__(algebra, matrix, validate=validate)
        self.eigenrates = tuple(Fraction(r) for r in eigenrates)
        self._projs = None
        if validate:
            i = root_of_unity(4, 1)
            acc = CycloMatrix.identity(matrix.n)
            for r in self.eigenrates:
                acc = acc * (matrix - CycloMatrix.identity(matrix.n) * (i * r))
            if not acc.is_zero():
                raise OrderMismatch("stated eigenvalue rates are wrong")

    def projectors(self):
        """[(rate, projector onto the i*rate eigenspace)], nonzero only."""
        if self._projs is None:
            i = root_of_unity(4, 1)
            E = CycloMatrix.identity(self.matrix.n)
            out = []
            for a in self.eigenrates:
                P = E
                for b in self.eigenrates:
                    if b != a:
                        P = P * (self.matrix - E * (i * b)) * (i * (a - b)).inverse()
                if not P.is_zero():
                    out.append((a, P))
            self._projs = tuple(out)
        return self._projs

    def exp_2pi(self, t=Fraction(1)):
        """The group element e^(2*pi*t*X), exact for rational t."""
        t = Fraction(t)
        acc = CycloMatrix.zeros(self.matrix.n)
        for rate, P in self.projectors():
            phase = t * rate
            acc = acc + P * root_of_unity(phase.denominator,
                                          phase.numerator % phase.denominator)
        return acc

    def scaled(self, c):
        c = Fraction(c)
        if c == 0:
            return zero_semisimple(self.algebra)
        return SemisimpleElement(self.algebra, self.matrix * c,
                                 sorted({c * r for r in self.eigenrates}),
                                 validate=False)


def zero_semisimple(algebra):
    return SemisimpleElement(algebra, CycloMatrix.zeros(algebra.size),
                             [Fraction(0)], validate=False)


def _char_poly(M):
    """Characteristic polynomial coefficients (monic, highest first) via the
    trace recursion; exact."""
    n = M.n
    one = CycloScalar.from_rational(1)
    coeffs = [one]
    A = M
    traces = []
    P = M
    for k in range(1, n + 1):
        traces.append(P.trace())
        if k < n:
            P = P * M
    for k in range(1, n + 1):
        s = CycloScalar.from_rational(0)
        for i in range(1, k + 1):
            s = s + traces[i - 1] * coeffs[k - i]
        coeffs.append(s * Fraction(-1, k))
    return coeffs


def semisimple_rates(M):
    """Distinct rationals r with spectrum(M) = {i*r}; exact, or raises.

    Handles the two shapes that occur here: all-rational matrices (rotation
    style, spectrum in i*Q symmetric) and i*(rational) matrices.
    """
    i = root_of_unity(4, 1)
    if M.is_zero():
        return (Fraction(0),)
    rational = all(M.entry(r, c).is_rational()
                   for r in range(M.n) for c in range(M.n))
    if not rational:
        Mr = M * (-i)
        if all(Mr.entry(r, c).is_rational()
               for r in range(M.n) for c in range(M.n)):
            coeffs = [c.as_fraction() for c in _char_poly(Mr)]
            roots = _rational_roots(coeffs)
            return tuple(sorted(roots))
        raise OrderMismatch("matrix is not i * (rational diagonalizable)")
    coeffs = [c.as_fraction() for c in _char_poly(M)]
    # real antisymmetric-type: p(x) = prod (x^2 + r^2) * x^z
    n = len(coeffs) - 1
    z = 0
    while z < n and coeffs[n - z] == 0:
        z += 1
    body = coeffs[:n - z + 1]
    if (len(body) - 1) % 2:
        raise OrderMismatch("odd nonzero spectrum for a real matrix")
    even = body[::2]
    if any(c != 0 for c in body[1::2]):
        raise OrderMismatch("real matrix spectrum is not purely imaginary")
    uroots = _rational_roots(even)  # roots u = x^2 = -r^2
    rates = set()
    if z:
        rates.add(Fraction(0))
    for u in uroots:
        r2 = -u
        r = _sqrt_fraction(r2)
        if r is None:
            raise OrderMismatch("irrational eigenvalue rate")
        rates.update((r, -r))
    return tuple(sorted(rates))


def _sqrt_fraction(q):
    from math import isqrt
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def _rational_roots(coeffs):
    """All rational roots (with multiplicity collapsed) of a polynomial given
    by coefficients highest-first; every root is required to be rational."""
    work = [Fraction(c) for c in coeffs]
    roots = set()
    deg = len(work) - 1
    while deg > 0:
        den = 1
        for c in work:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in work]
        lead, const = ints[0], ints[-1]
        if const == 0:
            roots.add(Fraction(0))
            work = work[:-1]
            deg -= 1
            continue
        found = None
        for p in _divisors_signed(abs(const)):
            for q in _divisors_signed(abs(lead)):
                if q < 0:
                    continue
                cand = Fraction(p, q)
                val = Fraction(0)
                for c in work:
                    val = val * cand + c
                if val == 0:
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            raise OrderMismatch("polynomial has an irrational root")
        roots.add(found)
        # synthetic division
        new = [work[0]]
        for c in work[1:-1]:
            new.append(c + new[-1] * found)
        work = new
        deg -= 1
    return roots


def _divisors_signed(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.extend((d, -d, n // d, -(n // d)))
        d += 1
    return out


def combine_semisimple(parts):
    """Sum of commuting semisimple elements, with merged eigenvalue data.

    The candidate eigenrates are all sums of the parts' rates; wrong
    candidates are harmless (their projectors vanish) and the stated list is
    validated exactly.
    """
    assert parts
    algebra = parts[0].algebra
    acc = CycloMatrix.zeros(algebra.size)
    cands = {Fraction(0)}
    first = True
    for p in parts:
        for q in parts:
            if not (p.matrix * q.matrix - q.matrix * p.matrix).is_zero():
                raise OrderMismatch("semisimple parts do not commute")
        acc = acc + p.matrix
        if first:
            cands = set(p.eigenrates)
            first = False
        else:
            cands = {a + b for a in cands for b in p.eigenrates}
    sums = sorted(cands)
    elt = SemisimpleElement(algebra, acc, sums, validate=True)
    # drop rates whose projector vanishes
    live = [r for r, _ in elt.projectors()]
    return SemisimpleElement(algebra, acc, live, validate=False)


# ---------------------------------------------------------------------------
# module-level operation surface
# ---------------------------------------------------------------------------

def bracket(x, y):
    x._check(y)
    return AlgebraElement(x.algebra, x.algebra.bracket_matrix(x.matrix, y.matrix),
                          validate=False)


def killing_form(x, y):
    x._check(y)
    return x.algebra.killing_matrix(x.matrix, y.matrix)


def compact_conjugation(algebra):
    """The conjugate-linear involution fixing the compact form."""
    algebra._need_matrix()

    def omega(x):
        return AlgebraElement(algebra, algebra.omega_matrix(x.matrix), validate=False)

    return omega


def sigma_eigenspace(algebra, sigma, l, n):
    """Exact basis of the zeta_l^n eigenspace of sigma on the complexified algebra.

    sigma is any object with apply_matrix(); its l-th power must be the
    identity on the algebra (checked on the basis).
    """
    bases = _eigenspace_bases(algebra, sigma, l)
    return [AlgebraElement(algebra, M, validate=False) for M in bases[n % l]]


def _eigenspace_bases(algebra, sigma, l):
    key = (algebra, getattr(sigma, "cache_key", lambda: id(sigma))(), l)
    hit = _EIG_CACHE.get(key)
    if hit is not None:
        return hit
    basis = algebra.basis()
    # check sigma^l = id on the basis while collecting images
    imgs = []
    for b in basis:
        cur = b
        imgs_b = [cur]
        for _ in range(l):
            cur = sigma.apply_matrix(cur)
            imgs_b.append(cur)
        if cur != b:
            raise OrderMismatch("sigma^%d is not the identity" % l)
        imgs.append(imgs_b)
    out = {}
    for n in range(l):
        rows = []
        for j, b in enumerate(basis):
            # (1/l) sum_j zeta^(-n j) sigma^j b, as a coordinate row
            acc = CycloMatrix.zeros(algebra.size)
            for jj in range(l):
                acc = acc + imgs[j][jj] * root_of_unity(l, (-n * jj) % l)
            acc = acc * Fraction(1, l)
            if not acc.is_zero():
                rows.append(algebra.coords(acc))
        red = linalg.row_space_basis(rows)
        out[n] = tuple(algebra.from_coords(r) for r in red)
    _EIG_CACHE[key] = out
    return out


_EIG_CACHE = {}
