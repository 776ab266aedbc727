"""Component groups of involution centralizers: representative rows and the
discrete signatures that decide which component a commuting automorphism
lies in.

Signatures are frame-free: they are built from the central scalar of the
group commutator of the two matrix parts, from determinants of eigenblock
restrictions, and from the outer word; all of these are invariant under
simultaneous conjugation, projective rescaling and choice of representative.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import tau_matrix, j_matrix
from .autg import (
    Automorphism,
    ID_PERM,
    InvLabel,
    _d4_frame,
    _pcomp,
    _porder,
    _scalar_ratio,
    _theta_power_of,
    family_labels,
    identity_automorphism,
    involution_int_class,
    label_out_word,
    mu_automorphism,
    standard_involution,
    standard_list,
    triality_automorphism,
)
from .cyclo import CycloMatrix, CycloScalar
from .errors import (
    InvalidLabel,
    NonCommuting,
    NoSignatureRule,
    Unclassifiable,
)


class ComponentClass:
    """Component of the centralizer of an involution: a representative label
    together with its outer order."""

    __slots__ = ("rho", "rep", "k")

    def __init__(self, rho, rep, k):
        self.rho = rho
        self.rep = rep
        self.k = k

    def __eq__(self, other):
        return (isinstance(other, ComponentClass)
                and (self.rho, self.rep, self.k) == (other.rho, other.rep, other.k))

    def __hash__(self):
        return hash((self.rho, self.rep, self.k))

    def __repr__(self):
        return "ComponentClass(%s | %s, k=%d)" % (self.rho, self.rep, self.k)


class Pi0Entry:
    __slots__ = ("rep", "k", "builder", "extra_sigs", "_sig_cache")

    def __init__(self, rep, k, builder=None, extra_sigs=()):
        self.rep = rep
        self.k = k
        self.builder = builder
        self.extra_sigs = tuple(extra_sigs)
        self._sig_cache = None


class Pi0Row:
    __slots__ = ("algebra", "rho_label", "frame_builder", "entries", "_frame")

    def __init__(self, algebra, rho_label, frame_builder, entries):
        self.algebra = algebra
        self.rho_label = rho_label
        self.frame_builder = frame_builder
        self.entries = entries
        self._frame = None

    def frame(self):
        if self._frame is None and self.frame_builder is not None:
            self._frame = self.frame_builder()
        return self._frame

    def entry_signatures(self, entry):
        if entry._sig_cache is None:
            sigs = set(entry.extra_sigs)
            if entry.builder is not None and self.frame() is not None:
                sig = raw_signature(self.frame(), entry.builder())
                if sig is not None:
                    sigs.add(sig)
            entry._sig_cache = sigs
        return entry._sig_cache


_ROW_CACHE = {}


def pi0_row(algebra, rho_label):
    key = (algebra, rho_label)
    if key not in _ROW_CACHE:
        _ROW_CACHE[key] = _build_row(algebra, rho_label)
    return _ROW_CACHE[key]


def pi0_table(algebra, rho_label):
    """Representatives of the centralizer components of the involution class:
    list of (label, k, representative Automorphism or None)."""
    if isinstance(rho_label, str):
        from .autg import parse_label
        rho_label = parse_label(algebra, rho_label)
    row = pi0_row(algebra, rho_label)
    return [(e.rep, e.k, e.builder() if e.builder is not None else None)
            for e in row.entries]


def out_class_row(algebra):
    """Conjugacy classes of the outer group (the rho = id rowical)."""
    return pi0_row(algebra, InvLabel(0))


def _ad(algebra, M, label):
    return lambda: Automorphism(algebra, M, label=label)


def _build_row(algebra, lab):
    fam = algebra.family
    if lab.p == 0:
        return _out_row(algebra)
    if algebra.is_exceptional:
        return _exceptional_row(algebra, lab)
    if lab not in standard_list(algebra):
        raise InvalidLabel("no component row for %r on %s" % (lab, algebra.label()))
    info = family_labels(algebra)
    m = algebra.size
    ident = Pi0Entry("id", 1, lambda: identity_automorphism(algebra))
    frame = lambda: standard_involution(algebra, lab)
    if fam == "a":
        if lab.p <= info["tau_max"]:
            if m >= 3 and 2 * lab.p == m:
                half = m // 2
                entries = [
                    ident,
                    Pi0Entry("AdJ", 1, _ad(algebra, j_matrix(half), "AdJ")),
                    Pi0Entry("mu", 2,
                             lambda: standard_involution(algebra, InvLabel(info["mu"]))),
                    Pi0Entry("muAdJ", 2,
                             lambda: standard_involution(algebra,
                                                         InvLabel(info["muadj"]))),
                ]
            elif m >= 3:
                entries = [
                    ident,
                    Pi0Entry("mu", 2,
                             lambda: standard_involution(algebra, InvLabel(info["mu"]))),
                ]
            else:
                entries = [ident,
                           Pi0Entry("mu", 1, lambda: mu_automorphism(algebra))]
        elif lab.p == info["mu"]:
            if m % 2 == 0:
                entries = [
                    ident,
                    Pi0Entry("rho1", 1, _ad(algebra, tau_matrix(1, m), "rho1")),
                    Pi0Entry("mu", 2, lambda: standard_involution(algebra, lab)),
                    Pi0Entry("rho1*mu", 2, lambda: Automorphism(
                        algebra, tau_matrix(1, m), w=1, label="rho1*mu")),
                ]
            else:
                entries = [ident,
                           Pi0Entry("mu", 2,
                                    lambda: standard_involution(algebra, lab))]
        else:  # mu Ad J class
            entries = [ident,
                       Pi0Entry("muAdJ", 2,
                                lambda: standard_involution(algebra, lab))]
        return Pi0Row(algebra, lab, frame, entries)
    if fam == "b":
        p = lab.p
        B = tau_matrix(1, m) * tau_matrix(p + 1, m)
        entries = [ident,
                   Pi0Entry("rho1*tau%d" % (p + 1), 1,
                            _ad(algebra, B, "rho1*tau%d" % (p + 1)))]
        return Pi0Row(algebra, lab, frame, entries)
    if fam == "c":
        n = algebra.param
        if lab.p == info["adie"]:
            entries = [ident,
                       Pi0Entry("AdjE", 1, _ad(algebra, j_matrix(n), "AdjE"))]
        elif 2 * lab.p == n:
            # the quaternionic J: block-antidiagonal in quaternionic indices,
            # hence diag(Jq, Jq) in the complex 2n model
            Jq = j_matrix(n // 2)
            rows = [[Jq.entry(i, j) for j in range(n)] + [0] * n
                    for i in range(n)]
            rows += [[0] * n + [Jq.entry(i, j) for j in range(n)]
                     for i in range(n)]
            M = CycloMatrix.from_scalars(rows)
            entries = [ident, Pi0Entry("AdJ", 1, _ad(algebra, M, "AdJ"))]
        else:
            entries = [ident]
        return Pi0Row(algebra, lab, frame, entries)
    # family d
    n = algebra.param
    if n == 4:
        return _d4_row(algebra, lab)
    if lab.prime == 0 and lab.p <= n:
        p = lab.p
        if p == n:
            J = j_matrix(n)
            if n % 2 == 0:
                entries = [
                    ident,
                    Pi0Entry("rho1*tau%d" % (p + 1), 1,
                             _ad(algebra, tau_matrix(1, m) * tau_matrix(p + 1, m),
                                 "rho1*tau%d" % (p + 1))),
                    Pi0Entry("AdJ", 1, _ad(algebra, J, "AdJ")),
                    Pi0Entry("rho1", 2, _ad(algebra, tau_matrix(1, m), "rho1")),
                    Pi0Entry("rho1*AdJ", 2,
                             _ad(algebra, tau_matrix(1, m) * J, "rho1*AdJ")),
                ]
            else:
                entries = [
                    ident,
                    Pi0Entry("AdJ", 1, _ad(algebra, J, "AdJ")),
                    Pi0Entry("rho%d" % p, 2,
                             lambda: standard_involution(algebra, lab)),
                    Pi0Entry("rho%d*AdJ" % p, 2,
                             _ad(algebra, tau_matrix(p, m) * J, "rho%d*AdJ" % p)),
                ]
        elif p % 2 == 0:
            entries = [
                ident,
                Pi0Entry("rho1*tau%d" % (p + 1), 1,
                         _ad(algebra, tau_matrix(1, m) * tau_matrix(p + 1, m),
                             "rho1*tau%d" % (p + 1))),
                Pi0Entry("rho1", 2, _ad(algebra, tau_matrix(1, m), "rho1")),
                Pi0Entry("rho%d" % (p + 1), 2,
                         _ad(algebra, tau_matrix(p + 1, m), "rho%d" % (p + 1))),
            ]
        else:
            entries = [ident,
                       Pi0Entry("rho%d" % p, 2,
                                lambda: standard_involution(algebra, lab))]
        return Pi0Row(algebra, lab, frame, entries)
    # the Ad J row (rows are indexed by the standard list, so unprimed only)
    tn = tau_matrix(n, m)
    if n % 2 == 0:
        entries = [ident,
                   Pi0Entry("rho%d" % n, 1, _ad(algebra, tn, "rho%d" % n))]
    else:
        entries = [ident,
                   Pi0Entry("rho%d" % n, 2, _ad(algebra, tn, "rho%d" % n))]
    return Pi0Row(algebra, lab, frame, entries)


def _d4_row(algebra, lab):
    m = 8
    ident = Pi0Entry("id", 1, lambda: identity_automorphism(algebra))
    if lab.prime:
        raise InvalidLabel("component rows are indexed by the standard list")
    frame = lambda: standard_involution(algebra, lab)
    if lab.p in (1, 3):
        entries = [ident,
                   Pi0Entry("rho%d" % lab.p, 2,
                            lambda: standard_involution(algebra, lab))]
        return Pi0Row(algebra, lab, frame, entries)
    if lab.p == 2:
        entries = [
            ident,
            Pi0Entry("rho1*rho3", 1,
                     _ad(algebra, tau_matrix(1, m) * tau_matrix(3, m), "rho1*rho3")),
            Pi0Entry("rho1", 2, _ad(algebra, tau_matrix(1, m), "rho1")),
            Pi0Entry("rho3", 2, _ad(algebra, tau_matrix(3, m), "rho3")),
        ]
        return Pi0Row(algebra, lab, frame, entries)
    # p == 4: the row with a 5-class component group.  Frame: the diagonal
    # tau_4-type involution that commutes with the order-3 outer generator
    # exactly.  The inner (-,-) block type and the J type lie in the same
    # component here (unlike so(4n), n >= 3), so the AdJ entry carries both
    # signatures.
    P, JP = _d4_frame()
    minus = [i for i in range(8) if P.entry(i, i) == -1]
    r1rows = [[Fraction(int(i == j)) for j in range(8)] for i in range(8)]
    r1rows[minus[0]][minus[0]] = Fraction(-1)
    R1 = CycloMatrix.from_scalars(r1rows)
    frame = lambda: Automorphism(algebra, P, label="rho4")
    entries = [
        ident,
        Pi0Entry("AdJ", 1, _ad(algebra, JP, "AdJ"),
                 extra_sigs=[(1, (-1, -1))]),
        Pi0Entry("rho1", 2, _ad(algebra, R1, "rho1")),
        Pi0Entry("rho1*AdJ", 2, _ad(algebra, R1 * JP, "rho1*AdJ")),
        Pi0Entry("theta", 3, lambda: triality_automorphism(algebra),
                 extra_sigs=[("theta",)]),
    ]
    return Pi0Row(algebra, lab, frame, entries)


def _out_row(algebra):
    """rho = id: conjugacy classes of the outer group."""
    fam = algebra.family
    classical = not algebra.is_exceptional
    ident = Pi0Entry("id", 1,
                     (lambda: identity_automorphism(algebra)) if classical else None,
                     extra_sigs=[("out", 0)])
    entries = [ident]
    if fam == "a" and algebra.size >= 3:
        entries.append(Pi0Entry("mu", 2, lambda: mu_automorphism(algebra),
                                extra_sigs=[("out", 1)]))
    elif fam == "d":
        m = algebra.size
        entries.append(Pi0Entry("rho1", 2, _ad(algebra, tau_matrix(1, m), "rho1"),
                                extra_sigs=[("out", 1)]))
        if algebra.param == 4:
            entries.append(Pi0Entry("theta", 3,
                                    lambda: triality_automorphism(algebra),
                                    extra_sigs=[("out", 3)]))
    elif fam == "e6":
        entries.append(Pi0Entry("rho1", 2, None, extra_sigs=[("out", 1)]))
    return Pi0Row(algebra, InvLabel(0), None, entries)


def _exceptional_row(algebra, lab):
    fam = algebra.family
    if fam == "e6":
        entries = [Pi0Entry("id", 1), Pi0Entry("rho1", 2)]
    elif fam == "e7":
        if lab.p in (1, 3):
            entries = [Pi0Entry("id", 1), Pi0Entry("sigma%d" % lab.p, 1)]
        else:
            entries = [Pi0Entry("id", 1)]
    else:
        entries = [Pi0Entry("id", 1)]
    return Pi0Row(algebra, lab, None, entries)


# ---------------------------------------------------------------------------
# frame-free signatures
# ---------------------------------------------------------------------------

def _commute(a, b):
    return a.compose(b) == b.compose(a)


def _commutator_scalar(rho, beta):
    """Central scalar c with matrix(rho o beta) = c * matrix(beta o rho)."""
    ab = rho.compose(beta)
    ba = beta.compose(rho)
    c = _scalar_ratio(ab.parts()[0], ba.parts()[0])
    if c is None:
        raise NonCommuting("automorphisms do not commute")
    return c


def _block_dets(S0, B):
    """(det B|V-, det B|V+) for the +-1 eigenblocks of S0 (S0^2 = E)."""
    n = S0.n
    E = CycloMatrix.identity(n)
    half = Fraction(1, 2)
    Pm = (E - S0) * half
    Pp = (E + S0) * half
    dm = (B * Pm + Pp).det()
    dp = (B * Pp + Pm).det()
    return dm, dp


def _sgn(x):
    f = x.as_fraction()
    assert f in (1, -1), f
    return int(f)


def raw_signature(rho, beta):
    """Frame-free component signature of beta inside the centralizer of rho.

    Returns a hashable tuple, or None when no discrete rule exists.
    """
    algebra = rho.algebra
    fam = algebra.family
    if algebra.is_exceptional:
        return None
    if beta.conj or rho.conj:
        raise NoSignatureRule("signatures apply to complex-linear parts")
    if not _commute(rho, beta):
        raise NonCommuting("beta does not commute with rho")
    if rho.is_identity():
        return _out_signature(beta)
    m = algebra.size
    is_tau4_row = False
    if fam == "d" and algebra.param == 4:
        if not rho.has_parts:
            raise NoSignatureRule("rho involves the order-3 outer generator")
        G0 = rho.parts()[0]
        is_tau4_row = (G0 * G0).is_scalar() == 1 and G0.trace().is_zero()
        if not beta.has_parts:
            delta, e = _theta_power_of(beta.word())
            if e:
                if is_tau4_row:
                    return ("theta",)
                return None
    if fam == "a":
        e = 0 if beta.is_inner() else 1
        if rho.is_inner():
            S0 = rho.parts()[0]
            if S0.trace().is_zero():
                return (e, _sgn(_commutator_scalar(rho, beta)))
            return (e,)
        S0 = rho.parts()[0]
        mu_type = _scalar_ratio(S0, S0.transpose()) == 1
        if not mu_type:
            return (e,)
        if m % 2:
            return (e,)
        if e == 0:
            return (0, _mu_det_sign(rho, beta))
        return (1, _mu_det_sign(rho, beta.compose(rho)))
    if fam == "b":
        S0, B = _orient(rho, beta, normalize_b_det=True)
        dm, dp = _block_dets(S0, B)
        return (_sgn(dm),)
    if fam == "c":
        S0 = rho.parts()[0]
        if (S0 * S0).is_scalar() == -1 or S0.trace().is_zero():
            return (_sgn(_commutator_scalar(rho, beta)),)
        return ()
    # family d
    S0 = rho.parts()[0]
    if (S0 * S0).is_scalar() == -1:
        c = _sgn(_commutator_scalar(rho, beta))
        return (c, _sgn(beta.parts()[0].det()))
    c = _sgn(_commutator_scalar(rho, beta))
    if c == -1:
        return (-1, _sgn(beta.parts()[0].det()))
    S0c, B = _orient(rho, beta)
    dm, dp = _block_dets(S0c, B)
    pair = (_sgn(dm), _sgn(dp))
    tr = int(S0c.trace().as_fraction())
    p = (m - abs(tr)) // 2
    q = m - p
    orbit = {pair}
    if p % 2 == 1 and q % 2 == 1:
        orbit.add((-pair[0], -pair[1]))
    if p == q:
        orbit |= {(b, a) for (a, b) in orbit}
    return (1, min(orbit))


def _orient(rho, beta, normalize_b_det=False):
    """Canonically oriented matrix parts for eigenblock determinants."""
    S0 = rho.parts()[0]
    tr = S0.trace().as_fraction()
    if tr < 0:
        S0 = -S0
    B = beta.parts()[0]
    if normalize_b_det and B.det() == CycloScalar.from_rational(-1):
        B = -B
    return S0, B


def _mu_det_sign(rho, beta):
    """det-ratio sign separating the inner components of the centralizer of
    an outer involution of su(2n): with B S0 B^T = (1/c) S0, the value
    det(B) * c^n is +-1 and frame-independent."""
    m = rho.algebra.size
    c = _commutator_scalar(rho, beta)
    B = beta.parts()[0]
    val = B.det() * (c ** (m // 2))
    return _sgn(val)


def _out_signature(beta):
    w = beta.word()
    if w == ID_PERM:
        return ("out", 0)
    if _porder(w) == 2:
        return ("out", 1)
    return ("out", 3)


def component_signature(rho, beta):
    """Component of beta in the centralizer of the involution rho, matched
    against the representative row."""
    algebra = rho.algebra
    if algebra.is_exceptional:
        raise NoSignatureRule("exceptional algebras carry static rows only")
    lab = involution_int_class(rho)
    if lab.prime:
        raise NoSignatureRule("rows are indexed by the standard list; "
                              "conjugate rho to an unprimed class first")
    row = pi0_row(algebra, lab)
    sig = raw_signature(rho, beta)
    if sig is None:
        raise NoSignatureRule("no discrete rule for this pair")
    for entry in row.entries:
        if sig in row.entry_signatures(entry):
            return ComponentClass(lab, entry.rep, entry.k)
    raise Unclassifiable("signature %r not matched in the %r row" % (sig, lab))


def pair_k(algebra, la, lb):
    """Outer order of the product of two involution class labels."""
    w = _pcomp(label_out_word(algebra, la), label_out_word(algebra, lb))
    return _porder(w)
