"""Classification tables: enumerate involution invariants of both kinds for
every algebra and outer class, realize each entry as a concrete automorphism,
and decide membership of invariants in the set attached to a twist.

Classical rows are computed from the matrix models; exceptional rows come
from the static label data and are marked as such.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import make_algebra
from .autg import (
    Automorphism,
    ID_PERM,
    InvLabel,
    _pcomp,
    _pinv,
    _porder,
    label_out_word,
    standard_involution,
    standard_labels,
    standard_list,
)
from .errors import InvalidK, InvalidLabel, StaticOnlyAlgebra
from .loopaut import (
    FirstKindInvariant,
    SecondKindInvariant,
    StandardLoopAutomorphism,
    canonical_pair,
)
from .pi0 import pair_k, pi0_row


class TableRow:
    """One table row: entries plus count and provenance."""

    __slots__ = ("algebra", "k", "kind", "entries", "count", "provenance")

    def __init__(self, algebra, k, kind, entries, count, provenance):
        self.algebra = algebra
        self.k = k
        self.kind = kind
        self.entries = entries
        self.count = count
        self.provenance = provenance

    def label(self):
        return "%s^(%d)" % (self.algebra.label(), self.k)

    def to_json(self):
        return {"algebra": self.label(), "kind": self.kind,
                "entries": [_entry_json(e) for e in self.entries],
                "count": self.count, "provenance": self.provenance}

    def render(self):
        lines = ["%s  kind %s  (%s)  count %s" % (self.label(), self.kind,
                                                  self.provenance, self.count)]
        for e in self.entries:
            lines.append("  " + _entry_text(e))
        return "\n".join(lines)


def _entry_json(e):
    if e[0] == "1a":
        return {"type": "1a", "rho": repr(e[1]), "sigma": e[2]}
    if e[0] == "1b":
        return {"type": "1b", "beta": e[1]}
    return {"type": "2", "pair": [repr(e[1]), repr(e[2])]}


def _entry_text(e):
    if e[0] == "1a":
        return "(%s, %s)" % (repr(e[1]), e[2])
    if e[0] == "1b":
        return "beta = %s" % e[1]
    return "[%s, %s]" % (repr(e[1]), repr(e[2]))


def valid_ks(algebra):
    if algebra.family == "d" and algebra.param == 4:
        return (1, 2, 3)
    if algebra.out_order >= 2:
        return (1, 2)
    return (1,)


def _provenance(algebra):
    return "static" if algebra.is_exceptional else "computed"


def enumerate_first_kind(algebra, k):
    """Involutions of the first kind on the loop algebra with outer class of
    order k: pairs (rho, sigma) plus the beta-classes of translation type."""
    if k not in valid_ks(algebra):
        raise InvalidK("k = %d is not valid for %s" % (k, algebra.label()))
    entries_1a = []
    for lab in standard_list(algebra):
        row = pi0_row(algebra, lab)
        for e in row.entries:
            if e.k == k:
                entries_1a.append(("1a", lab, e.rep))
    entries_1b = []
    for e in pi0_row(algebra, InvLabel(0)).entries:
        # translation-type invariants (1, id, [beta]) live on the twist
        # beta^2; its outer class has order = order of word(beta)^(-2)
        w = _entry_word(algebra, InvLabel(0), e.rep)
        sq = _pcomp(w, w)
        if _porder(_pinv(sq)) == k:
            entries_1b.append(("1b", e.rep))
    count = "%d+%d" % (len(entries_1a), len(entries_1b))
    return TableRow(algebra, k, "1", entries_1a + entries_1b, count,
                    _provenance(algebra))


def second_kind_label_set(algebra):
    """Involution-or-identity class labels entering second-kind pairs."""
    return [InvLabel(0)] + standard_labels(algebra)


def enumerate_second_kind(algebra, k):
    """Involutions of the second kind: canonical pairs [rho+, rho-] with
    outer product class of order k."""
    if k not in valid_ks(algebra):
        raise InvalidK("k = %d is not valid for %s" % (k, algebra.label()))
    labels = second_kind_label_set(algebra)
    seen = set()
    entries = []
    for i, la in enumerate(labels):
        for lb in labels[i:]:
            if pair_k(algebra, la, lb) != k:
                continue
            pair = canonical_pair(algebra, la, lb)
            if pair not in seen:
                seen.add(pair)
                entries.append(("2", pair[0], pair[1]))
    entries.sort(key=lambda e: ((e[1].p, e[1].prime), (e[2].p, e[2].prime)))
    return TableRow(algebra, k, "2", entries, len(entries),
                    _provenance(algebra))


def all_rows(algebra, kind):
    return [enumerate_first_kind(algebra, k) if kind == 1
            else enumerate_second_kind(algebra, k)
            for k in valid_ks(algebra)]


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

def _entry_word(algebra, rho_label, rep):
    """Outer word of a component representative label."""
    if rep == "id":
        return ID_PERM
    if algebra.is_exceptional:
        if algebra.family == "e6" and rep == "rho1":
            return (0, 2, 1)
        return ID_PERM
    row = pi0_row(algebra, rho_label)
    for e in row.entries:
        if e.rep == rep and e.builder is not None:
            return e.builder().word()
    raise InvalidLabel("unknown representative %r" % rep)


def _component_rep(algebra, rho_label, rep):
    row = pi0_row(algebra, rho_label)
    for e in row.entries:
        if e.rep == rep:
            if e.builder is None:
                raise StaticOnlyAlgebra("representative %r is static" % rep)
            return e.builder()
    raise InvalidLabel("unknown representative %r in row %r" % (rep, rho_label))


def _row_frame(algebra, rho_label):
    row = pi0_row(algebra, rho_label)
    frame = row.frame()
    if frame is None:
        raise StaticOnlyAlgebra("%s has no matrix model" % algebra.label())
    return frame


def realize_first_kind(algebra, rho_label, sigma_rep):
    """Constant-curve automorphism with invariant (0, rho, [sigma])."""
    if algebra.is_exceptional:
        raise StaticOnlyAlgebra("%s has no matrix model" % algebra.label())
    frame = _row_frame(algebra, rho_label)
    sigma = _component_rep(algebra, rho_label, sigma_rep)
    l = sigma.order(bound=64)
    return StandardLoopAutomorphism(sigma, l, 1, 0, None, frame)


def realize_translation(algebra, beta_rep):
    """Automorphism u(t) -> beta^(-1) u(t + pi) with invariant (1, id, [beta])."""
    if algebra.is_exceptional:
        raise StaticOnlyAlgebra("%s has no matrix model" % algebra.label())
    beta = _component_rep(algebra, InvLabel(0), beta_rep)
    twist = beta.compose(beta)
    l = twist.order(bound=64)
    return StandardLoopAutomorphism(twist, l, 1, Fraction(1, 2), None,
                                    beta.inverse())


def realize_second_kind(algebra, la, lb):
    """Automorphism u(t) -> rho+(u(-t)) on the twist rho- rho+."""
    if algebra.is_exceptional:
        raise StaticOnlyAlgebra("%s has no matrix model" % algebra.label())
    plus = standard_involution(algebra, la)
    minus = standard_involution(algebra, lb)
    twist = minus.inverse().compose(plus)
    l = twist.order(bound=64)
    return StandardLoopAutomorphism(twist, l, -1, 0, None, plus)


def realize_entry(algebra, entry):
    if entry[0] == "1a":
        return realize_first_kind(algebra, entry[1], entry[2])
    if entry[0] == "1b":
        return realize_translation(algebra, entry[1])
    return realize_second_kind(algebra, entry[1], entry[2])


def realize(inv):
    """Concrete constant-curve automorphism whose invariant is inv."""
    algebra = inv.algebra
    if algebra.is_exceptional:
        raise StaticOnlyAlgebra("%s has no matrix model" % algebra.label())
    if isinstance(inv, FirstKindInvariant):
        if inv.raw:
            raise StaticOnlyAlgebra("certificate invariants are not realizable")
        if inv.q != 2 and inv.q != 1:
            raise StaticOnlyAlgebra("only order <= 2 label invariants realize")
        if inv.p == 0:
            return realize_first_kind(algebra, inv.rho, inv.beta.rep)
        return realize_translation(algebra, inv.beta.rep)
    if isinstance(inv, SecondKindInvariant):
        if inv.raw:
            raise StaticOnlyAlgebra("certificate invariants are not realizable")
        return realize_second_kind(algebra, inv.pair[0], inv.pair[1])
    raise InvalidLabel("not an invariant: %r" % (inv,))


def membership_condition(inv, sigma):
    """Whether the invariant belongs to the loop algebra twisted by sigma:
    the attached outer class must be conjugate to sigma's."""
    algebra = inv.algebra
    target = sigma.out_order() if isinstance(sigma, Automorphism) else int(sigma)
    if isinstance(inv, FirstKindInvariant):
        if inv.raw:
            raise StaticOnlyAlgebra("certificate invariants carry no label data")
        q = inv.q
        p = inv.p
        from math import gcd
        r = gcd(p, q) if p else q
        pprime, qprime = p // r, q // r
        from .loopaut import _bezout
        l, m = _bezout(pprime, qprime)
        wrho = label_out_word(algebra, inv.rho)
        wbeta = _entry_word(algebra, inv.rho, inv.beta.rep)
        word = ID_PERM
        for _ in range(l):
            word = _pcomp(word, wrho)
        for _ in range(qprime):
            word = _pcomp(word, wbeta)
        return _porder(word) == target
    return inv.k == target


# ---------------------------------------------------------------------------
# all supported algebras
# ---------------------------------------------------------------------------

def algebra_from_args(family, n=None, mode="compact"):
    family = family.lower()
    if family in ("a", "b", "c", "d"):
        if n is None:
            raise InvalidLabel("classical families need a rank")
        return make_algebra(family, int(n), mode)
    return make_algebra(family, None, mode)


def supported_algebras():
    out = []
    for n in range(1, 8):
        out.append(make_algebra("a", n, "compact"))
    for n in range(2, 6):
        out.append(make_algebra("b", n, "compact"))
    for n in range(3, 7):
        out.append(make_algebra("c", n, "compact"))
    for n in range(4, 9):
        out.append(make_algebra("d", n, "compact"))
    for fam in ("e6", "e7", "e8", "f4", "g2"):
        out.append(make_algebra(fam, None, "compact"))
    return out
