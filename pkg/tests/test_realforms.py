from fractions import Fraction

import pytest

from kmaut.algebra import make_algebra
from kmaut.autg import (
    InvLabel,
    identity_automorphism,
    omega_automorphism,
    standard_involution,
)
from kmaut.errors import NotCompactMode
from kmaut.loopaut import StandardLoopAutomorphism
from kmaut.realforms import (
    cartan_decomposition,
    check_extension_bijection,
    conj_linear_extend,
    enumerate_conj_linear,
    invariant_conj_linear,
    real_form_basis,
    sl2_catalogue,
)
from kmaut.tables import valid_ks


def test_conj_linear_extension_order():
    su2 = make_algebra("a", 1, "compact")
    iden = identity_automorphism(su2)
    one = StandardLoopAutomorphism(iden, 1, 1, 0, None,
                                   identity_automorphism(su2))
    ext = conj_linear_extend(one)
    assert ext.phi0.conj
    assert ext.order() == 2  # pointwise conjugation
    tau = standard_involution(su2, "rho1")
    phi = StandardLoopAutomorphism(iden, 1, 1, 0, None, tau)
    ext = conj_linear_extend(phi)
    assert ext.order() == 2
    refl = StandardLoopAutomorphism(iden, 1, -1, 0, None,
                                    identity_automorphism(su2))
    ext = conj_linear_extend(refl)
    assert ext.epsilon == -1  # kind preserved


def test_conj_linear_extension_needs_compact():
    sl2 = make_algebra("a", 1, "complex")
    iden = identity_automorphism(sl2)
    one = StandardLoopAutomorphism(iden, 1, 1, 0, None,
                                   identity_automorphism(sl2))
    with pytest.raises(NotCompactMode):
        conj_linear_extend(one)


def test_invariant_conj_linear_cases():
    su2 = make_algebra("a", 1, "compact")
    iden = identity_automorphism(su2)
    om = omega_automorphism(su2)
    tau = standard_involution(su2, "rho1")
    # compact conjugation itself
    inv = invariant_conj_linear(StandardLoopAutomorphism(iden, 1, 1, 0,
                                                         None, om))
    assert inv.type == 1 and inv.p == 0 and inv.rho == InvLabel(0)
    # a type-1a noncompact form
    inv = invariant_conj_linear(StandardLoopAutomorphism(
        iden, 1, 1, 0, None, tau.compose(om)))
    assert inv.p == 0 and inv.rho == InvLabel(1)
    # translation type
    inv = invariant_conj_linear(StandardLoopAutomorphism(
        iden, 1, 1, Fraction(1, 2), None, om))
    assert inv.p == 1 and inv.beta_bar
    # type 2
    inv = invariant_conj_linear(StandardLoopAutomorphism(
        iden, 1, -1, 0, None, om))
    assert inv.type == 2 and inv.pair == (InvLabel(0), InvLabel(0))


def test_extension_map_and_bijection():
    for fam, n in [("a", 1), ("a", 2), ("a", 3), ("b", 2), ("c", 3),
                   ("d", 4), ("d", 5)]:
        alg = make_algebra(fam, n, "compact")
        for k in valid_ks(alg):
            rep = check_extension_bijection(alg, k)
            assert rep["ok"], (fam, n, k)


def test_extension_map_values():
    su3 = make_algebra("a", 2, "compact")
    t1 = enumerate_conj_linear(su3, 1, 1)
    # contains the compact form and the real forms of each involution class
    rhos = sorted(repr(i.rho) for i in t1 if i.p == 0)
    assert "rho0" in rhos and "rho1" in rhos and "rho2" in rhos
    t2 = enumerate_conj_linear(su3, 2, 2)
    assert len(t2) == 2  # [rho_p, mu] for p = 0, 1


def test_real_form_basis_sl2():
    sl2c = make_algebra("a", 1, "compact")
    # [id, id]: untwisted, every coefficient space 3-dimensional over R
    rb = real_form_basis(sl2c, (InvLabel(0), InvLabel(0)), N=2)
    assert set(rb.coefficient_dims().values()) == {3}
    assert rb.l == 1
    # [mu, mu] ~ [rho1, rho1]
    rb = real_form_basis(sl2c, (InvLabel(1), InvLabel(1)), N=2)
    assert set(rb.coefficient_dims().values()) == {3}
    # [mu, id]: conductor 2, dims alternate 1 (even n) and 2 (odd n)
    rb = real_form_basis(sl2c, (InvLabel(1), InvLabel(0)), N=4)
    dims = rb.coefficient_dims()
    assert rb.l == 2
    assert all(dims[n] == (1 if n % 2 == 0 else 2) for n in dims)
    assert rb.closed_under_bracket()


def test_cartan_decomposition_cases():
    su2 = make_algebra("a", 1, "compact")
    iden = identity_automorphism(su2)
    one = StandardLoopAutomorphism(iden, 1, 1, 0, None,
                                   identity_automorphism(su2))
    rep = cartan_decomposition(one, N=2)
    assert len(rep["P"]) == 0 and len(rep["K"]) == 17
    assert all(rep["inclusions"].values())
    tau = standard_involution(su2, "rho1")
    phi = StandardLoopAutomorphism(iden, 1, 1, 0, None, tau)
    rep = cartan_decomposition(phi, N=2)
    assert len(rep["K"]) == 7 and len(rep["P"]) == 10
    assert all(rep["inclusions"].values())
    refl = StandardLoopAutomorphism(iden, 1, -1, 0, None,
                                    identity_automorphism(su2))
    rep = cartan_decomposition(refl, N=2)
    assert all(rep["inclusions"].values())
    # c and d flip sign under the second kind: they sit in P
    cd = [e for e in rep["P"] if not e.c.is_zero() or not e.d.is_zero()]
    assert len(cd) == 2
    assert len(rep["noncompact"]) == len(rep["K"]) + len(rep["P"])


def test_cartan_decomposition_twisted():
    su2 = make_algebra("a", 1, "compact")
    tau = standard_involution(su2, "rho1")
    # second kind on the twisted algebra
    phi = StandardLoopAutomorphism(tau, 2, -1, 0, None, tau)
    rep = cartan_decomposition(phi, N=4)
    assert all(rep["inclusions"].values())
    assert len(rep["K"]) + len(rep["P"]) > 0
    cd = [e for e in rep["P"] if not e.c.is_zero() or not e.d.is_zero()]
    assert len(cd) == 2  # c and d flip sign
    # first kind on the twisted algebra
    phi = StandardLoopAutomorphism(tau, 2, 1, 0, None, tau)
    rep = cartan_decomposition(phi, N=4)
    assert all(rep["inclusions"].values())
    kc = [e for e in rep["K"] if not e.c.is_zero() or not e.d.is_zero()]
    assert len(kc) == 2  # c and d are fixed


def test_cartan_needs_compact_mode():
    sl2 = make_algebra("a", 1, "complex")
    iden = identity_automorphism(sl2)
    one = StandardLoopAutomorphism(iden, 1, 1, 0, None,
                                   identity_automorphism(sl2))
    with pytest.raises(NotCompactMode):
        cartan_decomposition(one)


def test_cartan_uniqueness_surrogate():
    """Two involutions with equal invariants: the conjugator maps the K/P
    window spans onto each other."""
    from fractions import Fraction as F
    from kmaut.autg import Automorphism
    from kmaut.cyclo import CycloMatrix
    from kmaut.loopaut import conjugate_constant, invariant_first_kind
    from kmaut.realforms import _QSlot, _affine_qvec, _in_q_span, _slot_field

    su2 = make_algebra("a", 1, "compact")
    iden = identity_automorphism(su2)
    tau = standard_involution(su2, "rho1")
    phi1 = StandardLoopAutomorphism(iden, 1, 1, 0, None, tau)
    # conjugate by a compact-form-preserving constant automorphism
    g = Automorphism(su2, CycloMatrix.from_scalars([[0, 1], [-1, 0]]))
    phi2 = conjugate_constant(phi1, g)
    assert invariant_first_kind(phi1) == invariant_first_kind(phi2)
    N = 2
    rep1 = cartan_decomposition(phi1, N=N)
    rep2 = cartan_decomposition(phi2, N=N)
    slot = _QSlot(su2, _slot_field(su2, 1))
    k2 = [_affine_qvec(e, slot, N, 1) for e in rep2["K"]]
    p2 = [_affine_qvec(e, slot, N, 1) for e in rep2["P"]]
    from kmaut.loop import AffineElement, LoopElement

    def push(e):
        loop = LoopElement(su2, iden, 1,
                           {n: g.apply_matrix(M) for n, M in e.loop.coeffs.items()},
                           validate=False)
        return AffineElement(loop, e.c, e.d)

    for e in rep1["K"]:
        assert _in_q_span(k2, _affine_qvec(push(e), slot, N, 1))
    for e in rep1["P"]:
        assert _in_q_span(p2, _affine_qvec(push(e), slot, N, 1))


def test_sl2_catalogue():
    cat = sl2_catalogue()
    assert cat["ok"]
    assert cat["almost_split_count"] == 3
    assert cat["almost_compact_count"] == 4
    assert cat["noncompact_almost_compact_count"] == 3
    assert all(v["closed"] for v in cat["almost_split_bases"].values())
