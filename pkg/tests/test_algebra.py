import random
from fractions import Fraction

import pytest

from kmaut.algebra import (
    bracket,
    combine_semisimple,
    compact_conjugation,
    killing_form,
    make_algebra,
    semisimple_rates,
    sigma_eigenspace,
)
from kmaut.autg import identity_automorphism, standard_involution
from kmaut.cyclo import CycloMatrix, root_of_unity
from kmaut.errors import MembershipError, UnsupportedExceptional, UnsupportedParam


def sl2():
    return make_algebra("a", 1, "complex")


def efh(alg):
    e = alg.element(CycloMatrix.from_scalars([[0, 1], [0, 0]]))
    f = alg.element(CycloMatrix.from_scalars([[0, 0], [1, 0]]))
    h = alg.element(CycloMatrix.from_scalars([[1, 0], [0, -1]]))
    return e, f, h


def test_dimensions():
    assert make_algebra("a", 1, "complex").dim == 3
    assert make_algebra("d", 4, "compact").dim == 28
    assert make_algebra("b", 3, "compact").dim == 21
    assert make_algebra("c", 3, "compact").dim == 21
    assert make_algebra("e8", None, "compact").dim == 248
    assert make_algebra("e8", None, "compact").out_order == 1


def test_param_ranges():
    with pytest.raises(UnsupportedParam):
        make_algebra("b", 1, "compact")
    with pytest.raises(UnsupportedParam):
        make_algebra("c", 2, "compact")
    with pytest.raises(UnsupportedParam):
        make_algebra("d", 3, "compact")


def test_exceptional_static_only():
    e8 = make_algebra("e8", None, "compact")
    with pytest.raises(UnsupportedExceptional):
        e8.basis()


def test_sl2_relations():
    alg = sl2()
    e, f, h = efh(alg)
    assert bracket(e, f) == h
    assert bracket(e, e).is_zero()
    assert killing_form(e, f) == 4
    assert killing_form(h, h) == 8


def test_so4_bracket_example():
    alg = make_algebra("d", 4, "complex")  # contains the so(4) computation
    # use so(8) units: [E12 - E21, E23 - E32] = E13 - E31
    def F(i, j):
        rows = [[0] * 8 for _ in range(8)]
        rows[i][j] = 1
        rows[j][i] = -1
        return alg.element(CycloMatrix.from_scalars(rows))
    assert bracket(F(0, 1), F(1, 2)) == F(0, 2)


def test_membership_checks():
    alg = sl2()
    with pytest.raises(MembershipError):
        alg.element(CycloMatrix.identity(2))  # nonzero trace
    b3 = make_algebra("b", 2, "complex")
    with pytest.raises(MembershipError):
        b3.element(CycloMatrix.identity(5))


def test_coords_roundtrip():
    rng = random.Random(0)
    for alg in [sl2(), make_algebra("b", 2, "complex"),
                make_algebra("c", 3, "complex"), make_algebra("d", 4, "complex")]:
        coef = [Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                for _ in range(alg.dim)]
        M = alg.from_coords(coef)
        assert alg.contains_matrix(M)
        back = alg.coords(M)
        assert all(x == y for x, y in zip(back, coef))


@pytest.mark.parametrize("family,n", [("a", 1), ("a", 2), ("b", 2)])
def test_jacobi_all_basis_triples_small(family, n):
    alg = make_algebra(family, n, "complex")
    basis = alg.basis()
    for x in basis:
        for y in basis:
            for z in basis:
                j = alg.bracket_matrix(x, alg.bracket_matrix(y, z)) \
                    + alg.bracket_matrix(y, alg.bracket_matrix(z, x)) \
                    + alg.bracket_matrix(z, alg.bracket_matrix(x, y))
                assert j.is_zero()


@pytest.mark.parametrize("family,n", [("c", 3), ("d", 4), ("d", 5), ("d", 6)])
def test_jacobi_sampled_triples_large(family, n):
    rng = random.Random(4)
    alg = make_algebra(family, n, "complex")
    basis = alg.basis()
    for _ in range(300):
        x, y, z = (basis[rng.randrange(len(basis))] for _ in range(3))
        j = alg.bracket_matrix(x, alg.bracket_matrix(y, z)) \
            + alg.bracket_matrix(y, alg.bracket_matrix(z, x)) \
            + alg.bracket_matrix(z, alg.bracket_matrix(x, y))
        assert j.is_zero()


def _ad_matrix(alg, M):
    cols = [alg.coords(alg.bracket_matrix(M, b)) for b in alg.basis()]
    return CycloMatrix.from_scalars(
        [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))])


@pytest.mark.parametrize("family,n", [("a", 1), ("a", 2), ("b", 2),
                                      ("c", 3), ("d", 4)])
def test_killing_scale_against_trace_form(family, n):
    # once per family: kappa(x, y) = tr(ad x ad y) on a couple of pairs
    alg = make_algebra(family, n, "complex")
    basis = alg.basis()
    pairs = [(basis[0], basis[1]), (basis[0], basis[0]),
             (basis[2], basis[-1])]
    for x, y in pairs:
        lhs = alg.killing_matrix(x, y)
        rhs = (_ad_matrix(alg, x) * _ad_matrix(alg, y)).trace()
        assert lhs == rhs


def test_ad_invariance_random():
    rng = random.Random(5)
    for alg in [sl2(), make_algebra("c", 3, "complex")]:
        basis = alg.basis()
        for _ in range(10):
            x, y, z = (basis[rng.randrange(len(basis))] for _ in range(3))
            assert alg.killing_matrix(alg.bracket_matrix(x, y), z) \
                == alg.killing_matrix(x, alg.bracket_matrix(y, z))


def test_compact_conjugation_properties():
    rng = random.Random(6)
    alg = make_algebra("a", 1, "complex")
    omega = compact_conjugation(alg)
    e, f, h = efh(alg)
    # omega(h) = -conj(h)^T = -h, so i*h is fixed
    ih = alg.element(h.matrix * root_of_unity(4, 1))
    assert omega(ih) == ih
    for _ in range(10):
        basis = alg.basis_elements()
        x = basis[rng.randrange(len(basis))]
        y = basis[rng.randrange(len(basis))]
        assert omega(bracket(x, y)) == bracket(omega(x), omega(y))
    assert omega(omega(e)) == e


def test_su3_compact_gram_negative_definite():
    alg = make_algebra("a", 2, "complex")
    i = root_of_unity(4, 1)
    compact = []
    # antihermitian basis of su(3)
    for a in range(3):
        for b in range(a + 1, 3):
            rows = [[0] * 3 for _ in range(3)]
            rows[a][b] = 1
            rows[b][a] = -1
            compact.append(CycloMatrix.from_scalars(rows))
            rows = [[0] * 3 for _ in range(3)]
            rows[a][b] = 1
            rows[b][a] = 1
            compact.append(CycloMatrix.from_scalars(rows) * i)
    for a in range(2):
        rows = [[0] * 3 for _ in range(3)]
        rows[a][a] = 1
        rows[a + 1][a + 1] = -1
        compact.append(CycloMatrix.from_scalars(rows) * i)
    assert len(compact) == 8
    gram = [[alg.killing_matrix(x, y).as_fraction() for y in compact]
            for x in compact]
    # negative definiteness via pivots of symmetric elimination
    n = 8
    work = [row[:] for row in gram]
    for kidx in range(n):
        piv = work[kidx][kidx]
        assert piv < 0
        for r in range(kidx + 1, n):
            f = work[r][kidx] / piv
            for c2 in range(kidx, n):
                work[r][c2] -= f * work[kidx][c2]


def test_sigma_eigenspace_sl2():
    alg = sl2()
    tau = standard_involution(alg, "rho1")
    g0 = sigma_eigenspace(alg, tau, 2, 0)
    g1 = sigma_eigenspace(alg, tau, 2, 1)
    assert len(g0) == 1 and len(g1) == 2
    e, f, h = efh(alg)
    # g0 = span h
    assert g0[0].matrix == h.matrix or g0[0].matrix == -h.matrix \
        or alg.coords(g0[0].matrix)[1] == 0
    # bracket compatibility [g1, g1] in g0
    br = alg.bracket_matrix(g1[0].matrix, g1[1].matrix)
    img = tau.apply_matrix(br)
    assert img == br


def test_sigma_eigenspace_identity():
    alg = sl2()
    iden = identity_automorphism(alg)
    g0 = sigma_eigenspace(alg, iden, 1, 0)
    assert len(g0) == alg.dim


def test_sigma_eigenspace_dimension_sum():
    for alg, lab, l in [(make_algebra("a", 2, "complex"), "mu", 2),
                        (make_algebra("d", 4, "complex"), "rho1", 2)]:
        sig = standard_involution(alg, lab)
        total = sum(len(sigma_eigenspace(alg, sig, l, n)) for n in range(l))
        assert total == alg.dim


def test_semisimple_rates_and_exp():
    alg = make_algebra("d", 4, "complex")
    X = alg.torus_element([1, 1, 0, 0])
    g = X.exp_2pi(Fraction(1, 2))
    assert (g * g).is_identity()
    assert semisimple_rates(X.matrix) == (Fraction(-1), Fraction(0), Fraction(1))
    Y = alg.plane_rotation(0, 1, Fraction(1, 2))
    Z = combine_semisimple([Y, Y])
    assert Z.matrix == Y.matrix * 2
