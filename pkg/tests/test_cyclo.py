import random
from fractions import Fraction

import pytest

from kmaut.cyclo import (
    CycloMatrix,
    CycloScalar,
    cyclotomic_poly,
    finite_order_eigenprojectors,
    pfaffian,
    root_of_unity,
)
from kmaut.errors import (
    ConductorOverflow,
    NotAntisymmetric,
    OddDimension,
    OrderMismatch,
)


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_root_of_unity_basics():
    assert root_of_unity(1, 0) == 1
    i = root_of_unity(4, 1)
    assert i ** 4 == 1
    assert i * i == -1
    # zeta_6^2 * zeta_6^4 = 1
    assert root_of_unity(6, 2) * root_of_unity(6, 4) == 1


def test_multiplicative_order():
    z = root_of_unity(6, 2)
    k = 1
    cur = z
    while cur != 1:
        cur = cur * z
        k += 1
    assert k == 3  # 6 / gcd(6, 2)


def test_field_axioms_random():
    rng = random.Random(0)
    for _ in range(25):
        N = rng.choice([1, 2, 3, 4, 6, 8, 12])
        phi = len(cyclotomic_poly(N)) - 1
        a = CycloScalar(N, tuple(rng.randint(-4, 4) for _ in range(phi)),
                        rng.randint(1, 5))
        b = CycloScalar(N, tuple(rng.randint(-4, 4) for _ in range(phi)),
                        rng.randint(1, 5))
        assert a + (-a) == 0
        if a:
            assert a * a.inverse() == 1
        assert (a * b).conj() == a.conj() * b.conj()
        assert a.conj().conj() == a


def test_conductor_embedding_roundtrip():
    a = root_of_unity(12, 5) + CycloScalar.from_rational(Fraction(3, 7))
    assert a.promote(24).restrict(12) == a
    assert a.promote(24) == a  # equality across conductors


def test_mixed_conductor_promotion():
    a = root_of_unity(4, 1)
    b = root_of_unity(6, 1)
    c = a * b
    assert c.N == 12
    assert c == root_of_unity(12, 3) * root_of_unity(12, 2)


def test_conductor_cap():
    with pytest.raises(ConductorOverflow):
        root_of_unity(10 ** 6 + 1, 1)


def test_scalar_json_roundtrip():
    a = root_of_unity(8, 3) * Fraction(5, 6) + 2
    assert CycloScalar.from_json(a.to_json()) == a


def test_matrix_ops():
    J = CycloMatrix.from_scalars([[0, 1], [-1, 0]])
    assert (J * J) == -CycloMatrix.identity(2)
    assert (J.inverse() * J).is_identity()
    assert J.det() == 1
    A = CycloMatrix.from_scalars([[1, 2], [3, 4]])
    B = CycloMatrix.from_scalars([[0, 1], [1, 1]])
    assert (A * B).det() == A.det() * B.det()
    assert (A * B).conj_transpose() == B.conj_transpose() * A.conj_transpose()
    assert CycloMatrix.from_json(A.to_json()) == A


def test_eigenprojectors_identity():
    E = CycloMatrix.identity(3)
    [(val, proj)] = finite_order_eigenprojectors(E, 1)
    assert val == 1 and proj.is_identity()


def test_eigenprojectors_diag():
    M = CycloMatrix.diag([1, -1])
    out = finite_order_eigenprojectors(M, 2)
    assert len(out) == 2
    vals = [v for v, _ in out]
    assert vals[0] == 1 and vals[1] == -1
    assert out[0][1] == CycloMatrix.diag([1, 0])
    assert out[1][1] == CycloMatrix.diag([0, 1])


def test_eigenprojectors_rotation():
    # 90-degree rotation: eigenvalues +-i with projectors onto (1, -+i) lines
    R = CycloMatrix.from_scalars([[0, -1], [1, 0]])
    out = finite_order_eigenprojectors(R, 4)
    assert len(out) == 2
    i = root_of_unity(4, 1)
    half = Fraction(1, 2)
    expect = {
        tuple((i).to_json()["coeffs"]): None,
    }
    for val, proj in out:
        assert R * proj == proj * val
        assert (proj * proj) == proj
    total = out[0][1] + out[1][1]
    assert total.is_identity()
    # hand-solved projector for eigenvalue i: 1/2 [[1, i], [-i, 1]]
    Pi = CycloMatrix.from_scalars([[half, i * half], [-i * half, half]])
    assert any(proj == Pi for _, proj in out)


def test_eigenprojector_properties_random():
    rng = random.Random(1)
    for _ in range(10):
        n = rng.randint(2, 4)
        N = rng.choice([2, 3, 4])
        D = CycloMatrix.diag([root_of_unity(N, rng.randrange(N))
                              for _ in range(n)])
        # conjugate by a random unipotent
        rows = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
        i, j = rng.sample(range(n), 2)
        rows[i][j] = Fraction(rng.randint(-2, 2))
        U = CycloMatrix.from_scalars(rows)
        M = U * D * U.inverse()
        out = finite_order_eigenprojectors(M, N)
        total = out[0][1]
        for _, p in out[1:]:
            total = total + p
        assert total.is_identity()
        for a, (va, pa) in enumerate(out):
            for b, (vb, pb) in enumerate(out):
                prod = pa * pb
                if a == b:
                    assert prod == pa
                else:
                    assert prod.is_zero()


def test_eigenprojectors_order_mismatch():
    M = CycloMatrix.diag([1, -1])
    with pytest.raises(OrderMismatch):
        finite_order_eigenprojectors(M, 3)


def test_pfaffian_base_cases():
    M = CycloMatrix.from_scalars([[0, 1], [-1, 0]])
    assert pfaffian(M) == 1
    J = CycloMatrix.from_scalars(
        [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    # a12 a34 - a13 a24 + a14 a23 = -1
    assert pfaffian(J) == -1
    t1 = CycloMatrix.diag([-1, 1, 1, 1])
    assert pfaffian(t1 * J * t1) == 1


def test_pfaffian_errors():
    with pytest.raises(OddDimension):
        pfaffian(CycloMatrix.zeros(3))
    with pytest.raises(NotAntisymmetric):
        pfaffian(CycloMatrix.identity(2))


def test_pfaffian_squares_to_det():
    rng = random.Random(2)
    for n in (2, 4, 6, 8):
        for _ in range(3):
            rows = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    v = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                    rows[i][j] = v
                    rows[j][i] = -v
            M = CycloMatrix.from_scalars(rows)
            assert pfaffian(M) ** 2 == M.det()


def test_pfaffian_congruence():
    rng = random.Random(3)
    n = 4
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-3, 3))
            rows[i][j] = v
            rows[j][i] = -v
    M = CycloMatrix.from_scalars(rows)
    arows = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
    A = CycloMatrix.from_scalars(arows)
    assert pfaffian(A.transpose() * M * A) == A.det() * pfaffian(M)
