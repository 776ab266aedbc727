"""Generic exact linear algebra over CycloScalar coordinate vectors."""

from .cyclo import CycloScalar

_ZERO = CycloScalar.from_rational(0)


def rref(rows):
    """Row-reduce a list of CycloScalar rows in place; returns pivot columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    piv = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
        if r == len(rows):
            break
    return piv


def row_space_basis(rows):
    """Independent spanning subset of the given rows, in reduced form."""
    work = [list(r) for r in rows]
    piv = rref(work)
    return work[: len(piv)]


def solve_in_span(basis_rows, target):
    """Coefficients expressing target in span(basis_rows), or None.

    Gaussian elimination on the transposed system; all exact.
    """
    if not basis_rows:
        return [] if all(not t for t in target) else None
    m = len(target)
    k = len(basis_rows)
    aug = [[basis_rows[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    piv = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if aug[i][c]), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][k]:
            return None
    coeffs = [_ZERO] * k
    for i, c in enumerate(piv):
        coeffs[c] = aug[i][k]
    return coeffs


def nullspace(rows, ncols):
    """Basis of the right kernel of the matrix given by CycloScalar rows."""
    work = [list(r) for r in rows]
    piv = rref(work)
    pivset = set(piv)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    one = CycloScalar.from_rational(1)
    for f in free:
        vec = [_ZERO] * ncols
        vec[f] = one
        for i, c in enumerate(piv):
            vec[c] = -work[i][f]
        basis.append(vec)
    return basis
