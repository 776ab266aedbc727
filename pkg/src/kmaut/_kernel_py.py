"""Pure-Python arithmetic kernel.

Same API as the compiled extension `_speedups`; see kernel.py for selection.
Vectors are int tuples of length phi (coefficients in the power basis of a
cyclotomic integer ring), `red` holds the reduction rows for the exponents
phi .. 2*phi-2.
"""

from math import gcd

IMPL = "python"


def conv_reduce(a, b, red, phi):
    if phi == 1:
        return (a[0] * b[0],)
    work = [0] * (2 * phi - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    work[i + j] += ai * bj
    for k in range(2 * phi - 2, phi - 1, -1):
        top = work[k]
        if top:
            work[k] = 0
            row = red[k - phi]
            for j in range(phi):
                rj = row[j]
                if rj:
                    work[j] += top * rj
    return tuple(work[:phi])


def matmul(A, B, red, phi, n):
    if phi == 1:
        out = []
        for i in range(n):
            Ai = A[i]
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    aik = Ai[k][0]
                    if aik:
                        acc += aik * B[k][j][0]
                row.append((acc,))
            out.append(tuple(row))
        return out
    width = 2 * phi - 1
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(n):
            work = [0] * width
            for k in range(n):
                a = Ai[k]
                b = B[k][j]
                for p, ap in enumerate(a):
                    if ap:
                        for q, bq in enumerate(b):
                            if bq:
                                work[p + q] += ap * bq
            for t in range(width - 1, phi - 1, -1):
                top = work[t]
                if top:
                    work[t] = 0
                    rrow = red[t - phi]
                    for j2 in range(phi):
                        rj = rrow[j2]
                        if rj:
                            work[j2] += top * rj
            row.append(tuple(work[:phi]))
        out.append(tuple(row))
    return out


def matvec(A, v, red, phi, n):
    out = []
    for i in range(n):
        Ai = A[i]
        if phi == 1:
            acc = 0
            for k in range(n):
                aik = Ai[k][0]
                if aik:
                    acc += aik * v[k][0]
            out.append((acc,))
            continue
        work = [0] * (2 * phi - 1)
        for k in range(n):
            a = Ai[k]
            b = v[k]
            for p, ap in enumerate(a):
                if ap:
                    for q, bq in enumerate(b):
                        if bq:
                            work[p + q] += ap * bq
        for t in range(2 * phi - 2, phi - 1, -1):
            top = work[t]
            if top:
                work[t] = 0
                rrow = red[t - phi]
                for j2 in range(phi):
                    rj = rrow[j2]
                    if rj:
                        work[j2] += top * rj
        out.append(tuple(work[:phi]))
    return out


def rows_gcd(rows, den):
    g = den
    for row in rows:
        for vec in row:
            for c in vec:
                if c:
                    g = gcd(g, c)
                    if g == 1:
                        return 1
    return g
