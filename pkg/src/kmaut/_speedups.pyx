# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernel: cyclotomic convolution and matrix products.

Coefficients are arbitrary-precision Python ints; the speedup comes from
removing interpreter overhead in the nested loops, not from machine words.
"""

IMPL = "cython"

from math import gcd


def conv_reduce(tuple a, tuple b, tuple red, Py_ssize_t phi):
    cdef Py_ssize_t i, j, k
    if phi == 1:
        return (a[0] * b[0],)
    cdef list work = [0] * (2 * phi - 1)
    cdef object ai, bj, top, rj
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    work[i + j] = work[i + j] + ai * bj
    cdef tuple row
    for k in range(2 * phi - 2, phi - 1, -1):
        top = work[k]
        if top:
            work[k] = 0
            row = <tuple> red[k - phi]
            for j in range(phi):
                rj = row[j]
                if rj:
                    work[j] = work[j] + top * rj
    return tuple(work[:phi])


def matmul(tuple A, tuple B, tuple red, Py_ssize_t phi, Py_ssize_t n):
    cdef Py_ssize_t i, j, k, p, q, t, j2
    cdef list out = []
    cdef list row, work
    cdef tuple Ai, a, b, rrow
    cdef object acc, ap, bq, top, rj, aik
    if phi == 1:
        for i in range(n):
            Ai = <tuple> A[i]
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    aik = (<tuple> Ai[k])[0]
                    if aik:
                        acc = acc + aik * (<tuple> (<tuple> B[k])[j])[0]
                row.append((acc,))
            out.append(tuple(row))
        return out
    cdef Py_ssize_t width = 2 * phi - 1
    for i in range(n):
        Ai = <tuple> A[i]
        row = []
        for j in range(n):
            work = [0] * width
            for k in range(n):
                a = <tuple> Ai[k]
                b = <tuple> (<tuple> B[k])[j]
                for p in range(phi):
                    ap = a[p]
                    if ap:
                        for q in range(phi):
                            bq = b[q]
                            if bq:
                                work[p + q] = work[p + q] + ap * bq
            for t in range(width - 1, phi - 1, -1):
                top = work[t]
                if top:
                    work[t] = 0
                    rrow = <tuple> red[t - phi]
                    for j2 in range(phi):
                        rj = rrow[j2]
                        if rj:
                            work[j2] = work[j2] + top * rj
            row.append(tuple(work[:phi]))
        out.append(tuple(row))
    return out


def matvec(tuple A, tuple v, tuple red, Py_ssize_t phi, Py_ssize_t n):
    cdef Py_ssize_t i, k, p, q, t, j2
    cdef list out = []
    cdef list work
    cdef tuple Ai, a, b, rrow
    cdef object acc, ap, bq, top, rj
    for i in range(n):
        Ai = <tuple> A[i]
        if phi == 1:
            acc = 0
            for k in range(n):
                ap = (<tuple> Ai[k])[0]
                if ap:
                    acc = acc + ap * (<tuple> v[k])[0]
            out.append((acc,))
            continue
        work = [0] * (2 * phi - 1)
        for k in range(n):
            a = <tuple> Ai[k]
            b = <tuple> v[k]
            for p in range(phi):
                ap = a[p]
                if ap:
                    for q in range(phi):
                        bq = b[q]
                        if bq:
                            work[p + q] = work[p + q] + ap * bq
        for t in range(2 * phi - 2, phi - 1, -1):
            top = work[t]
            if top:
                work[t] = 0
                rrow = <tuple> red[t - phi]
                for j2 in range(phi):
                    rj = rrow[j2]
                    if rj:
                        work[j2] = work[j2] + top * rj
        out.append(tuple(work[:phi]))
    return out


def rows_gcd(rows, den):
    cdef object g = den
    for row in rows:
        for vec in row:
            for c in vec:
                if c:
                    g = gcd(g, c)
                    if g == 1:
                        return 1
    return g
