# Compiled law-scan kernels. Mirror of _kernels_py; value tables arrive as
# int64 (already rank-coded or denominator-scaled, overflow pre-checked by
# the dispatcher), join/meet as the lattice's int32 index tables.

cimport cython


def distributive_violation(const int[:, ::1] join, const int[:, ::1] meet):
    cdef Py_ssize_t n = join.shape[0]
    cdef Py_ssize_t f, g, h
    for f in range(n):
        for g in range(n):
            for h in range(g, n):
                if meet[f, join[g, h]] != join[meet[f, g], meet[f, h]]:
                    return (f, g, h)
    return None


def modular_violations(const long long[::1] v, const int[:, ::1] join, const int[:, ::1] meet):
    cdef Py_ssize_t n = join.shape[0]
    cdef Py_ssize_t f, g
    out = []
    for f in range(n):
        for g in range(f, n):
            if v[f] + v[g] != v[meet[f, g]] + v[join[f, g]]:
                out.append((f, g))
    return out


def additive_cut_violations(const long long[:, ::1] w, const int[:, ::1] join, const int[:, ::1] meet):
    cdef Py_ssize_t n = join.shape[0]
    cdef Py_ssize_t f, g, h
    cdef long long x
    out = []
    for f in range(n):
        for g in range(n):
            x = w[f, g]
            for h in range(n):
                if x != w[f, join[g, h]] + w[meet[f, h], g]:
                    out.append((f, g, h))
    return out


def ultra_cut_violations(const long long[:, ::1] w, const int[:, ::1] join, const int[:, ::1] meet):
    cdef Py_ssize_t n = join.shape[0]
    cdef Py_ssize_t f, g, h
    cdef long long x, a, b
    out = []
    for f in range(n):
        for g in range(n):
            x = w[f, g]
            for h in range(n):
                a = w[f, join[g, h]]
                b = w[meet[f, h], g]
                if x != (a if a > b else b):
                    out.append((f, g, h))
    return out


def sandwich_violations(const long long[:, ::1] w, const int[:, ::1] join, const int[:, ::1] meet,
                        int kind, int p):
    cdef Py_ssize_t n = join.shape[0]
    cdef Py_ssize_t f, g, h
    cdef long long x, a, b
    cdef bint lo_broken
    out = []
    for f in range(n):
        for g in range(n):
            x = w[f, g]
            for h in range(n):
                a = w[f, join[g, h]]
                b = w[meet[f, h], g]
                if kind == 0:
                    lo_broken = a + b > x
                elif kind == 1:
                    lo_broken = (a if a > b else b) > x
                elif p == 2:
                    lo_broken = a * a + b * b > x * x
                else:
                    lo_broken = a * a * a + b * b * b > x * x * x
                if lo_broken:
                    out.append((f, g, h, 0))
                if x > a + b:
                    out.append((f, g, h, 1))
    return out


def triangle_violations(const long long[:, ::1] d):
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t f, g, h
    cdef long long x
    out = []
    for f in range(n):
        for g in range(f + 1, n):
            x = d[f, g]
            for h in range(n):
                if x > d[f, h] + d[g, h]:
                    out.append((f, g, h))
    return out


def strong_triangle_violations(const long long[:, ::1] d):
    cdef Py_ssize_t n = d.shape[0]
    cdef Py_ssize_t f, g, h
    cdef long long x, a, b
    out = []
    for f in range(n):
        for g in range(f + 1, n):
            x = d[f, g]
            for h in range(n):
                a = d[f, h]
                b = d[g, h]
                if x > (a if a > b else b):
                    out.append((f, g, h))
    return out


def d_irreducible_witnesses(const long long[:, ::1] d, const int[:, ::1] join):
    cdef Py_ssize_t n = join.shape[0]
    cdef Py_ssize_t p, f, g
    cdef long long df, dg, m
    cdef bint done
    out = []
    for p in range(n):
        found = None
        done = False
        for f in range(n):
            if done:
                break
            df = d[p, f]
            for g in range(f, n):
                dg = d[p, g]
                m = df if df < dg else dg
                if m > d[p, join[f, g]]:
                    found = (f, g)
                    done = True
                    break
        out.append(found)
    return out
