"""Pure-Python law-scan kernels.

Same contracts as the compiled twin (_kernels_c). All value tables are
integer-encoded upstream (rank codes or common-denominator scaling), so a
Python int here may be arbitrarily large; join/meet are index tables as
plain nested lists.
"""


def distributive_violation(join, meet):
    n = len(join)
    for f in range(n):
        mf = meet[f]
        for g in range(n):
            fg = mf[g]
            jg = join[g]
            for h in range(g, n):
                if mf[jg[h]] != join[fg][mf[h]]:
                    return (f, g, h)
    return None


def modular_violations(v, join, meet):
    n = len(join)
    out = []
    for f in range(n):
        vf = v[f]
        jf = join[f]
        mf = meet[f]
        for g in range(f, n):
            if vf + v[g] != v[mf[g]] + v[jf[g]]:
                out.append((f, g))
    return out


def additive_cut_violations(w, join, meet):
    n = len(join)
    out = []
    for f in range(n):
        wf = w[f]
        mf = meet[f]
        for g in range(n):
            x = wf[g]
            jg = join[g]
            for h in range(n):
                if x != wf[jg[h]] + w[mf[h]][g]:
                    out.append((f, g, h))
    return out


def ultra_cut_violations(w, join, meet):
    n = len(join)
    out = []
    for f in range(n):
        wf = w[f]
        mf = meet[f]
        for g in range(n):
            x = wf[g]
            jg = join[g]
            for h in range(n):
                a = wf[jg[h]]
                b = w[mf[h]][g]
                if x != (a if a > b else b):
                    out.append((f, g, h))
    return out


def sandwich_violations(w, join, meet, kind, p):
    """Violations of combine(a,b) <= w(f,g) <= a+b with a = w(f,gvh),
    b = w(f^h,g). Entries are (f,g,h,side), side 0 = lower bound broken,
    side 1 = upper bound broken. kind: 0 add, 1 max, 2 lp (uses p)."""
    n = len(join)
    out = []
    for f in range(n):
        wf = w[f]
        mf = meet[f]
        for g in range(n):
            x = wf[g]
            jg = join[g]
            for h in range(n):
                a = wf[jg[h]]
                b = w[mf[h]][g]
                if kind == 0:
                    lo_broken = a + b > x
                elif kind == 1:
                    lo_broken = (a if a > b else b) > x
                else:
                    lo_broken = a**p + b**p > x**p
                if lo_broken:
                    out.append((f, g, h, 0))
                if x > a + b:
                    out.append((f, g, h, 1))
    return out


def triangle_violations(d):
    n = len(d)
    out = []
    for f in range(n):
        df = d[f]
        for g in range(f + 1, n):
            x = df[g]
            dg = d[g]
            for h in range(n):
                if x > df[h] + dg[h]:
                    out.append((f, g, h))
    return out


def strong_triangle_violations(d):
    n = len(d)
    out = []
    for f in range(n):
        df = d[f]
        for g in range(f + 1, n):
            x = df[g]
            dg = d[g]
            for h in range(n):
                a = df[h]
                b = dg[h]
                if x > (a if a > b else b):
                    out.append((f, g, h))
    return out


def d_irreducible_witnesses(d, join):
    """Per element p: None if min(d(p,f), d(p,g)) <= d(p, fvg) for all f,g,
    else the first violating (f, g) in index order."""
    n = len(join)
    out = []
    for p in range(n):
        dp = d[p]
        found = None
        for f in range(n):
            if found is not None:
                break
            df = dp[f]
            jf = join[f]
            for g in range(f, n):
                dg = dp[g]
                m = df if df < dg else dg
                if m > dp[jf[g]]:
                    found = (f, g)
                    break
        out.append(found)
    return out
