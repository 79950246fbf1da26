"""Brute-force oracle for the generic PGL_3 flag motive mod 3.

Works in CH(GL_3/B) = Z[x1,x2,x3]/(e1,e2,e3) with the lex normal-form basis
x2^a x3^b (a <= 1, b <= 2), divided differences computed by sympy, and the
characteristic map restricted to the root lattice (x1-x2, x2-x3). The
degree-0 algebra is closed over F_3 by words in these operators, every
element is enumerated, and a decomposition of 1 into primitive orthogonal
idempotents is found by exhaustive search.

Usage: python3 pgl3_bruteforce.py [out.json]
"""
import itertools
import json
import sys

import sympy as sp

P = 3
x1, x2, x3 = sp.symbols("x1 x2 x3")
GENS = (x1, x2, x3)
IDEAL = sp.groebner([x1 + x2 + x3, x1 * x2 + x1 * x3 + x2 * x3, x1 * x2 * x3], *GENS, order="lex")
BASIS = [sp.Integer(1), x3, x2, x3**2, x2 * x3, x2 * x3**2]
DEG = [0, 1, 1, 2, 2, 3]
N = len(BASIS)


def normal_form(f):
    return sp.expand(IDEAL.reduce(sp.expand(f))[1])


def coords(f):
    poly = sp.Poly(normal_form(f), *GENS)
    out = []
    for b in BASIS:
        out.append(int(poly.coeff_monomial(b)))
    return out


def operator(fn):
    # column u = coordinates of fn(basis[u])
    cols = [coords(fn(b)) for b in BASIS]
    return [[cols[u][w] % P for u in range(N)] for w in range(N)]


def ddiff(i):
    a, b = GENS[i], GENS[i + 1]

    def fn(f):
        g = f.subs({a: b, b: a}, simultaneous=True)
        return sp.cancel((f - g) / (a - b))

    return fn


def mult(expr):
    return lambda f: expr * f


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(N)) % P for j in range(N)] for i in range(N)]


def flat(m):
    return tuple(v for row in m for v in row)


def rank_mod_p(vectors):
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % P), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], P - 2, P)
        rows[r] = [(v * inv) % P for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % P:
                m = rows[i][c]
                rows[i] = [(vi - m * vr) % P for vi, vr in zip(rows[i], rows[r])]
        r += 1
    return r


def main():
    ops = [(-1, operator(ddiff(0))), (-1, operator(ddiff(1))),
           (1, operator(mult(x1 - x2))), (1, operator(mult(x2 - x3)))]
    ident = [[int(i == j) for j in range(N)] for i in range(N)]
    # graded closure of words
    spans = {0: [flat(ident)]}
    elems = [(0, ident)]
    k = 0
    while k < len(elems):
        d, m = elems[k]
        k += 1
        for e, g in ops:
            nd = d + e
            if abs(nd) > 3:
                continue
            prod = matmul(m, g)
            cur = spans.setdefault(nd, [])
            if rank_mod_p(cur + [flat(prod)]) > rank_mod_p(cur) if cur else any(flat(prod)):
                cur.append(flat(prod))
                elems.append((nd, prod))
    deg0 = [m for d, m in elems if d == 0]
    dim = rank_mod_p([flat(m) for m in deg0])
    basis = []
    for m in deg0:
        if rank_mod_p([flat(b) for b in basis] + [flat(m)]) > len(basis):
            basis.append(m)
    assert len(basis) == dim

    elements = []
    for coeffs in itertools.product(range(P), repeat=dim):
        m = [[sum(c * b[i][j] for c, b in zip(coeffs, basis)) % P for j in range(N)] for i in range(N)]
        elements.append(m)
    zero = [[0] * N for _ in range(N)]
    idems = [m for m in elements if matmul(m, m) == m and m != zero]

    def add(a, b):
        return [[(a[i][j] + b[i][j]) % P for j in range(N)] for i in range(N)]

    def orth(a, b):
        return matmul(a, b) == zero and matmul(b, a) == zero

    def primitive(e):
        return not any(f != e and orth(f, add(e, [[(-v) % P for v in row] for row in f]))
                       and add(e, [[(-v) % P for v in row] for row in f]) in idems
                       for f in idems if matmul(e, matmul(f, e)) == f)

    prims = [e for e in idems if primitive(e)]

    def search(rest, chosen):
        if rest == zero:
            return chosen
        for e in prims:
            if matmul(rest, matmul(e, rest)) == e and all(orth(e, c) for c in chosen):
                r = search(add(rest, [[(-v) % P for v in row] for row in e]), chosen + [e])
                if r is not None:
                    return r
        return None

    decomposition = search(ident, [])

    def poincare(e):
        out = []
        for d in range(4):
            idx = [i for i in range(N) if DEG[i] == d]
            sub = [[e[i][j] for j in idx] for i in idx]
            out.append(rank_mod_p(sub))
        while out and out[-1] == 0:
            out.pop()
        return out

    summands = sorted(poincare(e) for e in decomposition)
    result = {
        "group": "PGL3",
        "prime": P,
        "schubert_dims": [DEG.count(d) for d in range(4)],
        "algebra_dim": dim,
        "idempotent_count": len(idems),
        "primitive_idempotent_count": len(prims),
        "summands": summands,
    }
    text = json.dumps(result, indent=2, sort_keys=True)
    if len(sys.argv) > 1:
        with open(sys.argv[1], "w") as fh:
            fh.write(text + "\n")
    print(text)


if __name__ == "__main__":
    main()
