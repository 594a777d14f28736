"""Naive sympy oracle for volume functions and residue chains of principal cones.

Regenerate with: python3 tests/oracles/residue_oracle.py tests/golden
"""
import json
import sys
from pathlib import Path

import sympy as sp


def zeta(g, i, j):
    m = sp.zeros(g)
    if i == j:
        m[i, i] = 1
    else:
        m[i, j] = m[j, i] = -1
        m[i, i] = m[j, j] = 1
    return m


def principal_generators(g):
    diag = [zeta(g, i, i) for i in range(g)]
    off = [zeta(g, i, j) for i in range(g) for j in range(i + 1, g)]
    return diag + off


def poly_json(expr, xs):
    expr = sp.expand(expr)
    terms = []
    if expr != 0:
        for monom, coeff in sp.Poly(expr, *xs).terms():
            c = sp.Rational(coeff)
            terms.append({"exp": list(monom), "num": str(c.p), "den": str(c.q)})
    terms.sort(key=lambda t: (sum(t["exp"]), t["exp"]), reverse=True)
    return {"nvars": len(xs), "terms": terms}


def residue(g, d):
    gens = principal_generators(g)
    n = len(gens)
    xs = sp.symbols(f"x0:{n}")
    f = sp.expand(sp.Matrix(sum((x * a for x, a in zip(xs, gens)), sp.zeros(g))).det())
    chain = [f]
    degrees = []
    for k in range(d):
        p = sp.Poly(chain[-1], xs[k])
        degrees.append(p.degree())
        chain.append(sp.expand(p.all_coeffs()[0]))
    s = chain[-1]
    rest = xs[d:]
    m = len(rest)
    t = sp.Matrix(m, m, lambda a, b: sp.expand(
        s * sp.diff(s, rest[a], rest[b]) - sp.diff(s, rest[a]) * sp.diff(s, rest[b])))
    gd = sp.expand(t.det(method="berkowitz"))
    return {
        "g": g,
        "d": d,
        "F": poly_json(f, xs),
        "S": [poly_json(c, xs) for c in chain],
        "leading_degrees": degrees,
        "g_d": poly_json(gd, xs),
    }


def g2_spot():
    gens = principal_generators(2)
    xs = sp.symbols("x0:3")
    f = sp.Matrix(sum((x * a for x, a in zip(xs, gens)), sp.zeros(2))).det()
    t = sp.Matrix(3, 3, lambda i, j: f * sp.diff(f, xs[i], xs[j]) - sp.diff(f, xs[i]) * sp.diff(f, xs[j]))
    return int(t.det().subs({x: 1 for x in xs}))


def main(out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    golden = {"cone": "principal-g3", "chains": [residue(3, 1), residue(3, 2)]}
    (out / "residue_g3.json").write_text(json.dumps(golden, indent=1) + "\n")
    (out / "ma_g2_spot.json").write_text(json.dumps({"point": [1, 1, 1], "det_T": g2_spot()}) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/golden")
