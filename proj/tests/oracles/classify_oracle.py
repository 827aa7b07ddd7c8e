"""Reference classifications computed directly with sympy.

Independent of the C++ code: real roots come from sympy's RootOf machinery,
multiplicities from repeated differentiation at the exact root.

Run from the repository root:
    python3 tests/oracles/classify_oracle.py > tests/data/classify_oracle.json
"""
import json

import sympy as sp

x1, x2, t = sp.symbols("x1 x2 t")

SUITE = [
    "x1^3+x2^3",
    "x1^2*x2^2",
    "x2^2*(x1^2+x2^2)",
    "x1^4+x2^4",
    "x1*x2*(x2-x1)",
    "x1^2+x2^2",
]

EXTRA = [
    "x2^2*(2*x2^2-x1^2)",
    "x1^5-3*x1^3*x2^2+2*x1*x2^4",
    "(x2-x1)^3*(x1+2*x2)^2*x1",
    "x1^6-x2^6",
    "x1^3*x2^2+x2^5",
    "x2^4",
    "(x2-x1)^3",
    "3*(2*x1+x2)^4",
]


def multiplicity_at(expr, root):
    """Order of vanishing of the univariate expr (in t) at an exact root."""
    k = 0
    e = expr
    while sp.simplify(e.subs(t, root)) == 0:
        k += 1
        e = sp.diff(e, t)
    return k


def mult_infinity(form, m):
    """Multiplicity of x1 in a form of degree m."""
    poly = sp.Poly(form, x1, x2)
    k = 0
    while all(mon[0] >= k + 1 for mon in poly.monoms()):
        k += 1
    return k


def real_lines(form, deg):
    """[(slope, multiplicity)] with slope a sympy number or 'inf'."""
    q = sp.expand(form.subs({x1: 1, x2: t}))
    out = []
    if q != 0:
        roots = sp.Poly(q, t).real_roots()
        for r in sorted(set(roots), key=lambda z: float(z)):
            out.append((r, roots.count(r)))
    inf = mult_infinity(form, deg)
    if inf:
        out.append(("inf", inf))
    return out


def slope_json(s):
    if s == "inf":
        return "inf"
    if s.is_Rational:
        return str(s)
    mp = sp.Poly(sp.minimal_polynomial(s, t), t)
    _, mp = mp.primitive()
    if mp.LC() < 0:
        mp = -mp
    return {"minpoly": [str(c) for c in reversed(mp.all_coeffs())], "approx": float(s)}


def phi_mult(phi, slope, m):
    if slope == "inf":
        return mult_infinity(phi, m)
    return multiplicity_at(sp.expand(phi.subs({x1: 1, x2: t})), slope)


def classify(text):
    phi = sp.expand(sp.sympify(text.replace("^", "**")))
    m = sp.Poly(phi, x1, x2).total_degree()
    lines_phi = real_lines(phi, m)
    fac = sp.factor_list(phi)[1]
    linear = [(f, e) for f, e in fac if sp.Poly(f, x1, x2).total_degree() == 1]
    if any(e == m for _, e in linear):
        f = [f for f, e in linear if e == m][0]
        case = "I" if f in (x1, x2) else "II"
    else:
        case = "III"
    ordd = max([e for _, e in lines_phi], default=0)
    half = sp.Rational(m, 2)
    h_phi = max(half, sp.Integer(ordd))
    sectors = []
    hess = sp.expand(sp.diff(phi, x1, 2) * sp.diff(phi, x2, 2) - sp.diff(phi, x1, x2) ** 2)
    if case == "III" and hess != 0:
        for slope, omega in real_lines(hess, 2 * m - 4):
            n = phi_mult(phi, slope, m)
            sec = {"slope": slope_json(slope), "type": "A" if n >= 1 else "B", "n": n, "omega": omega}
            sec["M"] = None if n >= 1 else omega + 2
            sec["h"] = str(max(half, sp.Integer(n))) if n >= 1 else None
            sectors.append(sec)
    b = [s["M"] for s in sectors if s["type"] == "B"]
    return {
        "polynomial": text,
        "case": case,
        "m": m,
        "h_phi": str(h_phi),
        "ordd_phi": ordd,
        "m_phi": max(b) if b else None,
        "z_inclusion": (not b) and hess != 0,
        "sectors": sectors,
    }


def main():
    out = {"suite": [classify(s) for s in SUITE], "extra": [classify(s) for s in EXTRA]}
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
