#!/usr/bin/env python3
"""Flatten Q(theta, i), theta = 2^(1/4), onto the primitive element g = theta + i.

Emits the modulus (minimal polynomial of g), the images of g under the
automorphisms r: (i, theta) -> (i, i*theta) and s: (i, theta) -> (-i, theta),
and alpha = (1 + theta + theta^2 + theta^3)(1 + i), all as coordinate vectors
over the power basis 1, g, ..., g^7.  Uses sympy only; independent of the C++
library it feeds.
"""
import json
import sys

import sympy as sp

theta, i_, x = sp.symbols("theta i x")
TOWER = [theta**4 - 2, i_**2 + 1]


def reduce_tower(expr):
    expr = sp.expand(expr)
    expr = sp.rem(sp.Poly(expr, i_), sp.Poly(TOWER[1], i_)).as_expr()
    expr = sp.rem(sp.Poly(sp.expand(expr), theta), sp.Poly(TOWER[0], theta)).as_expr()
    return sp.expand(expr)


def tower_coords(expr):
    """Coordinates over the Q-basis theta^a * i^b, a < 4, b < 2."""
    p = sp.Poly(reduce_tower(expr), theta, i_)
    return [sp.Rational(p.coeff_monomial(theta**a * i_**b)) for b in range(2) for a in range(4)]


def main():
    gen = theta + i_
    powers = [reduce_tower(gen**k) for k in range(9)]
    basis = sp.Matrix([tower_coords(pk) for pk in powers[:8]]).T  # columns = g^k
    assert basis.rank() == 8, "theta + i is not a primitive element"

    def flatten(expr):
        sol = basis.LUsolve(sp.Matrix(tower_coords(expr)))
        return [sp.nsimplify(c) for c in sol]

    # Minimal polynomial: g^8 = sum c_k g^k.
    c = flatten(powers[8])
    modulus = [-ck for ck in c] + [sp.Integer(1)]
    t = sp.symbols("t")
    m_poly = sp.Poly(list(reversed(modulus)), t)
    assert sp.Poly(sp.minimal_polynomial(gen.subs({theta: 2**sp.Rational(1, 4), i_: sp.I}), t), t) == m_poly

    def apply_aut(expr, img_i, img_theta):
        return reduce_tower(sp.expand(expr).subs({i_: img_i, theta: img_theta}, simultaneous=True))

    r_img = flatten(apply_aut(gen, i_, i_ * theta))
    s_img = flatten(apply_aut(gen, -i_, theta))
    alpha = flatten((1 + theta + theta**2 + theta**3) * (1 + i_))

    def enc(v):
        return [int(q) if q.q == 1 else f"{q.p}/{q.q}" for q in map(sp.Rational, v)]

    json.dump(
        {"modulus": enc(modulus), "r_image": enc(r_img), "s_image": enc(s_img), "alpha": enc(alpha)},
        sys.stdout,
        indent=2,
    )
    print()


if __name__ == "__main__":
    main()
