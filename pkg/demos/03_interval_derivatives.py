"""Cantor-Bendixson derivatives of ordinal intervals, symbolically.

The zeta-th derivative of [0, xi] is the set {w^zeta * b : 1 <= b <= q}
with q the quotient of xi by w^zeta, so the whole transfinite iteration
collapses to ordinal division.  The derivative index then feeds the
closed form for the function-space index over the interval.
Run:  python demos/03_interval_derivatives.py
"""

from szlenkcalc import (
    OMEGA as w,
    cb_interval_derivative,
    cb_interval_index,
    gamma_of,
    render_ordinal,
    sz_c_interval,
    sz_ck,
)

xi = w ** 2 * 3 + w
print(f"interval [0, {xi}]")
zeta = 0
while True:
    stage = cb_interval_derivative(xi, zeta)
    if stage.is_empty:
        print(f"  stage {zeta}: empty")
        break
    print(f"  stage {zeta}: {{ w^{render_ordinal(stage.level)} * b : b <= {stage.count} }}")
    zeta += 1
print("derivative index:", cb_interval_index(xi))

# Two independent routes to the same function-space index: the direct
# closed form, and the hull of the point-mass family (gamma of the
# derivative index).
print(f"\n{'xi':12s} {'index':>6s} {'direct':>8s} {'via hull':>9s}")
for xi in [w, w ** 2, w ** 5, w ** w, w ** (w * 2), w ** w * 5 + w]:
    i = cb_interval_index(xi)
    direct = sz_c_interval(xi)
    hull = sz_ck(i)
    assert direct == hull == gamma_of(i)
    print(f"{render_ordinal(xi):12s} {render_ordinal(i):>6s} "
          f"{render_ordinal(direct):>8s} {render_ordinal(hull):>9s}")
