"""Szlenk-index closed forms and the attainability map.

The two norming-family constructions realize prescribed index values; their
audit trails show the exact per-epsilon derivation bounds squeezing the
answer from both sides.
Run:  python demos/05_index_closed_forms.py
"""

from szlenkcalc import (
    INFINITY,
    OMEGA as w,
    NormingParams,
    Ordinal,
    attainable,
    omega_pow,
    render_ext_ordinal,
    sz_convex_hull,
    sz_geometric_family,
    sz_max_rule,
    sz_staircase_family,
)

# Convex hulls round the index up to a gamma number; products and sums take
# the maximum of the factors.
print("hull of a set with index w*2+1:", sz_convex_hull(w * 2 + 1))
print("tensor rule on (w, w^2):       ", sz_max_rule("tensor", w, w ** 2))
print("a non-fragmentable factor:     ", sz_max_rule("tensor", INFINITY, w))

# Geometric family: one scale theta, trees of order xi^n + 1 with
# xi = w^(w^alpha); total index w^(w^(alpha+1)).
for alpha in (0, 1):
    value, audit = sz_geometric_family(NormingParams(alpha=Ordinal(alpha)))
    print(f"\ngeometric family, alpha={alpha}: index {render_ext_ordinal(value)}")
    for b in audit[:4]:
        print(f"  [{b.kind}] {b.subject} eps={b.epsilon}: {render_ext_ordinal(b.value)}")

# Staircase family: scale schedule theta_n and heights along a fundamental
# sequence; total index w^(alpha+beta) for any sum exceeding both parts.
value, audit = sz_staircase_family(NormingParams(alpha=w, beta=Ordinal(1)))
print(f"\nstaircase family, alpha=w beta=1: index {render_ext_ordinal(value)}")
for b in audit:
    if b.subject.startswith("union["):
        print(f"  aggregate at eps={b.epsilon}: {render_ext_ordinal(b.value)} "
              f"(strictly below the total)")

# Which values occur at all: 1 and most powers of w, but never successors,
# other sums, or powers w^(w^eta) with eta a limit.
print("\nattainability of candidate index values:")
for x in (Ordinal(1), Ordinal(5), w, w + 1, w ** 2, omega_pow(w),
          omega_pow(w + 1), omega_pow(omega_pow(w))):
    verdict = attainable("sz", x)
    print(f"  {render_ext_ordinal(x):12s} {'yes' if verdict else 'no'}")
