"""Tour of exact ordinal arithmetic in Cantor normal form.

Every value below is a finite symbolic object; nothing is approximated.
Run:  python demos/01_ordinal_arithmetic.py
"""

from szlenkcalc import (
    OMEGA as w,
    Ordinal,
    cofinality,
    fundamental_sequence,
    gamma_of,
    parse_ordinal,
    render_ordinal,
)

# Parsing accepts any expression over w, naturals, +, *, ^ and evaluates it
# to canonical normal form.
for text in ["w^2*3 + w + 5", "(w+1)*2", "2^(w^2+w+3)", "w^w^w"]:
    print(f"{text:18s} -> {parse_ordinal(text)}")

# Ordinal arithmetic is noncommutative: absorption on the left, growth on
# the right.
print("\n1 + w  =", 1 + w)
print("w + 1  =", w + 1)
print("2 * w  =", 2 * w)
print("w * 2  =", w * 2)

# Division is Euclidean from the left: a = b*q + r with r < b.
a, b = w ** 3 + w * 4 + 1, w ** 2
q, r = divmod(a, b)
print(f"\ndivmod({a}, {b}) = ({q}, {r})")
print("reassembled:", b * q + r)

# Gamma numbers (0 and the powers of w) are the ordinals closed under
# addition from below; gamma_of rounds up to the next one.
for x in [Ordinal(5), w * 2 + 1, w ** 2, w ** 2 + 1]:
    print(f"gamma_of({render_ordinal(x):8s}) = {gamma_of(x)}")

# Cofinality below epsilon_0 is 0, 1 or w; fundamental sequences give the
# canonical climb to each limit.
print("\ncofinality of w^w:", cofinality(w ** w))
for n in range(1, 6):
    print(f"(w^(w+1))[{n}] =", fundamental_sequence(w ** (w + 1), n))
