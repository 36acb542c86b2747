#!/usr/bin/env python3
"""Square classes and local computations: valuations, square classes of
completions, Hilbert symbols, and the product formula.

Every number here is exact; the dyadic answers come from bounded residue
searches in explicit models of the 2-adic completions.
"""

from wittcert import (
    REAL,
    LocalField,
    Place,
    dyadic_square_test,
    hilbert_symbol,
    local_square_class,
    padic_valuation,
    prime_support,
    rationals_at,
    squarefree_rep,
)
from fractions import Fraction

print("=== Square classes of Q ===")
for r in [18, Fraction(-4, 9), Fraction(8, 3), 1000]:
    print(f"  squarefree_rep({r}) = {squarefree_rep(r)}")
print(f"  v_3(1/9) = {padic_valuation(3, Fraction(1, 9))}")
print(f"  prime_support([15, -2]) = {sorted(prime_support([15, -2]))}")

print("\n=== Square classes of completions ===")
Q2, Q5 = rationals_at(Place(2)), rationals_at(Place(5))
print(f"  class of 2 in Q_5: {local_square_class(2, Q5)}   (2 is a nonresidue mod 5)")
print(f"  class of 4 in Q_5: {local_square_class(4, Q5)}")
print(f"  class of 17 in Q_2: {local_square_class(17, Q2)}  (units = 1 mod 8 are 2-adic squares)")
print(f"  17 a square in Q_2 by residue search: {dyadic_square_test(17, Q2)}")
print(f"  5 a square in Q_2 by residue search:  {dyadic_square_test(5, Q2)}")

print("\n=== Hilbert symbols ===")
R = LocalField(REAL)
print(f"  (2, 5)_5  = {hilbert_symbol(2, 5, Q5)}   (tame formula)")
print(f"  (-1,-1)_2 = {hilbert_symbol(-1, -1, Q2)}   (no solution of x^2+y^2+z^2 = 0 mod 8)")
print(f"  (-1,-1)_R = {hilbert_symbol(-1, -1, R)}")

print("\n=== Product formula ===")
for a, b in [(2, 5), (-1, -1), (3, 7), (-6, 15)]:
    places = [R] + [rationals_at(Place(p)) for p in sorted(prime_support([a, b]))]
    values = [hilbert_symbol(a, b, E) for E in places]
    names = ["real"] + [str(p) for p in sorted(prime_support([a, b]))]
    prod = 1
    for v in values:
        prod *= v
    terms = ", ".join(f"{n}:{v:+d}" for n, v in zip(names, values))
    print(f"  (a,b) = ({a},{b}):  {terms}  ->  product = {prod:+d}")

print("\n=== Symbols over extension completions ===")
# Any even-degree extension of a local field splits every rational quaternion
# algebra; the bounded residue searches reproduce this from first principles.
E_unram = LocalField(Place(2), gens=(5,), e=1, f=2)
E_quartic = LocalField(Place(2), gens=(3, 5), e=2, f=2)
print(f"  (-1,-1) over Q_2(sqrt 5):          {hilbert_symbol(-1, -1, E_unram)}")
print(f"  (-1,-1) over Q_2(sqrt 3, sqrt 5):  {hilbert_symbol(-1, -1, E_quartic)}")
