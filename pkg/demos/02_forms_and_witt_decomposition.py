#!/usr/bin/env python3
"""Quadratic forms over Q: invariants, isotropy by local-global comparison,
Witt decomposition, isometry, Pfister forms and similarity factors."""

from wittcert import (
    disc,
    hasse_invariant,
    in_G,
    in_In,
    is_hyperbolic,
    is_isometric,
    is_isotropic,
    isotropy_obstruction,
    pfister,
    qform,
    represents,
    signature,
    tensor,
    witt_decompose,
    REAL,
)

print("=== Invariants ===")
phi = qform([1, 1, 1, 1, 1, 2])
print(f"  phi = {phi}")
print(f"  dim {phi.dim}, disc {disc(phi)}, signature {signature(phi)}, "
      f"hasse at real = {hasse_invariant(phi, REAL)}")

print("\n=== Isotropy (Hasse-Minkowski) ===")
for entries in [(1, -1), (1, 1), (1, 1, 1, 1, -7), (1, -2, -5, 10)]:
    f = qform(entries)
    verdict = is_isotropic(f)
    line = f"  {f}: {'isotropic' if verdict else 'anisotropic'}"
    if not verdict:
        line += f" (local obstruction at {isotropy_obstruction(f)})"
    print(line)

print("\n=== Witt decomposition ===")
for entries in [(1, -1), (1, 1, 1, 1), (1, 1, 1, 1, -7, -7), (1, 2, -3, 5, -7)]:
    f = qform(entries)
    w, aniso, cls = witt_decompose(f)
    print(f"  {f}: witt index {w}, anisotropic dimension {aniso}, "
          f"hasse -1 at {sorted(str(v) for v in cls.hasse_minus_places)}")

print("\n=== Isometry by complete invariants ===")
print(f"  <1,-1> ~ <2,-2>: {is_isometric(qform([1, -1]), qform([2, -2]))}")
print(f"  <1,7> ~ <2,14>:  {is_isometric(qform([1, 7]), qform([2, 14]))}"
      "   (witness: 2(1/4)^2 + 14(1/4)^2 = 1)")
print(f"  <1,1> ~ <1,2>:   {is_isometric(qform([1, 1]), qform([1, 2]))}")

print("\n=== Pfister forms ===")
pi = pfister([2, 5])
print(f"  <<2,5>> = {pi}, hyperbolic: {is_hyperbolic(pi)}")
print(f"  <<2,5>> represents -2: {represents(pi, -2)}")
print(f"  -2 is a similarity factor of <<2,5>>: {in_G(pi, -2)}   (Pfister forms are round)")

print("\n=== Powers of the fundamental ideal ===")
print(f"  <1,1,1,1> in I^2: {in_In(qform([1, 1, 1, 1]), 2)},"
      f" in I^3: {in_In(qform([1, 1, 1, 1]), 3)}  (signature 4)")
four_fold = pfister([2, 3, 5, 7])
print(f"  <<2,3,5,7>> in I^4: {in_In(four_fold, 4)}")
psi = tensor(pfister([2, 5]), qform([1, 1, 1, 1, 1, 2]))
print(f"  <<2,5>> (x) <1,1,1,1,1,2> in I^4: {in_In(psi, 4)}   (trivial involution discriminant)")
