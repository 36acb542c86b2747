#!/usr/bin/env python3
"""Quaternion algebras and symplectic involution algebras (A, sigma) built
as Ad(phi) (x) (Q, can): degree, index, the involution discriminant, and the
reduction of every multiplier question to a single trace form."""

from wittcert import (
    InvolutionAlgebra,
    degree_index,
    in_G,
    involution_discriminant,
    is_split,
    norm_form,
    pfister_slots,
    qform,
    quaternion,
    reduce_to_form,
)

print("=== Quaternion algebras ===")
for a, b in [(1, 7), (-1, -1), (2, 5)]:
    q = quaternion(a, b)
    print(f"  ({a},{b}): norm form {norm_form(q)}, split: {is_split(q)}")

print("\n=== Involution algebras ===")
alg = InvolutionAlgebra(qform([1, 1, 1, 1, 1, 2]), quaternion(2, 5))
deg, idx = degree_index(alg)
print(f"  (A, sigma) from phi = {alg.phi}, Q = {alg.q}")
print(f"  degree {deg}, index {idx}")

delta, trivial = involution_discriminant(alg)
print(f"  Delta(sigma) = <<{', '.join(map(str, pfister_slots(delta)))}>>, trivial: {trivial}")
print("  (-2 is a norm of (2,5): witness -2 = 0^2 - 2*1^2 - 5*0^2 + 10*0^2)")

psi = reduce_to_form(alg)
print(f"  trace form psi = phi (x) <<2,5>> of dimension {psi.dim}")
print(f"  sample multipliers of psi: 10 -> {in_G(psi, 10)}, -2 -> {in_G(psi, -2)}, "
      f"3 -> {in_G(psi, 3)}")

print("\n=== A definite control case ===")
alg2 = InvolutionAlgebra(qform([1, 1, 1, 1, 1, 1]), quaternion(-1, -1))
delta2, trivial2 = involution_discriminant(alg2)
print(f"  phi = {alg2.phi}, Q = {alg2.q}")
print(f"  Delta(sigma) = <<-1,-1,-1>>, trivial: {trivial2}  (definite 8-dimensional form)")

print("\n=== Index-parity of the discriminant condition ===")
try:
    involution_discriminant(InvolutionAlgebra(qform([1, 1, 1]), quaternion(-1, -1)))
except Exception as exc:
    print(f"  odd phi with a division quaternion: {exc}")
