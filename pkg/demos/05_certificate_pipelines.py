#!/usr/bin/env python3
"""The main pipelines: index-raising quadratic extensions, hyperbolicity
certificates with independent verification, the degree-8 Pfister
decomposition, and the full degree-12 report."""

from wittcert import (
    lemma24_certificate,
    lemma_beta_search,
    pfister,
    qform,
    quaternion,
    tensor,
    thm4_decompose,
    thm6_pipeline,
    verify_certificate,
)

print("=== Index-raising quadratic extensions ===")
phi = qform([1, 1, 1, 1])
d = lemma_beta_search(phi, 1)
print(f"  {phi} with multiplier 1: d = {d} "
      f"(witt index 0 -> 2 over Q(sqrt {d}), and 1 is a norm)")
d = lemma_beta_search(pfister([2, 5]), -2)
print(f"  <<2,5>> with multiplier -2: d = {d}")

print("\n=== Hyperbolicity certificates ===")
pi = pfister([-1, -1])
psi = qform([1, 1, 1, 1, 1, -3])
phi = tensor(pi, psi)
print(f"  phi = <<-1,-1>> (x) {psi}: 24-dimensional, signature 16, not hyperbolic")
for c in (1, 2, 6):
    cert = lemma24_certificate(pi, psi, c)
    print(f"  c = {c}: tower {cert.tower} (degree {cert.tower.degree}), "
          f"verified: {verify_certificate(phi, cert)}")

print("\n=== Degree-8 Pfister decomposition ===")
phi4 = qform([1, 2, 3, 4])
q = quaternion(2, 5)
dec = thm4_decompose(phi4, q)
print(f"  <<2,5>> (x) {phi4} is Witt equivalent to")
print(f"    {dec.scale4}<<{', '.join(map(str, dec.slots4))}>> + "
      f"{dec.scale3}<<{', '.join(map(str, dec.slots3))}>>")

print("\n=== Degree-12 pipeline ===")
rep = thm6_pipeline(qform([1, 1, 1, 1, 1, 2]), quaternion(2, 5),
                    [1, -1, -2, -5, 10, 2])
for name, passed, detail in rep.checks:
    print(f"  check {name}: {'ok' if passed else 'FAILED'} ({detail})")
for m in rep.multipliers:
    tower = m.certificate.tower if m.certificate else None
    print(f"  multiplier {m.multiplier:3d}: {m.status}"
          + (f", tower {tower}" if tower else ""))

print("\n=== Negative control ===")
rep = thm6_pipeline(qform([1, 1, 1, 1, 1, 1]), quaternion(-1, -1))
print(f"  phi = <1,1,1,1,1,1>, Q = (-1,-1): pipeline halted at {rep.halted_at!r}")
