"""Multiquadratic towers M = Q(sqrt d1[, sqrt d2]): place splitting, base
change of forms, hyperbolicity and Witt index over M, and norm-group
membership.

Hyperbolicity over M is decided purely locally: a form over a number field is
hyperbolic iff it is hyperbolic at every completion.  Two global ingredients
keep the place set finite: the discriminant must be a square in M, which for
a rational discriminant is the Kummer condition "class lies in the subgroup
generated by the tower generators"; given that, every place outside the prime
support of (entries + generators, 2, real) is automatically split.

Norm membership for biquadratic towers uses the intersection law
N*_L cap N*_L' = Q*^2 * N*_M, reducing each test to a ternary isotropy check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import DomainError, Rat, prime_support, squarefree_rep
from .localfields import (
    REAL,
    EngineContext,
    LocalField,
    Place,
    _odd_class_pair,
    _odd_class_rep,
    form_class_at,
    local_aniso_dim,
    rationals_at,
)
from .dyadic import dyadic_subgroup
from . import forms
from .forms import QForm, qform


@dataclass(frozen=True, slots=True)
class ExtensionTower:
    """M = Q(sqrt d1[, sqrt d2]) with square-free generators != 1; degree 1,
    2 or 4.  `downgraded` records that dependent generators were discarded."""

    generators: tuple[int, ...]
    downgraded: bool = False

    @property
    def degree(self) -> int:
        return 1 << len(self.generators)

    def subgroup(self) -> set[int]:
        """Square classes of Q becoming squares in M (Kummer group)."""
        out = {1}
        for g in self.generators:
            out |= {squarefree_rep(g * h) for h in out}
        return out

    def __str__(self) -> str:
        if not self.generators:
            return "Q"
        return "Q(" + ", ".join(f"sqrt {d}" for d in self.generators) + ")"


@dataclass(frozen=True, slots=True)
class PlaceFiber:
    """Completions of a tower above one place of Q, with multiplicities."""

    base_place: Place
    completions: tuple[tuple[LocalField, int], ...]


def make_tower(ds) -> ExtensionTower:
    """Canonical tower from requested generators.  Square generators are
    discarded and dependent biquadratic generators are downgraded to the
    smaller tower (with the flag set), mirroring how the biquadratic case of
    the certificate search degenerates."""
    gens: list[int] = []
    downgraded = False
    for d in ds:
        if Fraction(d) == 0:
            raise DomainError("tower generator must be nonzero")
        c = squarefree_rep(d)
        if c == 1 or c in gens:
            downgraded = downgraded or c != 1
            continue
        if len(gens) == 1 and squarefree_rep(gens[0] * c) == 1:
            downgraded = True
            continue
        gens.append(c)
    if len(gens) > 2:
        raise DomainError("towers of degree > 4 are out of scope")
    gens.sort(key=lambda d: (abs(d), d < 0))
    return ExtensionTower(tuple(gens), downgraded)


TRIVIAL_TOWER = ExtensionTower(())


# ----------------------------------------------------------------------
# Place fibers.


def places_over(M: ExtensionTower, v: Place, ctx: EngineContext | None = None) -> PlaceFiber:
    """Splitting of v in M, determined by the local square classes of the
    generators: locally-square generators split the fiber, the others cut out
    a quadratic or biquadratic completion with the matching e and f."""
    if v.is_real:
        if any(g < 0 for g in M.generators):
            return PlaceFiber(v, ((LocalField(REAL, (-1,)), M.degree // 2),))
        return PlaceFiber(v, ((LocalField(REAL), M.degree),))
    p = v.p
    base = rationals_at(v)
    if p == 2:
        sub = dyadic_subgroup(M.generators)
        classes = sorted(sub - {1})
        if not classes:
            return PlaceFiber(v, ((base, M.degree),))
        f = 2 if 5 in sub else 1
        e = len(sub) // f
        gens = tuple(classes[:1] if len(sub) == 2 else classes[:2])
        E = LocalField(v, gens, e, f)
        return PlaceFiber(v, ((E, M.degree // (e * f)),))
    # Odd prime: classes as (valuation parity, nonresidue bit).
    pairs = {(0, 0)}
    for g in M.generators:
        gp = _odd_class_pair(g, p)
        pairs |= {((gp[0] + h[0]) % 2, (gp[1] + h[1]) % 2) for h in pairs}
    if len(pairs) == 1:
        return PlaceFiber(v, ((base, M.degree),))
    e = 2 if any(h[0] for h in pairs) else 1
    f = len(pairs) // e
    reps = sorted(_odd_class_rep(h, p) for h in pairs if h != (0, 0))
    gens = tuple(reps[:1] if len(pairs) == 2 else reps[:2])
    E = LocalField(v, gens, e, f)
    return PlaceFiber(v, ((E, M.degree // (e * f)),))


def _relevant_places(phi: QForm, M: ExtensionTower) -> list[Place]:
    primes = prime_support(list(phi.entries) + list(M.generators))
    return [REAL] + [Place(p) for p in sorted(primes)]


# ----------------------------------------------------------------------
# Hyperbolicity and Witt index over M.


def aniso_dim_over(phi: QForm, M: ExtensionTower, ctx: EngineContext | None = None) -> int:
    """Dimension of the anisotropic kernel of phi over M.

    Computed as the maximum of the local anisotropic dimensions over all
    completions at relevant places, together with the global Kummer
    discriminant bound: an even-dimensional form whose discriminant is not a
    square in M has anisotropic dimension at least 2, and such a failure can
    hide at places outside the prime support.
    """
    n = phi.dim
    if n == 0:
        return 0
    lower = n % 2
    if n % 2 == 0 and disc_in_tower(forms.disc(phi), M) is False:
        lower = 2
    for v in _relevant_places(phi, M):
        fiber = places_over(M, v, ctx)
        for E, _mult in fiber.completions:
            cls = form_class_at(phi.entries, E, ctx)
            lower = max(lower, local_aniso_dim(cls, E, ctx))
    return lower


def disc_in_tower(d: int, M: ExtensionTower) -> bool:
    """Kummer: a rational square class is a square in M iff it lies in the
    subgroup generated by the tower generators."""
    return squarefree_rep(d) in M.subgroup()


def witt_index_over(phi: QForm, M: ExtensionTower, ctx: EngineContext | None = None) -> int:
    """(dim - aniso_dim over M) / 2; exact over number fields by the
    local-global principle for the Witt index."""
    return (phi.dim - aniso_dim_over(phi, M, ctx)) // 2


def is_hyperbolic_over(phi: QForm, M: ExtensionTower, ctx: EngineContext | None = None) -> bool:
    if phi.dim % 2:
        return False
    return aniso_dim_over(phi, M, ctx) == 0


@dataclass(frozen=True, slots=True)
class PlaceEvidence:
    """One completion's verdict inside a hyperbolicity certificate."""

    place: Place
    completion: LocalField
    multiplicity: int
    aniso_dim: int


def hyperbolicity_evidence(phi: QForm, M: ExtensionTower,
                           ctx: EngineContext | None = None) -> list[PlaceEvidence]:
    """Per-completion anisotropic dimensions at every relevant place."""
    out = []
    for v in _relevant_places(phi, M):
        fiber = places_over(M, v, ctx)
        for E, mult in fiber.completions:
            cls = form_class_at(phi.entries, E, ctx)
            out.append(PlaceEvidence(v, E, mult, local_aniso_dim(cls, E, ctx)))
    return out


# ----------------------------------------------------------------------
# Norm groups.


def norm_member(c: Rat, d: int, ctx: EngineContext | None = None) -> bool:
    """c in N*_{Q(sqrt d)/Q}, via representability by <1, -d>."""
    if Fraction(c) == 0:
        raise DomainError("norm membership of 0")
    d = squarefree_rep(d)
    if d == 1:
        raise DomainError("trivial extension: norm group is all of Q*")
    return forms.represents(qform([1, -d]), c, ctx)


def norm_member_tower(c: Rat, M: ExtensionTower, ctx: EngineContext | None = None) -> bool:
    """c in Q*^2 * N*_{M/Q}.  Trivial tower: everything.  Quadratic tower:
    plain norm membership.  Biquadratic tower: membership in both quadratic
    subextension norm groups (the intersection law
    N*_L cap N*_L' = Q*^2 * N*_M)."""
    if Fraction(c) == 0:
        raise DomainError("norm membership of 0")
    if M.degree == 1:
        return True
    if M.degree == 2:
        return norm_member(c, M.generators[0], ctx)
    return norm_member(c, M.generators[0], ctx) and norm_member(c, M.generators[1], ctx)
