"""Quaternion algebras over Q and the structural model of symplectic
involution algebras (A, sigma) = Ad(phi) (x) (Q, can).

The pair (phi, Q) is a complete proxy for every question asked here: the
multiplier group and the hyperbolicity behaviour of (A, sigma) coincide with
those of the trace form psi = phi (x) n_Q, so no matrix model of the algebra
is ever built.  The discriminant of the involution is carried as a 3-fold
Pfister representative <<a, b, disc phi>>; triviality of the class is
hyperbolicity of that form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import DomainError, squarefree_rep
from .forms import QForm, disc, is_hyperbolic, is_isotropic, pfister, tensor
from .localfields import EngineContext


@dataclass(frozen=True, slots=True)
class QuaternionAlg:
    """The quaternion algebra (a, b) over Q."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise DomainError("quaternion symbol entries must be nonzero")

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def quaternion(a, b) -> QuaternionAlg:
    return QuaternionAlg(squarefree_rep(a), squarefree_rep(b))


@dataclass(frozen=True, slots=True)
class InvolutionAlgebra:
    """(A, sigma) = Ad(phi) (x) (Q, can): degree 2*dim(phi), symplectic."""

    phi: QForm
    q: QuaternionAlg

    @property
    def degree(self) -> int:
        return 2 * self.phi.dim


def norm_form(q: QuaternionAlg) -> QForm:
    """The norm form <<a, b>> = <1, -a, -b, ab>."""
    return pfister([q.a, q.b])


def is_split(q: QuaternionAlg, ctx: EngineContext | None = None) -> bool:
    """Split iff the norm form is isotropic (iff every local symbol is +1)."""
    return is_isotropic(norm_form(q), ctx)


def degree_index(alg: InvolutionAlgebra, ctx: EngineContext | None = None) -> tuple[int, int]:
    """(degree, Schur index); this constructor only produces index <= 2."""
    return alg.degree, 1 if is_split(alg.q, ctx) else 2


def involution_discriminant(alg: InvolutionAlgebra,
                            ctx: EngineContext | None = None) -> tuple[QForm, bool]:
    """The discriminant of the symplectic involution as the 3-fold Pfister
    representative <<a, b, disc phi>>, plus its triviality.

    Defined only when 2*ind(A) divides deg(A); for this constructor that
    fails exactly when the quaternion is division and dim(phi) is odd.
    """
    degree, index = degree_index(alg, ctx)
    if degree % (2 * index):
        raise DomainError(
            f"discriminant undefined: 2*ind = {2 * index} does not divide deg = {degree}"
        )
    c = disc(alg.phi)
    delta = pfister([alg.q.a, alg.q.b, c])
    return delta, is_hyperbolic(delta, ctx)


def reduce_to_form(alg: InvolutionAlgebra) -> QForm:
    """The form phi (x) <<a, b>> through which all multiplier and
    hyperbolicity questions about (A, sigma) are answered."""
    return tensor(alg.phi, norm_form(alg.q))
