"""Combinatorial model of module categories over linear and cyclic Nakayama algebras.

Supported algebras are quotients of the linearly oriented A_n path algebra
("gamma" family) and of the oriented n-cycle ("lambda" family) by the t-th
power of the arrow ideal.  Every indecomposable module is uniserial and is
identified with the pair (top vertex, length); all operations below work on
that encoding.  Vertex labels live in 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Family(str, Enum):
    GAMMA = "gamma"  # linearly oriented A_n quiver
    LAMBDA = "lambda"  # oriented n-cycle


@dataclass(frozen=True, order=True)
class AlgebraId:
    """A supported Nakayama algebra: family, rank n, nilpotency index t.

    Equality is field-by-field; instances are used as memoization keys.
    Only canonical parameter combinations are constructible: use the
    :func:`gamma` / :func:`cyclic` factories when the inputs may need
    canonicalization (n = 0, n = 1).
    """

    family: Family
    n: int
    t: int

    def __post_init__(self) -> None:
        if self.family is Family.GAMMA:
            if self.n < 0:
                raise ValueError(f"gamma rank must be >= 0, got {self.n}")
            if self.n == 0:
                if self.t != 0:
                    raise ValueError("empty algebra is Gamma(0,0)")
            elif self.n == 1:
                if self.t != 1:
                    raise ValueError("rank-1 linear algebra is Gamma(1,1)")
            elif not 1 <= self.t <= self.n:
                raise ValueError(f"Gamma({self.n},{self.t}) is not canonical")
        else:
            if self.n < 1:
                raise ValueError(f"lambda rank must be >= 1, got {self.n}")
            # 1 <= t <= n, plus the one-loop special case Lambda(1,2).
            if not (1 <= self.t <= self.n or (self.n == 1 and self.t == 2)):
                raise ValueError(f"Lambda({self.n},{self.t}) is not canonical")

    @property
    def is_gamma(self) -> bool:
        return self.family is Family.GAMMA

    def __str__(self) -> str:
        name = "Gamma" if self.is_gamma else "Lambda"
        return f"{name}({self.n},{self.t})"

    def to_json(self) -> dict:
        return {"family": self.family.value, "n": self.n, "t": self.t}


def gamma(n: int, t: int) -> AlgebraId:
    """Linear-family id with the boundary degenerations canonicalized."""
    if n <= 0:
        return AlgebraId(Family.GAMMA, 0, 0)
    if n == 1:
        return AlgebraId(Family.GAMMA, 1, 1)
    return AlgebraId(Family.GAMMA, n, t)


def cyclic(n: int, t: int) -> AlgebraId:
    return AlgebraId(Family.LAMBDA, n, t)


@dataclass(frozen=True, order=True)
class Indecomposable:
    """An indecomposable module, determined by its top vertex and length."""

    top: int
    length: int

    def __str__(self) -> str:
        return f"({self.top},{self.length})"

    def to_json(self) -> dict:
        return {"top": self.top, "len": self.length}


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A point a*f1 + b*f2 of the AR-quiver lattice of a cyclic algebra."""

    a: int
    b: int


def res(A: AlgebraId, x: int) -> int:
    """Vertex residue of x in 1..n."""
    return (x - 1) % A.n + 1


def proj_length(A: AlgebraId, top: int) -> int:
    """Length of the indecomposable projective with the given top."""
    if A.is_gamma:
        return min(A.t, A.n - top + 1)
    return A.t


def check_module(A: AlgebraId, M: Indecomposable) -> None:
    if not 1 <= M.top <= A.n:
        raise ValueError(f"top {M.top} out of range for {A}")
    if not 1 <= M.length <= proj_length(A, M.top):
        raise ValueError(f"length {M.length} invalid at vertex {M.top} of {A}")


def indecomposables(A: AlgebraId) -> list[Indecomposable]:
    """All indecomposables of A, sorted by (top, length)."""
    return [
        Indecomposable(i, l)
        for i in range(1, A.n + 1)
        for l in range(1, proj_length(A, i) + 1)
    ]


def is_projective(A: AlgebraId, M: Indecomposable) -> bool:
    return M.length == proj_length(A, M.top)


def tau(A: AlgebraId, M: Indecomposable) -> Indecomposable | None:
    """AR translate: None on projectives, else shift the top, keep the length."""
    if is_projective(A, M):
        return None
    return Indecomposable(res(A, M.top + 1), M.length)


def isoc(A: AlgebraId, M: Indecomposable) -> int:
    """Vertex index of the socle."""
    return res(A, M.top + M.length - 1)


def lattice_L(A: AlgebraId, M: Indecomposable) -> LatticePoint:
    """Fundamental-domain coordinates (n - isoc(M), length - 1)."""
    if A.is_gamma:
        raise ValueError("lattice coordinates are defined for cyclic algebras only")
    return LatticePoint(A.n - isoc(A, M), M.length - 1)


def lattice_Linv(A: AlgebraId, p: LatticePoint) -> Indecomposable:
    """Inverse of lattice_L; the horizontal coordinate is reduced mod n."""
    if A.is_gamma:
        raise ValueError("lattice coordinates are defined for cyclic algebras only")
    if not 0 <= p.b <= A.t - 1:
        raise ValueError(f"vertical coordinate {p.b} outside 0..{A.t - 1}")
    soc = A.n - p.a % A.n
    length = p.b + 1
    return Indecomposable(res(A, soc - length + 1), length)


def hom_nonzero(A: AlgebraId, M: Indecomposable, N: Indecomposable) -> bool:
    """Interval criterion for Hom(M, N) != 0 between uniserial modules.

    With M = (j, l) and N = (i, k): nonzero iff j lies in the walk
    [i, i+k-1] and i+k-1 lies in the walk [j, j+l-1].  Walks wrap around
    for cyclic algebras and never wrap for linear ones.
    """
    j, l = M.top, M.length
    i, k = N.top, N.length
    if A.is_gamma:
        return i <= j <= i + k - 1 <= j + l - 1
    n = A.n
    return (j - i) % n <= k - 1 and (i + k - 1 - j) % n <= l - 1


def hom_dim(A: AlgebraId, M: Indecomposable, N: Indecomposable) -> int:
    """Exact Hom dimension.

    For t <= n composition series visit no vertex twice, so the dimension
    is 0 or 1 and the interval criterion decides it.  Otherwise (only the
    one-loop Lambda(1,2)) fall back to the matrix oracle.
    """
    if A.t <= A.n:
        return int(hom_nonzero(A, M, N))
    from .reps import hom_dim_oracle

    return hom_dim_oracle(A, M, N)


def syzygy(A: AlgebraId, M: Indecomposable) -> Indecomposable | None:
    """Kernel of the projective cover; None on projectives."""
    if is_projective(A, M):
        return None
    return Indecomposable(
        res(A, M.top + M.length), proj_length(A, M.top) - M.length
    )


def ext1_dim(A: AlgebraId, M: Indecomposable, N: Indecomposable) -> int:
    """dim Ext^1(M, N) from 0 -> syzygy -> projective cover -> M -> 0."""
    omega = syzygy(A, M)
    if omega is None:
        return 0
    cover = Indecomposable(M.top, proj_length(A, M.top))
    return hom_dim(A, omega, N) - hom_dim(A, cover, N) + hom_dim(A, M, N)


def is_tau_rigid(A: AlgebraId, M: Indecomposable) -> bool:
    t = tau(A, M)
    return t is None or not hom_nonzero(A, M, t)


def tau_rigid_indecomposables(A: AlgebraId) -> list[Indecomposable]:
    return [M for M in indecomposables(A) if is_tau_rigid(A, M)]


def perp_tau(A: AlgebraId, M: Indecomposable) -> list[Indecomposable]:
    """Indecomposables X with Hom(X, tau M) = 0 (everything if M projective)."""
    t = tau(A, M)
    if t is None:
        return indecomposables(A)
    return [X for X in indecomposables(A) if not hom_nonzero(A, X, t)]


def bongartz(A: AlgebraId, M: Indecomposable) -> frozenset[Indecomposable]:
    """Ext-projectives of the left perpendicular of tau M (brute force).

    The result is the completion of a tau-rigid M to a tau-tilting module:
    it always has exactly n summands and contains M.
    """
    if not is_tau_rigid(A, M):
        raise ValueError(f"{M} is not tau-rigid in {A}")
    cat = perp_tau(A, M)
    return frozenset(
        X for X in cat if all(ext1_dim(A, X, Y) == 0 for Y in cat)
    )
