"""Reduction of an algebra along a tau-rigid indecomposable.

j_category maps (algebra, module) to the formal direct sum of smaller
algebras equivalent to the subcategory of objects with no maps from the
module and none to its AR translate.  Closed forms exist exactly for the
four tractable families (linear/cyclic with t = 2, linear with t = n-1,
cyclic self-injective t = n) plus the hereditary and semisimple leaves;
everything else raises UnsupportedFamilyError.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .algebras import (
    AlgebraId,
    Family,
    Indecomposable,
    bongartz,
    check_module,
    cyclic,
    gamma,
    is_projective,
    is_tau_rigid,
    proj_length,
    res,
)


class UnsupportedFamilyError(Exception):
    """The reduction of this algebra is not a direct sum of supported algebras."""


def _canonical(component: AlgebraId) -> AlgebraId | None:
    if component.n == 0:
        return None
    if component.family is Family.LAMBDA and component.n == 1 and component.t == 1:
        return gamma(1, 1)
    return component


@dataclass(frozen=True)
class CategoryShape:
    """A formal direct sum (multiset) of algebra components, kept sorted."""

    components: tuple[AlgebraId, ...]

    @staticmethod
    def of(parts: "list[AlgebraId] | tuple[AlgebraId, ...]") -> "CategoryShape":
        kept = [c for c in map(_canonical, parts) if c is not None]
        return CategoryShape(tuple(sorted(kept)))

    @property
    def rank(self) -> int:
        return sum(c.n for c in self.components)

    def replace(self, index: int, pieces: "CategoryShape") -> "CategoryShape":
        rest = self.components[:index] + self.components[index + 1 :]
        return CategoryShape.of(list(rest) + list(pieces.components))

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return " + ".join(str(c) for c in self.components)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.components]


EMPTY_SHAPE = CategoryShape(())


class PenultClass(Enum):
    PROJECTIVE = "projective"
    RAD_POWER_P1 = "rad_power_p1"
    OTHER = "other"


def classify_gamma_nm1(
    A: AlgebraId, M: Indecomposable
) -> tuple[PenultClass, int | None]:
    """Trichotomy of modules over the linear t = n-1 algebra.

    Returns (class, i) where i is the radical power with M = rad^i(P_1),
    i.e. top = i+1 and length = n-1-i; i is None for the other classes.
    """
    if not (A.is_gamma and A.n >= 3 and A.t == A.n - 1):
        raise ValueError(f"{A} is not a linear algebra with t = n-1")
    check_module(A, M)
    if is_projective(A, M):
        return PenultClass.PROJECTIVE, None
    i = M.top - 1
    if 1 <= i <= A.n - 2 and M.length == A.n - 1 - i:
        return PenultClass.RAD_POWER_P1, i
    return PenultClass.OTHER, None


def _j_gamma_semisimple(A: AlgebraId, M: Indecomposable) -> CategoryShape:
    return CategoryShape.of([gamma(A.n - 1, 1)])


def _j_gamma_t2(A: AlgebraId, M: Indecomposable) -> CategoryShape:
    i = M.top
    if is_projective(A, M):
        return CategoryShape.of([gamma(i - 1, 2), gamma(A.n - i, 2)])
    # non-projectives here are exactly the simples at 1..n-1
    return CategoryShape.of([gamma(i - 1, 2), gamma(A.n - i - 1, 2), gamma(1, 2)])


def _j_gamma_hereditary(A: AlgebraId, M: Indecomposable) -> CategoryShape:
    if is_projective(A, M):
        i = M.top
        return CategoryShape.of([gamma(i - 1, i - 1), gamma(A.n - i, A.n - i)])
    l = M.length
    return CategoryShape.of([gamma(l - 1, l - 1), gamma(A.n - l, A.n - l)])


def _j_gamma_penult(A: AlgebraId, M: Indecomposable) -> CategoryShape:
    kind, i = classify_gamma_nm1(A, M)
    n, l = A.n, M.length
    if kind is PenultClass.PROJECTIVE:
        i = M.top
        return CategoryShape.of([gamma(n - i, n - i), gamma(i - 1, i - 1)])
    if kind is PenultClass.RAD_POWER_P1:
        if i == 1:
            return CategoryShape.of([gamma(l - 1, l - 1), gamma(1, 1), gamma(1, 1)])
        return CategoryShape.of([gamma(n - l, n - l), gamma(l - 1, l - 1)])
    return CategoryShape.of([gamma(l - 1, l - 1), gamma(n - l, n - l - 1)])


def _j_lambda_semisimple(A: AlgebraId, M: Indecomposable) -> CategoryShape:
    return CategoryShape.of([gamma(A.n - 1, 1)])


def _j_lambda_t2(A: AlgebraId, M: Indecomposable) -> CategoryShape:
    if is_projective(A, M):
        return CategoryShape.of([gamma(A.n - 1, 2)])
    return CategoryShape.of([gamma(A.n - 2, 2), gamma(1, 2)])


def _j_lambda_selfinj(A: AlgebraId, M: Indecomposable) -> CategoryShape:
    if is_projective(A, M):
        return CategoryShape.of([gamma(A.n - 1, A.n - 1)])
    l = M.length
    return CategoryShape.of([gamma(l - 1, l - 1), cyclic(A.n - l, A.n - l)])


def _rule_for(A: AlgebraId):
    if A.is_gamma:
        if A.t == 1:
            return _j_gamma_semisimple
        if A.t == 2:
            return _j_gamma_t2
        if A.t == A.n:
            return _j_gamma_hereditary
        if A.t == A.n - 1:
            return _j_gamma_penult
    else:
        if A.t == 1:
            return _j_lambda_semisimple
        if A.t == 2:
            return _j_lambda_t2
        if A.t == A.n:
            return _j_lambda_selfinj
    raise UnsupportedFamilyError(
        f"{A}: the perpendicular category is not a direct sum of supported algebras"
    )


_J_CACHE: dict[tuple[AlgebraId, Indecomposable], CategoryShape] = {}


def j_category(A: AlgebraId, M: Indecomposable) -> CategoryShape:
    """Shape of the perpendicular category of a tau-rigid indecomposable."""
    key = (A, M)
    hit = _J_CACHE.get(key)
    if hit is not None:
        return hit
    rule = _rule_for(A)
    check_module(A, M)
    if not is_tau_rigid(A, M):
        raise ValueError(f"{M} is not tau-rigid in {A}")
    shape = rule(A, M)
    _J_CACHE[key] = shape
    return shape


def supports_j_category(A: AlgebraId) -> bool:
    try:
        _rule_for(A)
    except UnsupportedFamilyError:
        return False
    return True


def closed_form_bongartz(A: AlgebraId, M: Indecomposable) -> frozenset[Indecomposable]:
    """Completion of M to a tau-tilting module, by the explicit formulas.

    Projective M: all projectives.  Non-projective tau-rigid M in the four
    families: M, its proper radical submodules rad^s(M), and the projectives
    at vertices outside the walk [top+1, top+length].
    """
    if not supports_j_category(A):
        raise UnsupportedFamilyError(str(A))
    if not is_tau_rigid(A, M):
        raise ValueError(f"{M} is not tau-rigid in {A}")
    projectives = [
        Indecomposable(j, proj_length(A, j)) for j in range(1, A.n + 1)
    ]
    if is_projective(A, M):
        return frozenset(projectives)
    i, l = M.top, M.length
    rads = [
        Indecomposable(res(A, i + s), l - s) for s in range(1, l)
    ]
    if A.is_gamma:
        excluded = set(range(i + 1, i + l + 1))
    else:
        excluded = {res(A, v) for v in range(i + 1, i + l + 1)}
    kept = [P for P in projectives if P.top not in excluded]
    return frozenset([M] + rads + kept)


def verify_bongartz_closed_form(A: AlgebraId, M: Indecomposable) -> bool:
    """Brute-force completion against the closed-form one."""
    return bongartz(A, M) == closed_form_bongartz(A, M)
