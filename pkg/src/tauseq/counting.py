"""Counting and enumeration of complete tau-exceptional sequences.

A complete sequence over a direct sum of algebras is built backwards: pick
a tau-rigid indecomposable in some component, replace that component by its
perpendicular reduction, recurse until nothing is left.  count_algebra /
count_shape exploit the interleaving theorem (multinomial times product of
per-component counts); count_shape_naive and enumerate_chains run the bare
definitional recursion and serve as oracles for it.

All counts are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator

from .algebras import (
    AlgebraId,
    Indecomposable,
    cyclic,
    gamma,
    tau_rigid_indecomposables,
)
from .perpendicular import EMPTY_SHAPE, CategoryShape, j_category

FAMILY_KEYS = ("gamma2", "lambda2", "lambdan", "gamman1")

# Reference values for the verify suites (gamma2 is OEIS A080599).
GAMMA2_COUNTS = (1, 1, 3, 12, 66, 450, 3690, 35280, 385560, 4740120)  # n = 0..9
LAMBDA2_COUNTS = (1, 4, 15, 84, 570, 4680, 44730, 488880, 6010200, 82101600)  # n = 1..10


def multinomial(sizes: list[int]) -> int:
    total = 0
    out = 1
    for s in sizes:
        total += s
        out *= comb(total, s)
    return out


def leaf_count(A: AlgebraId) -> int:
    """Complete-sequence count of a hereditary or semisimple linear leaf."""
    if not A.is_gamma:
        raise ValueError(f"{A} is not a leaf algebra")
    if A.n == 0:
        return 1
    if A.t == 1:
        return factorial(A.n)
    if A.t == A.n:
        return hereditary_count(A.n)
    raise ValueError(f"{A} is not a leaf algebra")


def hereditary_count(m: int) -> int:
    """(m+1)^(m-1), with the m = 0 case defined as 1."""
    if m == 0:
        return 1
    return (m + 1) ** (m - 1)


_COUNT_CACHE: dict[AlgebraId, int] = {}


def count_algebra(A: AlgebraId) -> int:
    """Number of complete tau-exceptional sequences over A (memoized).

    Hereditary and semisimple leaves use their known totals; everything
    else is summed structurally over the tau-rigid indecomposables.
    """
    hit = _COUNT_CACHE.get(A)
    if hit is not None:
        return hit
    if A.is_gamma and (A.n == 0 or A.t == 1 or A.t == A.n):
        value = leaf_count(A)
    elif not A.is_gamma and A.t == 1:
        value = factorial(A.n)
    else:
        value = sum(
            count_shape(j_category(A, M)) for M in tau_rigid_indecomposables(A)
        )
    _COUNT_CACHE[A] = value
    return value


def clear_count_cache() -> None:
    _COUNT_CACHE.clear()


def count_shape(S: CategoryShape) -> int:
    """Interleaving count: multinomial of the ranks times component counts."""
    out = multinomial([c.n for c in S.components])
    for c in S.components:
        out *= count_algebra(c)
    return out


def count_shape_naive(S: CategoryShape) -> int:
    """Definitional recursion on the whole shape; exponential, oracle only."""
    if not S.components:
        return 1
    total = 0
    for index, component in enumerate(S.components):
        for M in tau_rigid_indecomposables(component):
            total += count_shape_naive(S.replace(index, j_category(component, M)))
    return total


@dataclass(frozen=True)
class ChoiceChain:
    """One complete sequence, recorded as its chain of last-element choices.

    Steps are outermost-first: the first step is the final module of the
    sequence, chosen in the starting shape; each later step is taken in the
    shape left by rewriting the previous component with its reduction.
    """

    steps: tuple[tuple[int, Indecomposable], ...]

    def to_json(self) -> dict:
        return {
            "steps": [
                {"component": i, "module": M.to_json()} for i, M in self.steps
            ]
        }


def enumerate_chains(
    S: CategoryShape, limit: int | None = None
) -> Iterator[ChoiceChain]:
    """Yield every valid chain of S in lexicographic (component, module) order."""

    def rec(shape: CategoryShape, prefix: list) -> Iterator[ChoiceChain]:
        if not shape.components:
            yield ChoiceChain(tuple(prefix))
            return
        for index, component in enumerate(shape.components):
            for M in tau_rigid_indecomposables(component):
                prefix.append((index, M))
                yield from rec(shape.replace(index, j_category(component, M)), prefix)
                prefix.pop()

    produced = rec(S, [])
    if limit is None:
        return produced

    def limited() -> Iterator[ChoiceChain]:
        for count, chain in enumerate(produced):
            if count >= limit:
                return
            yield chain

    return limited()


def family_algebra(key: str, n: int) -> AlgebraId:
    """Algebra behind one of the CLI family aliases at rank n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if key == "gamma2":
        return gamma(n, 2)
    if key == "lambda2":
        return cyclic(n, 2)
    if key == "lambdan":
        return cyclic(n, n)
    if key == "gamman1":
        if n == 1:
            return gamma(1, 1)
        return gamma(n, n - 1)
    raise ValueError(f"unknown family {key!r}")


def count_family(key: str, n: int) -> int:
    """Count for a family alias; n = 0 is allowed and counts the empty algebra."""
    if n == 0:
        return 1
    if key == "gamman1" and n == 1:
        return 1  # convention: rank 1 leaves no valid nilpotency index
    return count_algebra(family_algebra(key, n))


def sequence_table(key: str, n_max: int) -> list[int]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return [count_family(key, n) for n in range(1, n_max + 1)]


def _sweep_shapes(max_rank: int, start_n_max: int) -> set[CategoryShape]:
    seen: set[CategoryShape] = set()
    stack: list[CategoryShape] = [EMPTY_SHAPE]
    for key in FAMILY_KEYS:
        for n in range(1, start_n_max + 1):
            stack.append(CategoryShape.of([family_algebra(key, n)]))
    visited: set[CategoryShape] = set()
    while stack:
        shape = stack.pop()
        if shape in visited:
            continue
        visited.add(shape)
        if shape.rank <= max_rank:
            seen.add(shape)
        for index, component in enumerate(shape.components):
            for M in tau_rigid_indecomposables(component):
                stack.append(shape.replace(index, j_category(component, M)))
    return seen


def reachable_shapes(
    max_rank: int, start_n_max: int | None = None
) -> set[CategoryShape]:
    """All shapes reachable from the four families, filtered to rank <= max_rank.

    Starting shapes are the single-algebra shapes of every family alias with
    1 <= n <= start_n_max; expansion follows every tau-rigid choice.  Every
    reduction step lowers the total rank by exactly one, so wide low-rank
    shapes only appear below tall starts; with start_n_max = None the cap is
    raised until the collected set stops growing, which enumerates the full
    (finite) reachable set of rank <= max_rank.
    """
    if start_n_max is not None:
        return _sweep_shapes(max_rank, start_n_max)
    previous = _sweep_shapes(max_rank, max_rank + 1)
    cap = max_rank + 2
    stable = 0
    while True:
        current = _sweep_shapes(max_rank, cap)
        stable = stable + 1 if current == previous else 0
        if stable == 2:
            return current
        previous = current
        cap += 1


# Transcriptions of the published recurrences, used as theorem checks against
# the structural counts.  Dynkin-A factors always go through hereditary_count
# so no 1**(-1)-style literal powers can occur.


def gamma2_recurrence(n: int) -> int:
    if n <= 1:
        return 1
    g = lambda m: count_family("gamma2", m)
    proj = sum(
        multinomial([n - i, i - 1]) * g(n - i) * g(i - 1) for i in range(1, n + 1)
    )
    # the simple-module term carries an implicit rank-1 part in its multinomial
    simp = sum(
        multinomial([n - i - 1, i - 1, 1]) * g(n - i - 1) * g(i - 1)
        for i in range(1, n)
    )
    return proj + simp


def lambda2_relation(n: int) -> int:
    g = lambda m: count_family("gamma2", m)
    if n == 1:
        return g(0)
    return n * g(n - 1) + n * (n - 1) * g(n - 2)


def lambdan_recurrence(n: int) -> int:
    h = lambda m: count_family("lambdan", m)
    return n * sum(
        comb(n - 1, i - 1) * hereditary_count(i - 1) * h(n - i)
        for i in range(1, n + 1)
    )


def gamman1_recurrence(n: int) -> int:
    """Transcribed recurrence for the linear t = n-1 family, n >= 3."""
    if n < 3:
        raise ValueError("the recurrence needs n >= 3")
    a = hereditary_count
    k = lambda m: count_family("gamman1", m)
    projectives = sum(
        comb(n - 1, i - 1) * a(n - i) * a(i - 1) for i in range(1, n + 1)
    )
    deep_rad_powers = sum(
        comb(n - 1, i - 1) * a(n - i) * a(i - 1) for i in range(1, n - 2)
    )
    first_rad_power = (n - 1) * (n - 2) ** (n - 3)
    others = sum(
        comb(n - 1, i - 1) * (n - i - 1) * a(i - 1) * k(n - i)
        for i in range(1, n - 1)
    )
    return projectives + deep_rad_powers + first_rad_power + others
