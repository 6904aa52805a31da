"""Independent combinatorial oracles and exact closed-form evaluation.

Restricted Fubini / Stirling numbers with a brute-force ordered-partition
counter, acyclic-function counts with a brute-force enumerator, and exact
arithmetic in Q(sqrt(3)) for the closed formulas of the two radical-square
families.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


class NonIntegerResultError(Exception):
    """A closed-form evaluation failed to collapse to a rational integer."""


def restricted_fubini(n: int, m: int) -> int:
    """Ordered set partitions of {1..n} with blocks of size at most m."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    values = [1] + [0] * n
    for k in range(1, n + 1):
        values[k] = sum(comb(k, l) * values[k - l] for l in range(1, min(m, k) + 1))
    return values[n]


@lru_cache(maxsize=None)
def restricted_stirling(n: int, k: int, m: int) -> int:
    """Unordered partitions of {1..n} into k blocks of size at most m."""
    if n < 0 or k < 0 or m < 1:
        raise ValueError("need n, k >= 0 and m >= 1")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    # place the element n together with l-1 chosen companions
    return sum(
        comb(n - 1, l - 1) * restricted_stirling(n - l, k - 1, m)
        for l in range(1, min(m, n) + 1)
    )


def ordered_partitions_count_bruteforce(n: int, m: int) -> int:
    """Count ordered partitions by enumerating set partitions directly.

    Walks restricted-growth strings, prunes blocks that exceed size m, and
    weighs each partition into k blocks by k! instead of materializing the
    orderings.
    """
    if n == 0:
        return 1
    total = 0
    sizes = [0] * n

    def walk(position: int, blocks: int) -> None:
        nonlocal total
        if position == n:
            total += factorial(blocks)
            return
        for b in range(blocks + 1):
            if b < blocks and sizes[b] >= m:
                continue
            sizes[b] += 1
            walk(position + 1, blocks if b < blocks else blocks + 1)
            sizes[b] -= 1

    walk(0, 0)
    return total


def acyclic_count(a: int, b: int) -> int:
    """Functions {1..b} -> {1..a+b} with no cycle inside the domain."""
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    if b == 0:
        return 1
    return a * (a + b) ** (b - 1)


def acyclic_count_bruteforce(a: int, b: int) -> int:
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    if b == 0:
        return 1
    codomain = a + b
    total = 0
    f = [0] * (b + 1)

    def has_cycle() -> bool:
        for start in range(1, b + 1):
            slow = start
            seen = set()
            while 1 <= slow <= b and slow not in seen:
                seen.add(slow)
                slow = f[slow]
            if 1 <= slow <= b and slow in seen:
                return True
        return False

    def fill(x: int) -> None:
        nonlocal total
        if x > b:
            if not has_cycle():
                total += 1
            return
        for image in range(1, codomain + 1):
            f[x] = image
            fill(x + 1)

    fill(1)
    return total


@dataclass(frozen=True)
class QuadExt:
    """An element a + b*sqrt(3) of the real quadratic field Q(sqrt(3))."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a: "int | Fraction", b: "int | Fraction" = 0) -> "QuadExt":
        return QuadExt(Fraction(a), Fraction(b))

    def __add__(self, other: "QuadExt") -> "QuadExt":
        return QuadExt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QuadExt") -> "QuadExt":
        return QuadExt(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "QuadExt") -> "QuadExt":
        return QuadExt(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def scale(self, c: "int | Fraction") -> "QuadExt":
        return QuadExt(self.a * c, self.b * c)

    def inverse(self) -> "QuadExt":
        norm = self.a * self.a - 3 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero element of Q(sqrt(3))")
        return QuadExt(self.a / norm, -self.b / norm)

    def __pow__(self, exponent: int) -> "QuadExt":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        out = QuadExt.of(1)
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    def as_integer(self) -> int:
        if self.b != 0 or self.a.denominator != 1:
            raise NonIntegerResultError(f"{self.a} + {self.b}*sqrt(3)")
        return int(self.a)


_SQRT3 = QuadExt.of(0, 1)
_INV_SQRT3 = _SQRT3.inverse()
_ROOT_PLUS = QuadExt.of(-1, 1)  # sqrt(3) - 1
_ROOT_MINUS = QuadExt.of(-1, -1)  # -sqrt(3) - 1


def _root_difference(exponent: int) -> QuadExt:
    return _ROOT_PLUS**exponent - _ROOT_MINUS**exponent


def g_closed(n: int) -> int:
    """Closed form n!/sqrt(3) * ((sqrt3-1)^(-n-1) - (-sqrt3-1)^(-n-1))."""
    if n < 0:
        raise ValueError("need n >= 0")
    value = _INV_SQRT3 * _root_difference(-n - 1)
    return value.scale(factorial(n)).as_integer()


def l_closed(n: int) -> int:
    """Closed form for the cyclic radical-square counts.

    Substituting the closed linear-family counts into
    L(n) = n*G(n-1) + n*(n-1)*G(n-2) gives exponents -n and -n+1.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    value = _INV_SQRT3 * (_root_difference(-n) + _root_difference(-n + 1))
    return value.scale(factorial(n)).as_integer()
