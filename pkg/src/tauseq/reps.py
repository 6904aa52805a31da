"""Independent Hom-space oracle via explicit quiver representations.

A module (top, length) becomes a vertex-graded representation over the
rationals: one basis vector per composition factor, arrow maps acting as
shifts down the radical series.  A homomorphism is a family of per-vertex
matrices commuting with the arrow maps; the oracle counts the dimension
of the solution space of that linear system by exact Gaussian elimination.
This knows nothing about the interval criterion it is used to check.
"""

from __future__ import annotations

from fractions import Fraction

from .algebras import AlgebraId, Indecomposable, check_module, res


def _layers_at_vertex(A: AlgebraId, M: Indecomposable) -> dict[int, list[int]]:
    """Map vertex -> radical-layer indices of M sitting at that vertex."""
    out: dict[int, list[int]] = {}
    for s in range(M.length):
        out.setdefault(res(A, M.top + s), []).append(s)
    return out


def _arrows(A: AlgebraId) -> list[tuple[int, int]]:
    if A.is_gamma:
        return [(v, v + 1) for v in range(1, A.n)]
    return [(v, res(A, v + 1)) for v in range(1, A.n + 1)]


def _rank(rows: list[list[Fraction]]) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    rows = [row[:] for row in rows]
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def hom_dim_oracle(A: AlgebraId, M: Indecomposable, N: Indecomposable) -> int:
    """Exact dimension of Hom(M, N) from the intertwining linear system."""
    check_module(A, M)
    check_module(A, N)
    m_layers = _layers_at_vertex(A, M)
    n_layers = _layers_at_vertex(A, N)

    # One unknown per pair of basis vectors sitting at a common vertex.
    unknowns: dict[tuple[int, int], int] = {}
    for v, m_list in m_layers.items():
        for c in m_list:
            for r in n_layers.get(v, []):
                unknowns[(r, c)] = len(unknowns)
    if not unknowns:
        return 0

    # For an arrow v -> w, f(alpha . b_c) = alpha . f(b_c) reads
    # x[c+1 -> r_w] = x[c -> r_w - 1] with missing layers acting as zero.
    rows: list[list[Fraction]] = []
    zero = Fraction(0)
    for v, w in _arrows(A):
        for c in m_layers.get(v, []):
            for r_w in n_layers.get(w, []):
                row = [zero] * len(unknowns)
                nontrivial = False
                if c + 1 < M.length:
                    row[unknowns[(r_w, c + 1)]] += 1
                    nontrivial = True
                if r_w - 1 in n_layers.get(v, []):
                    row[unknowns[(r_w - 1, c)]] -= 1
                    nontrivial = True
                if nontrivial:
                    rows.append(row)

    return len(unknowns) - _rank(rows)
