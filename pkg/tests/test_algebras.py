import pytest
from hypothesis import given

from conftest import algebra_with_module, algebra_with_two_modules, cyclic_ids
from tauseq.algebras import (
    AlgebraId,
    Family,
    Indecomposable,
    LatticePoint,
    bongartz,
    cyclic,
    ext1_dim,
    gamma,
    hom_nonzero,
    indecomposables,
    is_projective,
    is_tau_rigid,
    isoc,
    lattice_L,
    lattice_Linv,
    syzygy,
    tau,
    tau_rigid_indecomposables,
)
from tauseq.reps import hom_dim_oracle

I = Indecomposable


def test_algebra_id_validation():
    with pytest.raises(ValueError):
        AlgebraId(Family.GAMMA, 1, 2)
    with pytest.raises(ValueError):
        AlgebraId(Family.GAMMA, 5, 6)
    with pytest.raises(ValueError):
        AlgebraId(Family.LAMBDA, 0, 1)
    with pytest.raises(ValueError):
        AlgebraId(Family.LAMBDA, 3, 5)
    assert cyclic(1, 2).t == 2  # the one-loop special case is admitted
    assert gamma(1, 2) == gamma(1, 1)  # factory canonicalizes rank 1
    assert gamma(0, 7) == gamma(0, 0)


def test_serialization():
    assert gamma(3, 2).to_json() == {"family": "gamma", "n": 3, "t": 2}
    assert cyclic(4, 4).to_json() == {"family": "lambda", "n": 4, "t": 4}
    assert I(2, 3).to_json() == {"top": 2, "len": 3}


def test_indecomposables_gamma32():
    assert indecomposables(gamma(3, 2)) == [
        I(1, 1), I(1, 2), I(2, 1), I(2, 2), I(3, 1)
    ]


def test_indecomposables_counts():
    assert indecomposables(gamma(0, 0)) == []
    for n in range(2, 9):
        assert len(indecomposables(gamma(n, 2))) == 2 * n - 1
    for n in range(1, 7):
        for t in range(1, n + 1):
            assert len(indecomposables(cyclic(n, t))) == n * t
    assert len(indecomposables(cyclic(3, 2))) == 6


def test_tau_examples():
    assert tau(gamma(3, 2), I(1, 1)) == I(2, 1)
    assert tau(gamma(3, 2), I(3, 1)) is None
    assert tau(cyclic(3, 3), I(1, 2)) == I(2, 2)
    assert tau(cyclic(3, 3), I(3, 2)) == I(1, 2)  # wraps around


@given(algebra_with_module())
def test_tau_preserves_length(case):
    A, M = case
    translated = tau(A, M)
    if translated is None:
        assert is_projective(A, M)
    else:
        assert translated.length == M.length
        assert 1 <= translated.top <= A.n


def test_isoc_examples():
    assert isoc(cyclic(3, 2), I(2, 2)) == 3
    assert isoc(gamma(5, 3), I(4, 1)) == 4
    assert isoc(cyclic(3, 3), I(3, 2)) == 1


def test_lattice_examples():
    assert lattice_L(cyclic(3, 2), I(3, 1)) == LatticePoint(0, 0)
    assert lattice_Linv(cyclic(3, 2), LatticePoint(2, 0)) == I(1, 1)
    # horizontal coordinate reduces mod n
    assert lattice_Linv(cyclic(3, 2), LatticePoint(5, 0)) == I(1, 1)


def test_lattice_roundtrip_exhaustive():
    A = cyclic(4, 3)
    for M in indecomposables(A):
        assert lattice_Linv(A, lattice_L(A, M)) == M
    for a in range(4):
        for b in range(3):
            p = LatticePoint(a, b)
            assert lattice_L(A, lattice_Linv(A, p)) == p


@given(algebra_with_module(ids=cyclic_ids))
def test_lattice_roundtrip(case):
    A, M = case
    assert lattice_Linv(A, lattice_L(A, M)) == M


def test_lattice_rejects_linear_and_bad_range():
    with pytest.raises(ValueError):
        lattice_L(gamma(3, 2), I(1, 1))
    with pytest.raises(ValueError):
        lattice_Linv(cyclic(3, 2), LatticePoint(0, 2))


def test_hom_nonzero_examples():
    A = gamma(3, 2)
    assert hom_nonzero(A, I(2, 1), I(1, 2))
    assert not hom_nonzero(A, I(1, 2), I(2, 1))


@given(algebra_with_module())
def test_hom_identity_nonzero(case):
    A, M = case
    assert hom_nonzero(A, M, M)


def test_hom_dim_oracle_examples():
    A = gamma(3, 2)
    assert hom_dim_oracle(A, I(2, 1), I(1, 2)) == 1
    assert hom_dim_oracle(A, I(1, 2), I(2, 1)) == 0
    assert hom_dim_oracle(cyclic(2, 2), I(1, 2), I(1, 2)) == 1


def test_hom_dim_oracle_one_loop_algebra():
    # Over F[x]/(x^2) the loop endomorphism of the free module survives, so
    # End(P) is 2-dimensional; every other Hom space is 1-dimensional.
    A = cyclic(1, 2)
    P, S = I(1, 2), I(1, 1)
    assert hom_dim_oracle(A, P, P) == 2
    assert hom_dim_oracle(A, S, S) == 1
    assert hom_dim_oracle(A, S, P) == 1
    assert hom_dim_oracle(A, P, S) == 1
    for M in (S, P):
        for N in (S, P):
            assert hom_nonzero(A, M, N) == (hom_dim_oracle(A, M, N) > 0)


@given(algebra_with_two_modules())
def test_hom_criterion_matches_oracle(case):
    A, M, N = case
    dim = hom_dim_oracle(A, M, N)
    if A.t <= A.n:
        assert dim in (0, 1)
        assert dim == int(hom_nonzero(A, M, N))
    else:
        assert hom_nonzero(A, M, N) == (dim > 0)


def test_syzygy_examples():
    assert syzygy(gamma(3, 2), I(1, 1)) == I(2, 1)
    assert syzygy(gamma(3, 2), I(1, 2)) is None
    assert syzygy(cyclic(3, 3), I(1, 2)) == I(3, 1)


def test_ext1_examples():
    A = gamma(3, 2)
    assert ext1_dim(A, I(1, 1), I(2, 1)) == 1
    assert ext1_dim(A, I(2, 1), I(1, 1)) == 0
    for N in indecomposables(A):
        assert ext1_dim(A, I(1, 2), N) == 0


def test_ext1_vanishes_against_translate():
    # One direction of the AR formula: no maps into tau M forces Ext^1(M, -) = 0.
    from conftest import supported_algebras

    for A in supported_algebras(6):
        mods = indecomposables(A)
        for M in mods:
            translated = tau(A, M)
            for N in mods:
                if translated is None or not hom_nonzero(A, N, translated):
                    assert ext1_dim(A, M, N) == 0


def test_tau_rigidity():
    for n in range(1, 9):
        A = gamma(n, min(2, n))
        assert all(is_tau_rigid(A, M) for M in indecomposables(A))
    assert not is_tau_rigid(cyclic(1, 2), I(1, 1))
    assert is_tau_rigid(cyclic(1, 2), I(1, 2))
    assert is_tau_rigid(cyclic(3, 3), I(2, 2))


def test_tau_rigid_length_criterion_selfinjective():
    for n in range(1, 9):
        A = cyclic(n, n)
        for M in indecomposables(A):
            assert is_tau_rigid(A, M) == (is_projective(A, M) or M.length < n)


def test_bongartz_example_rank3():
    A = gamma(3, 2)
    assert bongartz(A, I(1, 1)) == frozenset({I(3, 1), I(1, 2), I(1, 1)})


def test_bongartz_projective_gives_projectives():
    for A in (gamma(4, 2), cyclic(4, 4), gamma(5, 4)):
        projectives = frozenset(
            M for M in indecomposables(A) if is_projective(A, M)
        )
        for P in projectives:
            assert bongartz(A, P) == projectives


def test_bongartz_selfinjective_example():
    assert bongartz(cyclic(4, 4), I(1, 2)) == frozenset(
        {I(1, 2), I(2, 1), I(1, 4), I(4, 4)}
    )


def test_bongartz_rejects_non_rigid():
    with pytest.raises(ValueError):
        bongartz(cyclic(1, 2), I(1, 1))


@given(algebra_with_module())
def test_bongartz_is_tau_tilting(case):
    A, M = case
    if not is_tau_rigid(A, M):
        return
    completion = bongartz(A, M)
    assert len(completion) == A.n
    assert M in completion


def test_tau_rigid_listing():
    assert tau_rigid_indecomposables(cyclic(1, 2)) == [I(1, 2)]
    A = gamma(3, 2)
    assert tau_rigid_indecomposables(A) == indecomposables(A)
