"""Exact counting of complete tau-exceptional sequences over Nakayama algebras."""

from .algebras import (
    AlgebraId,
    Family,
    Indecomposable,
    LatticePoint,
    bongartz,
    cyclic,
    ext1_dim,
    gamma,
    hom_dim,
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
from .counting import (
    ChoiceChain,
    count_algebra,
    count_family,
    count_shape,
    count_shape_naive,
    enumerate_chains,
    leaf_count,
    multinomial,
    sequence_table,
)
from .perpendicular import (
    CategoryShape,
    UnsupportedFamilyError,
    classify_gamma_nm1,
    j_category,
    verify_bongartz_closed_form,
)
from .reps import hom_dim_oracle

__all__ = [
    "AlgebraId",
    "CategoryShape",
    "ChoiceChain",
    "Family",
    "Indecomposable",
    "LatticePoint",
    "UnsupportedFamilyError",
    "bongartz",
    "classify_gamma_nm1",
    "count_algebra",
    "count_family",
    "count_shape",
    "count_shape_naive",
    "cyclic",
    "enumerate_chains",
    "ext1_dim",
    "gamma",
    "hom_dim",
    "hom_dim_oracle",
    "hom_nonzero",
    "indecomposables",
    "is_projective",
    "is_tau_rigid",
    "isoc",
    "j_category",
    "lattice_L",
    "lattice_Linv",
    "leaf_count",
    "multinomial",
    "sequence_table",
    "syzygy",
    "tau",
    "tau_rigid_indecomposables",
    "verify_bongartz_closed_form",
]
