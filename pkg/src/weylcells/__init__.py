"""Exact arithmetic in extended affine Weyl groups and their cells."""

from .root_system import RootSystem, Vector, build
from .affine_group import (
    GroupElement,
    bruhat_leq,
    coordinate_form,
    from_word,
    fundamental_translation,
    identity,
    inverse,
    left_descents,
    length,
    longest_finite_element,
    longest_parabolic,
    make_dominant,
    multiply,
    reduced_word,
    right_descents,
    simple_reflection,
    translation,
    translation_from_exponents,
)
from .cell_membership import (
    CellVerdict,
    G2CellIndex,
    SignType,
    Verdict,
    a_value_table,
    conjecture_harness,
    g2_normal_form,
    g2_same_left_cell,
    g2_same_right_cell,
    in_lowest_cell,
    is_admissible,
    lemma_4_2_check,
    lowest_cell_right_distinct,
    sign_type,
    translation_second_lowest,
)
from .type_a import (
    AffinePermutation,
    from_permutation,
    is_d_antichain,
    mu_partition,
    right_cell_certificate,
    same_two_sided_cell,
    to_permutation,
)
from .kl_engine import (
    Ball,
    CellGraph,
    KLTable,
    cell_graph,
    compute_kl_table,
    edge,
    enumerate_ball,
    is_distinguished,
    kl_polynomial,
    mu_coefficient,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
