"""Exact descent combinatorics: quasisymmetric generating functions,
Schur positivity of horizontal rotation closures, and the cyclic
straightening action on boxed standard Young tableaux."""

from ._core import (
    DescentSet,
    Permutation,
    PermMultiset,
    Partition,
    Shape,
    Tableau,
    QSymF,
    MExpansion,
    SchurExpansion,
    Polynomial,
    JdtResult,
    descent_set,
    cyclic_descent_set,
    inverse,
    rotate,
    all_permutations,
    horizontal_closure,
    left_closure,
    descent_class,
    rotated_descent_set,
    rsk,
    partitions_of,
    dominates,
    add_one_box,
    boxed_shape,
    enumerate_syt,
    add_mod,
    cdes_rot,
    cdes_rot_prime,
    descent_set_rot,
    reading_word,
    inverse_reading_word,
    box_entry,
    rotation_witnesses,
    is_rotated_standard,
    from_inverse_reading_word,
    inverse_reading_words,
    qsym_of,
    expand_polynomial,
    to_monomial_basis,
    is_symmetric,
    schur_fundamental,
    schur_monomial,
    kostka_number,
    schur_expand,
    is_schur_positive,
    pieri_s1,
    to_fundamental,
    straighten_step,
    unstraighten_step,
    jdt,
    ijdt,
    jdt_inverse,
    cyclic_rotate,
    CyclicExtensionWitness,
    verify_extension,
    run_suite,
    suite_names,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
