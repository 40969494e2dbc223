"""Exact Kazhdan-Lusztig data and a-value-1 representations of small Coxeter groups."""

from .arith import CycloNumber, IntPoly, LaurentPoly, cyclotomic_modulus, two_cos
from .coxeter import (
    CoxeterGraph,
    Element,
    FiniteCoxeterGroup,
    affine_a,
    alternating_word,
    braid_closure,
    bruhat_leq,
    descents,
    dihedral_graph,
    enumerate_elements,
    multiply,
    normal_form,
    type_a,
    type_d,
    unique_reduced_expression,
    validate_graph,
)
from .hecke import (
    HeckeElement,
    a_value,
    a_values,
    c_basis,
    cell_rep_matrices,
    h_constants,
    kl_table,
    lr_cells,
    specialize_q1,
    t_mul_gen,
)
from .reps import (
    MatrixRep,
    a1_criterion,
    check_relations,
    classify_a_value,
    cwrt_annihilation,
    fixed_subspace,
    is_r_rep,
    minus_eigenspace,
)
from .rrep import RRepSpec, build_Vx, classify, f_map, geometric_rep, holonomy, irreducible, quotient

__version__ = "0.1.0"
