"""Exact combinatorics of root data, Weyl groups and GL_n L-parameters."""

from .chamber import (
    AStarSpace,
    HyperbolicElement,
    a_star_space,
    dominant_conjugate,
    is_regular,
    maximal_levi_of,
    project,
    z_of_nu,
)
from .errors import LanglandsError
from .grammar import format_lparam, parse_lparam
from .lparam import (
    GaloisTypeLabel,
    GLnLParameter,
    GLnStandardTriple,
    Segment,
    assemble,
    centralizer_shape,
    component_groups_agree,
    classify,
    equivalent,
    is_relevant,
    is_tempered,
    new_lparameter,
    new_triple,
    segment,
    twist,
    z_of,
    z_star_of,
)
from .root_datum import BasedRootDatum, cartan_matrix, dual, gln_datum, new_based_root_datum
from .weyl import (
    GaloisAction,
    WeylElement,
    WeylGroup,
    coset_min_rep,
    galois_action,
    generate_weyl,
    invariant_lattice,
    parabolic_subgroup,
    relative_weyl,
    weyl_dual_iso,
)

__all__ = [name for name in dir() if not name.startswith("_")]
