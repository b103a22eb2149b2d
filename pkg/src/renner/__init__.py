"""Renner monoids of reductive monoids attached to a dominant weight choice:
construction, monoid algebra decomposition, irreducible representations and
characters, with independent brute-force verification oracles."""

__version__ = "0.1.0"

from .algebra import AlgebraElement, MatrixOverGroupAlgebra, MonoidAlgebra
from .chartable import CharacterTable, character_table
from .cross_section import (
    build_cross_section,
    complete_entry,
    lambda_star_sets,
    projection_components,
)
from .errors import RennerError
from .kernels import available_backends
from .oracle import (
    center_dimension,
    exhaustive_property_suite,
    match_rook,
    mobius_recursive,
    rook_monoid,
)
from .rep import (
    InducedRep,
    MatrixRep,
    all_irreducibles,
    char_table_of,
    chi_star,
    irreps_of_parabolic,
    rho_star,
)
from .seminormal import (
    bipartitions,
    hyperoctahedral_irrep,
    partitions,
    standard_tableaux,
    symmetric_group_irrep,
)
from .monoid import (
    build_context,
    class_elements,
    enumerate_monoid,
    format_element,
    group_element_of,
    inverse,
    make_element,
    multiply,
    p_projection,
    parse_element,
    transporter,
)
from .polytope import (
    build_face_lattice,
    face_action,
    mobius,
    orbit_vertices,
    standard_face,
    subfaces,
)
from .weyl import (
    build_root_datum,
    conjugacy_classes,
    enumerate_group,
    min_coset_rep,
    simple_reflection,
)
