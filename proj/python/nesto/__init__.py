"""Quasisymmetric enumerators of nestohedra and graph-associahedra."""

from ._nesto import (
    BuildingSet,
    CapacityError,
    F,
    F_buildset,
    F_fundamental,
    F_star,
    Graph,
    InvalidInput,
    OverflowError,
    QSym,
    chromatic_symmetric,
    cli,
    collisions,
    face_vector,
    family_F,
    family_vertex_counts,
    maximal_nested_sets,
    nested_sets_by_size,
    run_criterion,
    tree_kernel,
    vertex_count,
    zeta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
