"""Involutions, labelled Motzkin paths, and exact pattern-avoidance counting."""

from .avoidance import (
    Base,
    ClassDescriptor,
    PathPredicate,
    VerificationReport,
    is_centrosymmetric,
    parse_class,
    path_predicate,
    verify_characterization,
)
from .biane import involution_to_path, path_to_involution, rc_reflection_agrees
from .counting import (
    CountReport,
    CountRow,
    Formula,
    GuardError,
    census_bfile,
    census_csv,
    count_class,
    formula_for,
    gen_involutions,
    gen_paths,
    oracle,
    run_census,
)
from .motzkin import (
    LabelledPath,
    MAXIMAL,
    UNITARY,
    encode_path,
    irreducible_components,
    is_dyck,
    is_maximal,
    is_symmetric,
    is_unitary,
    parse_path,
    path_height,
    reflect,
    relabel,
    step_height,
)
from .permutations import (
    as_involution,
    avoids_all,
    connected_components,
    contains_pattern,
    excedances,
    format_permutation,
    inverse,
    parse_permutation,
    pattern_witness,
    reverse,
    reverse_complement,
    validate_permutation,
)

__version__ = "0.1.0"
