"""Signature characters of power maps on finite groups.

The power map g -> g^a permutes a finite group whenever a is coprime to
the group order.  Its sign, as a function of a, is a quadratic character
and therefore a Kronecker symbol for some discriminant.  This package
computes those discriminants three ways (element signs, class signs,
cyclic decompositions), exposes the supporting machinery, and verifies
the identities over an exhaustive catalog of the groups of order at
most 35.
"""

from .catalog import (
    EXPECTED_COUNTS,
    MAX_BUILTIN_ORDER,
    MAX_IMPORT_ORDER,
    ORDER32_NOTICE,
    CatalogEntry,
    ImportReport,
    abelian_group,
    alternating_group,
    builtin_catalog,
    cyclic_semidirect,
    dicyclic_group,
    dihedral_group,
    entry_to_json_dict,
    export_catalog,
    import_groups,
    load_group_file,
    parse_spec,
    symmetric_group,
)
from .equivariant import (
    ABELIAN_ORDER_LIMIT,
    DEFAULT_ENUMERATION_CAP,
    EquivariantMap,
    central_mult_map,
    char_classes_of_map,
    char_elements_of_map,
    count_equivariant,
    enumerate_equivariant,
    is_equivariant,
    odd_agreement_report,
    verify_odd_signature_agreement,
)
from .errors import (
    ClosureTooLarge,
    EnumerationCapExceeded,
    EvenOrder,
    FileError,
    IllDefined,
    IncompleteOrder,
    IsomorphismSearchExceeded,
    ModulusMismatch,
    NoDiscriminantFound,
    NotACharacter,
    NotAGroup,
    NotAHomomorphism,
    NotAnAutomorphism,
    NotASubgroup,
    NotCentral,
    NotCoprime,
    NotEquivariant,
    NotPowerInvariant,
    ParseError,
    PowersignError,
    ZeroInput,
)
from .groups import (
    FiniteGroup,
    Permutation,
    Subgroup,
    are_isomorphic,
    automorphisms,
    cyclic_group,
    direct_product,
    from_generators,
    quotient_by_central,
    semidirect_product,
    sign,
)
from .numtheory import (
    FactoredInt,
    QuadraticCharacter,
    char_of_discriminant,
    chars_equal,
    divisors,
    euler_phi,
    factor,
    fundamental_discriminant,
    identify_discriminant,
    is_restricted_valid,
    kronecker,
    kronecker_column,
    mult_order,
    units_mod,
)
from .powerchar import (
    CSV_FIELDS,
    GroupCharacterReport,
    analyze,
    char_cl,
    char_cl_table,
    char_el,
    char_el_explicit,
    char_el_table,
    class_power_permutation,
    discriminant_cl,
    discriminant_el,
    is_2group_times_odd,
    is_2n_involution_type,
    is_odd_order,
    main_identity_holds,
    n2_exponent,
    power_permutation,
)
from .symdiff import (
    CyclicDecomposition,
    char_on_set,
    coprime_product_covers,
    discriminant_star,
    is_power_invariant,
    n2_star_exponent,
    reduced_cyclic_decomposition,
    shuffled_enumeration,
    symmetric_difference,
)

__version__ = "0.1.0"

__all__ = [
    "ABELIAN_ORDER_LIMIT",
    "CSV_FIELDS",
    "CatalogEntry",
    "ClosureTooLarge",
    "CyclicDecomposition",
    "DEFAULT_ENUMERATION_CAP",
    "EXPECTED_COUNTS",
    "EnumerationCapExceeded",
    "EquivariantMap",
    "EvenOrder",
    "FactoredInt",
    "FileError",
    "FiniteGroup",
    "GroupCharacterReport",
    "IllDefined",
    "ImportReport",
    "IncompleteOrder",
    "IsomorphismSearchExceeded",
    "MAX_BUILTIN_ORDER",
    "MAX_IMPORT_ORDER",
    "ModulusMismatch",
    "NoDiscriminantFound",
    "NotACharacter",
    "NotAGroup",
    "NotAHomomorphism",
    "NotAnAutomorphism",
    "NotASubgroup",
    "NotCentral",
    "NotCoprime",
    "NotEquivariant",
    "NotPowerInvariant",
    "ORDER32_NOTICE",
    "ParseError",
    "Permutation",
    "PowersignError",
    "QuadraticCharacter",
    "Subgroup",
    "ZeroInput",
    "abelian_group",
    "alternating_group",
    "analyze",
    "are_isomorphic",
    "automorphisms",
    "builtin_catalog",
    "central_mult_map",
    "char_cl",
    "char_cl_table",
    "char_classes_of_map",
    "char_el",
    "char_el_explicit",
    "char_el_table",
    "char_elements_of_map",
    "char_of_discriminant",
    "char_on_set",
    "chars_equal",
    "class_power_permutation",
    "coprime_product_covers",
    "count_equivariant",
    "cyclic_group",
    "cyclic_semidirect",
    "dicyclic_group",
    "dihedral_group",
    "direct_product",
    "discriminant_cl",
    "discriminant_el",
    "discriminant_star",
    "divisors",
    "entry_to_json_dict",
    "enumerate_equivariant",
    "euler_phi",
    "export_catalog",
    "factor",
    "from_generators",
    "fundamental_discriminant",
    "identify_discriminant",
    "import_groups",
    "is_2group_times_odd",
    "is_2n_involution_type",
    "is_equivariant",
    "is_odd_order",
    "is_power_invariant",
    "is_restricted_valid",
    "kronecker",
    "kronecker_column",
    "load_group_file",
    "main_identity_holds",
    "mult_order",
    "n2_exponent",
    "n2_star_exponent",
    "odd_agreement_report",
    "parse_spec",
    "power_permutation",
    "quotient_by_central",
    "reduced_cyclic_decomposition",
    "semidirect_product",
    "shuffled_enumeration",
    "sign",
    "symmetric_difference",
    "symmetric_group",
    "units_mod",
    "verify_odd_signature_agreement",
]
