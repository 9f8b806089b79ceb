"""Exact counting, distributions, and uniform sampling of homomorphisms
from a finite group into wreath products of a finite abelian group with
symmetric groups."""

from .groups import (
    AbelianGroup,
    Abelianization,
    FiniteGroup,
    GroupSpec,
    GroupTableError,
    PermutationAction,
    SizeCapError,
    SubgroupClass,
    UnknownGroupError,
    abelianization,
    build_group,
    builtin_group,
    coset_action,
    full_group_class,
    group_from_permutations,
    group_from_table,
    subgroup_classes,
)
from .homs import AbelianHom, HomGroup, hom_count_abelian, hom_group
from .orbits import OrbitTypeData, TransferMap, orbit_type_data, transfer_map
from .counting import (
    CountTable,
    DecayConstant,
    DistributionTable,
    WreathHomCounter,
    count_table,
    decay_constant,
    delta_distribution,
    fixed_point_free_probability,
    hom_count_direct,
    hom_count_wreath,
    index_two_subgroup_count,
    weyl_hom_count,
    weyl_limit_ratio,
)
from .oracle import (
    ExplicitWreath,
    build_wreath_group,
    centralizer_order,
    enumerate_homs,
    fixed_point_strata_uniform,
    oracle_delta,
)
from .sampling import (
    WreathHom,
    fold_values,
    full_images,
    sample_hom,
    sample_orbit_type,
    verify_wreath_hom,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AbelianHom",
    "Abelianization",
    "CountTable",
    "DecayConstant",
    "DistributionTable",
    "ExplicitWreath",
    "FiniteGroup",
    "GroupSpec",
    "GroupTableError",
    "HomGroup",
    "OrbitTypeData",
    "PermutationAction",
    "SizeCapError",
    "SubgroupClass",
    "TransferMap",
    "UnknownGroupError",
    "WreathHom",
    "WreathHomCounter",
    "abelianization",
    "build_group",
    "build_wreath_group",
    "builtin_group",
    "centralizer_order",
    "coset_action",
    "count_table",
    "decay_constant",
    "delta_distribution",
    "enumerate_homs",
    "fixed_point_free_probability",
    "fixed_point_strata_uniform",
    "fold_values",
    "full_group_class",
    "full_images",
    "group_from_permutations",
    "group_from_table",
    "hom_count_abelian",
    "hom_count_direct",
    "hom_count_wreath",
    "hom_group",
    "index_two_subgroup_count",
    "oracle_delta",
    "orbit_type_data",
    "sample_hom",
    "sample_orbit_type",
    "subgroup_classes",
    "transfer_map",
    "verify_wreath_hom",
    "weyl_hom_count",
    "weyl_limit_ratio",
]
