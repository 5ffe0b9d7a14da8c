"""Exact census of signed wheel graphs up to switching isomorphism."""

from wheelcensus.errors import (
    BudgetExceededError,
    CensusError,
    CountOverflowError,
    NoClosedFormError,
)
from wheelcensus.wheel import (
    HUB,
    RimSignature,
    SignedWheel,
    count_switching_classes,
    is_balanced,
    is_switching_equivalent,
    normalize_to_rim,
    switch_vertex,
)
from wheelcensus.dihedral import (
    DihedralElement,
    act,
    canonical_form,
    enumerate_representatives,
    orbit_size,
)
from wheelcensus.counting import (
    bracelets,
    necklaces,
    nearest_twelfth,
    partition_count,
    psi4_case_counts,
    psi_closed,
    psi_total,
)
from wheelcensus.distance import (
    DistanceTuple,
    check_key_lemma,
    distance_tuple,
    edge_distance,
    min_pair_distance,
)
from wheelcensus.census import (
    CensusTable,
    build_table,
    export_representatives,
    psi_enumerated,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "HUB",
    "BudgetExceededError",
    "CensusError",
    "CensusTable",
    "CountOverflowError",
    "DihedralElement",
    "DistanceTuple",
    "NoClosedFormError",
    "RimSignature",
    "SignedWheel",
    "act",
    "bracelets",
    "build_table",
    "canonical_form",
    "check_key_lemma",
    "count_switching_classes",
    "distance_tuple",
    "edge_distance",
    "enumerate_representatives",
    "export_representatives",
    "is_balanced",
    "is_switching_equivalent",
    "min_pair_distance",
    "necklaces",
    "nearest_twelfth",
    "normalize_to_rim",
    "orbit_size",
    "partition_count",
    "psi4_case_counts",
    "psi_closed",
    "psi_enumerated",
    "psi_total",
    "switch_vertex",
    "verify_all",
]
