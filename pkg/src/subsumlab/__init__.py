"""Exact counting of the sets represented by integer partitions."""

__version__ = "0.1.0"

from .partitions import (  # noqa: E402
    DISTINCT,
    UNRESTRICTED,
    Partition,
    PartitionClass,
    asymptotic_log_count,
    count,
    count_table,
    enumerate_partitions,
)
from .subsum import (  # noqa: E402
    RepresentedSet,
    extract_subset,
    represent,
    represents,
    represents_full_range,
)
from .census import (  # noqa: E402
    CensusResult,
    ForbidResult,
    ResourceCapError,
    census,
    census_range,
    forbid_count,
    forbid_scan,
)
from .lemma import (  # noqa: E402
    achieved_delta,
    check_aux_inequalities,
    check_conclusion,
    exponent_table,
    theorem2_constants,
)

__all__ = [
    "DISTINCT",
    "UNRESTRICTED",
    "Partition",
    "PartitionClass",
    "asymptotic_log_count",
    "count",
    "count_table",
    "enumerate_partitions",
    "RepresentedSet",
    "extract_subset",
    "represent",
    "represents",
    "represents_full_range",
    "CensusResult",
    "ForbidResult",
    "ResourceCapError",
    "census",
    "census_range",
    "forbid_count",
    "forbid_scan",
    "achieved_delta",
    "check_aux_inequalities",
    "check_conclusion",
    "exponent_table",
    "theorem2_constants",
]
