"""Normal surfaces in triangulated 3-manifolds: enumeration, analysis, split-link and unknot checks."""

from ._core import (
    Error,
    InputError,
    Link,
    ResourceLimitError,
    Triangulation,
    analyze,
    connect_boundary_points,
    cycle_class,
    fixtures,
    fundamental_surfaces,
    haken_sum,
    homology,
    matching_equations,
    separates,
    split_link_check,
)

__all__ = [
    "Error",
    "InputError",
    "Link",
    "ResourceLimitError",
    "Triangulation",
    "analyze",
    "connect_boundary_points",
    "cycle_class",
    "fixtures",
    "fundamental_surfaces",
    "haken_sum",
    "homology",
    "matching_equations",
    "separates",
    "split_link_check",
]
