"""Exact algebra of orbit configuration spaces of surfaces: group
backends with a decidable word problem, the graded Lie algebra of
decorated strand generators in Lyndon normal form, its enveloping
chord-diagram algebra with PBW straightening, the graded Poisson model
for iterated loop homology, and the cohomology ring of the configuration
space, all over exact rationals with brute-force oracles."""

from .assoc import AssocContext, AssocElement, LambdaElement
from .cohomology import CohomContext, CohomElement
from .errors import ParseError, ResourceLimitError
from .groups import (
    FiniteGroup,
    GroupContext,
    GroupElement,
    LatticeGroup,
    SurfaceGroup,
    cyclic_group,
    group_from_spec,
    load_group,
)
from .lie import LieContext, LieElement
from .poisson import PoissonContext, PoissonElement, PoissonGrading

__version__ = "0.1.0"

__all__ = [
    "AssocContext",
    "AssocElement",
    "CohomContext",
    "CohomElement",
    "FiniteGroup",
    "GroupContext",
    "GroupElement",
    "LambdaElement",
    "LatticeGroup",
    "LieContext",
    "LieElement",
    "ParseError",
    "PoissonContext",
    "PoissonElement",
    "PoissonGrading",
    "ResourceLimitError",
    "SurfaceGroup",
    "cyclic_group",
    "group_from_spec",
    "load_group",
    "__version__",
]
