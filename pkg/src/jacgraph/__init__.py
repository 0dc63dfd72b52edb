"""Multidegree stability on vertex-weighted multigraphs.

The package models dual graphs of nodal curves: multigraphs with loops,
parallel edges and a genus attached to every vertex.  Given a rational
polarization it enumerates semistable, quasistable and stable
multidegrees, reduces arbitrary multidegrees to their unique
quasistable representative, computes degree class groups and
spanning-tree counts, and organises quasistable multidegrees into
strata indexed by edge subsets.

A compiled kernel (built from ``_speedups.pyx`` when Cython and a C
compiler are available) accelerates the subset scans; a pure-Python
twin with identical behaviour is always present and is selected
automatically for inputs whose intermediate values might overflow
machine integers, or when the environment variable ``JACGRAPH_PURE``
is set to ``1``.
"""

from .errors import (
    BlowupValueError,
    CanonicalPolarizationError,
    DegreeBudgetError,
    DegreeMismatchError,
    DisconnectedGraphError,
    EmptyGraphError,
    GraphConstructionError,
    GraphMismatchError,
    GuardLimitError,
    InvalidSubsetError,
    JacGraphError,
    NonIntegralRestrictionError,
    PolarizationTotalError,
    ReductionGuardError,
    UnknownEdgeError,
    UnknownVertexError,
)
from .graph import Edge, Multigraph
from .lattice import (
    Cochain,
    PicardGroup,
    characteristic,
    complexity,
    det_bareiss,
    laplacian_apply,
    laplacian_matrix,
    laplacian_pairing,
    picard_group,
    same_class,
    smith_normal_form,
)
from .polarization import Polarization, canonical_polarization
from .quasistable import (
    DefectReport,
    ReduceReport,
    StratumContext,
    semistable_equality_witness,
)
from .strata import (
    BlowupBucket,
    BlowupDecomposition,
    PushforwardDegrees,
    StrataReport,
    StratumRow,
    blowup_decomposition,
    pushforward_multidegree,
    strata_report,
    stratum_multidegrees,
)
from ._kernel import HAVE_SPEEDUPS, implementation_name

__version__ = "0.1.0"

__all__ = [
    "BlowupBucket",
    "BlowupDecomposition",
    "BlowupValueError",
    "CanonicalPolarizationError",
    "Cochain",
    "DefectReport",
    "DegreeBudgetError",
    "DegreeMismatchError",
    "DisconnectedGraphError",
    "Edge",
    "EmptyGraphError",
    "GraphConstructionError",
    "GraphMismatchError",
    "GuardLimitError",
    "HAVE_SPEEDUPS",
    "InvalidSubsetError",
    "JacGraphError",
    "Multigraph",
    "NonIntegralRestrictionError",
    "PicardGroup",
    "Polarization",
    "PolarizationTotalError",
    "PushforwardDegrees",
    "ReduceReport",
    "ReductionGuardError",
    "StrataReport",
    "StratumContext",
    "StratumRow",
    "UnknownEdgeError",
    "UnknownVertexError",
    "blowup_decomposition",
    "canonical_polarization",
    "characteristic",
    "complexity",
    "det_bareiss",
    "implementation_name",
    "laplacian_apply",
    "laplacian_matrix",
    "laplacian_pairing",
    "picard_group",
    "pushforward_multidegree",
    "same_class",
    "semistable_equality_witness",
    "smith_normal_form",
    "strata_report",
    "stratum_multidegrees",
]
