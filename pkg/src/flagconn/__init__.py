"""Levi-Civita connections of flag manifolds G/T of classical type.

Builds classical root systems, exact Chevalley structure constants, the
compact tangent basis and any invariant metric, evaluates the closed form of
the Levi-Civita connection, and verifies it against a brute-force oracle and
the defining axioms.
"""

__version__ = "0.1.0"

from .chevalley import (
    KillingForm,
    LieElement,
    MBasis,
    StructureConstants,
    bracket,
    build_m_basis,
    chevalley_constants,
    killing_gram,
    m_bracket_table,
    project_m,
    project_root_space,
)
from .connection import (
    ConnectionTensor,
    assemble_tensor,
    canonical_pair,
    nabla,
    u_bilinear,
    u_root_pair,
    z_term,
)
from .errors import (
    ConfigurationError,
    DimensionError,
    DomainError,
    FlagConnError,
    RepresentationError,
)
from .metric import MetricGram, MetricSpec, build_metric, inner
from .oracle import (
    CheckReport,
    check_lemma2,
    check_metric_compat,
    check_oracle_equivalence,
    check_torsion,
    u_oracle,
)
from .rootsys import (
    Coords,
    RootSystem,
    abs_root,
    build_root_system,
    lex_compare,
    negate,
    root_sum,
)
from .su_realization import (
    EpsRoot,
    build_alignment,
    check_su_crosscheck,
    eps_to_simple,
    simple_to_eps,
    su3_coefficients,
    su_killing,
    su_m_basis,
    u_su3,
    u_sun,
)

__all__ = [
    "__version__",
    "CheckReport",
    "ConfigurationError",
    "ConnectionTensor",
    "Coords",
    "DimensionError",
    "DomainError",
    "EpsRoot",
    "FlagConnError",
    "KillingForm",
    "LieElement",
    "MBasis",
    "MetricGram",
    "MetricSpec",
    "RepresentationError",
    "RootSystem",
    "StructureConstants",
    "abs_root",
    "assemble_tensor",
    "bracket",
    "build_alignment",
    "build_m_basis",
    "build_metric",
    "build_root_system",
    "canonical_pair",
    "check_lemma2",
    "check_metric_compat",
    "check_oracle_equivalence",
    "check_su_crosscheck",
    "check_torsion",
    "chevalley_constants",
    "eps_to_simple",
    "inner",
    "killing_gram",
    "lex_compare",
    "m_bracket_table",
    "nabla",
    "negate",
    "project_m",
    "project_root_space",
    "root_sum",
    "simple_to_eps",
    "su3_coefficients",
    "su_killing",
    "su_m_basis",
    "u_bilinear",
    "u_oracle",
    "u_root_pair",
    "u_su3",
    "u_sun",
    "z_term",
]
