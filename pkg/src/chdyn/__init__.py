"""Numerical engine for third-order root-finding dynamics and their
singularly perturbed power-map relatives: map construction, critical-orbit
trichotomy classification, special-parameter location, quantitative-estimate
verification, and deterministic plane rendering."""

from .errors import (
    ChdynError,
    CycleNotFound,
    DegenerateDelta,
    DegenerateParameter,
    DerivativeVanishes,
    HalleyDenominatorVanishes,
    LambdaZero,
    NoConvergence,
    NoSignChange,
    NotFixed,
    NotMcMullenForm,
    ParameterTooLarge,
)
from .families import (
    ZETA,
    CHParams,
    CriticalData,
    McMullenParams,
    alpha_a_convert,
    build_mcmullen,
    build_on_alpha,
    build_ra,
    ch_step,
    critical_data_ra,
    critical_points_ra,
    critical_values_ra,
    fixed_points_ra,
    mcmullen_critical_points,
)
from .lemmas import (
    C1,
    LemmaCheckResult,
    NormalizeInput,
    check_annulus_bound,
    check_normalize_roundtrip,
    check_small_disk_bound,
    check_symmetry,
    check_uniform_convergence,
    mcmullen_normalize,
)
from .plane import (
    ENGINE_VERSION,
    PlaneGrid,
    PlaneSpec,
    render_dynamical_plane,
    render_parameter_plane,
    write_csv,
    write_ppm,
    write_report,
)
from .rational import INF, Polynomial, RationalMap, find_roots, multiplier_at, poly_eval, ratmap_eval
from .special import (
    RealBracket,
    SpecialParamResult,
    find_a_q,
    find_a_star,
    q0_cycle,
    real_critical_value,
    real_root_bisect,
)
from .trichotomy import (
    JuliaClass,
    OrbitRecord,
    TrichotomyReport,
    classify_mcmullen,
    classify_ra,
    escape_radius,
    orbit,
)

__version__ = ENGINE_VERSION
