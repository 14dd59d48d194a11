"""Exact invariants of moduli spaces of coherent systems on an elliptic curve."""

from .arith import INF, bezout, format_rational, make_rational, mod_inverse, parse_rational
from .bundles import (
    TRIVIAL,
    AutDimStatus,
    Bundle,
    Summand,
    aut_dim_status,
    generic_polystable,
    h0_bundle,
    h0_indecomposable,
    h1_indecomposable,
    is_globally_generated,
    is_polystable,
    is_semistable,
    is_stable,
    slope,
)
from .moduli import (
    AlphaInterval,
    EmptyModuliError,
    ModuliQuery,
    alpha_range,
    brill_noether,
    generic_shape,
    is_nonempty,
    moduli_dimension,
)
from .oracle import GenericSystemModel, candidates, is_generically_stable_small_alpha, mu_alpha
from .picard import IsoVerdict, PicardInvariants, dual_picard_residue, grassmannian_model, iso_test, picard_invariants
from .report import build_report
from .walls import Wall, WallDecomposition, c12, c21, enumerate_walls, flip_locus_dim, section_degree_filter

__version__ = "0.1.0"
