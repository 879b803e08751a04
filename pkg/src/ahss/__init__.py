"""The Atiyah–Hirzebruch spectral sequence with chain-complex coefficients."""

from .cw import (
    BUILTIN_CW,
    CWComplex,
    builtin_cw,
    cellular_cohomology,
    complex_projective_plane,
    cyclic_ext,
    cyclic_hom,
    point,
    real_projective_plane,
    sphere,
    torus,
)
from .filtrations import (
    BUILTIN_COEFFICIENTS,
    builtin_coefficients,
    cochain_complex,
    integers_in_degree,
    skeletal_filtration,
    split_coefficients,
    whitehead_filtration_coeff,
)
from .maunder import MaunderReport, e2_oracle_failures, maunder_compare

__all__ = [
    "BUILTIN_CW", "CWComplex", "builtin_cw", "cellular_cohomology", "complex_projective_plane",
    "cyclic_ext", "cyclic_hom", "point", "real_projective_plane", "sphere", "torus",
    "BUILTIN_COEFFICIENTS", "builtin_coefficients", "cochain_complex", "integers_in_degree",
    "skeletal_filtration", "split_coefficients", "whitehead_filtration_coeff",
    "MaunderReport", "e2_oracle_failures", "maunder_compare",
]
