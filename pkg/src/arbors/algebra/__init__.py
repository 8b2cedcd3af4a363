from .poly import BiPoly, UniPoly, binom_poly, gbinom, ibinom, lagrange_interpolate, rational_roots
from .series import DEFAULT_ORDER, TruncSeries
from .sturm import distinct_real_roots, sturm_chain, sturm_roots_in

__all__ = [
    "BiPoly",
    "UniPoly",
    "TruncSeries",
    "DEFAULT_ORDER",
    "binom_poly",
    "gbinom",
    "ibinom",
    "lagrange_interpolate",
    "rational_roots",
    "sturm_chain",
    "sturm_roots_in",
    "distinct_real_roots",
]
