from .fuss import FussParams, fuss_elements, fuss_m_triangle, fuss_zeta
from .halo import halo_checks
from .hochschild import hochschild_checks
from .nc import nc_lattice, nc_m_triangle
from .typeb import TypeBParams, typeb_elements, typeb_m_triangle, typeb_zeta

__all__ = [
    "FussParams",
    "fuss_elements",
    "fuss_m_triangle",
    "fuss_zeta",
    "TypeBParams",
    "typeb_elements",
    "typeb_m_triangle",
    "typeb_zeta",
    "nc_m_triangle",
    "nc_lattice",
    "halo_checks",
    "hochschild_checks",
]
