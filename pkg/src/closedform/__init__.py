from closedform.grounded import GroundedFunction
from closedform.transforms import hat_transform, mobius_transform, zeta_transform
from closedform.theorems import (
    build_meet_hypermatrix,
    factor_closed_fdet,
    lindstrom_det,
    lindstrom_fdet,
    local_mobius,
    meet_closed_fdet,
)
from closedform.expansion import (
    CMatrix,
    c_matrix,
    closure_order,
    genhauk_fdet,
    li_expansion_det,
    ligen_fdet,
    uniform_function,
    zeta_factor_matrix,
)

__all__ = [
    "CMatrix",
    "GroundedFunction",
    "build_meet_hypermatrix",
    "c_matrix",
    "closure_order",
    "factor_closed_fdet",
    "genhauk_fdet",
    "hat_transform",
    "li_expansion_det",
    "ligen_fdet",
    "lindstrom_det",
    "lindstrom_fdet",
    "local_mobius",
    "meet_closed_fdet",
    "mobius_transform",
    "uniform_function",
    "zeta_factor_matrix",
    "zeta_transform",
]
