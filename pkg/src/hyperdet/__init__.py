from hyperdet.permutation import Permutation, all_permutations, identity_tuple
from hyperdet.fmap import ConstantOne, SignProduct, TableFMap, check_arity, make_fmap
from hyperdet.hypermatrix import Hypermatrix, matrix, plain
from hyperdet.determinant import (
    cayley_det,
    cofactor_det,
    det,
    det1,
    enumeration_size,
    fdet_bruteforce,
    fdet_expansion,
    group_action,
    guard,
    slice_matrix,
)

__all__ = [
    "ConstantOne",
    "Hypermatrix",
    "Permutation",
    "SignProduct",
    "TableFMap",
    "all_permutations",
    "cayley_det",
    "check_arity",
    "cofactor_det",
    "det",
    "det1",
    "enumeration_size",
    "fdet_bruteforce",
    "fdet_expansion",
    "group_action",
    "guard",
    "identity_tuple",
    "make_fmap",
    "matrix",
    "plain",
    "slice_matrix",
]
