import functools
from fractions import Fraction
from typing import Dict, Tuple

import numpy as np

from tracetensor.matexval.multipoly import MultiPoly
from tracetensor.matexval.polymatrix import PolyMatrix
from tracetensor.symgroup.group_algebra import GroupAlgebraElement
from tracetensor.symgroup.permutation import Permutation
from tracetensor.utils.limits import check_dimension


@functools.lru_cache(maxsize=256)
def _targets(images: Tuple[int, ...], d: int) -> np.ndarray:
    m = len(images)
    if m == 0:
        return np.zeros(1, dtype=np.int64)
    inverse = np.argsort(np.asarray(images))
    shape = (d,) * m
    multi = np.indices(shape).reshape(m, -1)
    permuted = multi[inverse]
    return np.ravel_multi_index(permuted, shape)


def perm_targets(sigma: Permutation, d: int) -> np.ndarray:
    """Row index of the single 1 in each column of the operator of ``sigma``.

    Column ``a`` (a flattened multi-index) is sent to the row ``b`` with
    ``b_j = a_{sigma^-1(j)}``.
    """
    if d < 1:
        raise ValueError("d must be >= 1, got {}".format(d))
    check_dimension(d, sigma.degree)
    return _targets(sigma.images, d)


def perm_operator(sigma: Permutation, d: int, m: int = None) -> PolyMatrix:
    """The place permutation ``v_1 (x) ... (x) v_m -> v_{s^-1(1)} (x) ... (x) v_{s^-1(m)}``."""
    if m is not None and m != sigma.degree:
        raise ValueError("Permutation {} is not in S_{}".format(sigma, m))
    targets = perm_targets(sigma, d)
    one = MultiPoly.one()
    return PolyMatrix._from_clean(
        len(targets), {(int(r), c): one for c, r in enumerate(targets)})


def group_algebra_operator(g: GroupAlgebraElement, d: int) -> PolyMatrix:
    """``sum_tau c_tau P_tau`` acting on ``(Q^d)^{(x) m}``."""
    dim = check_dimension(d, g.degree)
    entries = {}  # type: Dict[Tuple[int, int], Fraction]
    for tau, c in g.items():
        for col, row in enumerate(perm_targets(tau, d)):
            key = (int(row), col)
            entries[key] = entries.get(key, Fraction(0)) + c
    return PolyMatrix._from_clean(
        dim, {k: MultiPoly.constant(v) for k, v in entries.items() if v})
