import math
from typing import List, Sequence

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions

from tracetensor.matexval.operators import perm_targets
from tracetensor.symgroup.permutation import symmetric_group
from tracetensor.utils.limits import check_dimension


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix."""
    rows = [[QQ(int(v)) for v in row] for row in rows]
    if not rows:
        return 0
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ).rank()


def gram_matrix(m: int, d: int) -> List[List[int]]:
    """``G[s, t] = tr(P_s P_t^T) = d ** cycles(s t^-1)`` over S_m in enumeration order."""
    perms = list(symmetric_group(m))
    return [
        [d ** len((s * t.inverse()).cycles(include_fixed=True)) for t in perms]
        for s in perms
    ]


def kernel_dimension(m: int, d: int) -> int:
    """Dimension of the kernel of Q[S_m] -> End((Q^d)^{(x) m})."""
    if m < 0 or d < 1:
        raise ValueError("Need m >= 0 and d >= 1, got m={}, d={}".format(m, d))
    return math.factorial(m) - exact_rank(gram_matrix(m, d))


def hook_length_dimension(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux of ``shape``."""
    shape = [p for p in shape if p]
    columns = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (columns[j] - i - 1) + 1
    return math.factorial(sum(shape)) // hooks


def expected_kernel_dimension(m: int, d: int) -> int:
    """``sum f_shape ** 2`` over partitions of ``m`` with more than ``d`` rows."""
    total = 0
    for p in partitions(m):
        shape = sorted((part for part, mult in p.items() for _ in range(mult)), reverse=True)
        if len(shape) > d:
            total += hook_length_dimension(shape) ** 2
    return total


def identity_space_dimension(n: int, k: int, d: int) -> int:
    """Dimension of the multilinear degree-k identities of n-tensors for d x d matrices.

    Computed from the operators of the encoded S_{n+k} basis: the vectors
    ``vec(P_tau)`` are stacked and their rank is subtracted from ``(n+k)!``.
    """
    if n < 0 or k < 0 or n + k < 1:
        raise ValueError("Need n, k >= 0 and n + k >= 1, got n={}, k={}".format(n, k))
    m = n + k
    dim = check_dimension(d, m)
    perms = list(symmetric_group(m))
    vectors = np.zeros((len(perms), dim * dim), dtype=np.int64)
    cols = np.arange(dim)
    for i, tau in enumerate(perms):
        vectors[i, perm_targets(tau, d) * dim + cols] = 1
    gram = vectors @ vectors.T
    return len(perms) - exact_rank(gram.tolist())
