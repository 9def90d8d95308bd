import functools
import logging
from fractions import Fraction
from typing import Iterator, Tuple

from tracetensor.chident.symmetric_functions import sigma_j
from tracetensor.interp.interpretation import InterpContext
from tracetensor.interp.interpretation import interpret
from tracetensor.symgroup.group_algebra import antisymmetrizer
from tracetensor.tracering.trace_polynomial import TracePolynomial
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.tracering.trace_scalar import power_trace
from tracetensor.twisted.element import TwistedElement
from tracetensor.twisted.element import from_group_algebra
from tracetensor.twisted.element import scalar
from tracetensor.twisted.element import tensor_monomial
from tracetensor.twisted.element import zero
from tracetensor.twisted.traces import iterated_partial_trace
from tracetensor.twisted.traces import partial_trace


class IdentitySpec(object):
    """Degree ``k`` and matrix size ``d``; the tensor arity is ``d + 1 - k``."""

    __slots__ = ("k", "d")

    def __init__(self, k: int, d: int):
        if d < 0:
            raise ValueError("d must be non-negative, got {}".format(d))
        if not 0 <= k <= d + 1:
            raise ValueError("k must lie in 0..d+1 = 0..{}, got {}".format(d + 1, k))
        self.k = k
        self.d = d

    @property
    def n(self) -> int:
        return self.d + 1 - self.k

    def __repr__(self):
        return "IdentitySpec(k={}, d={})".format(self.k, self.d)


def weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for tail in weak_compositions(total - first, parts - 1):
            yield (first,) + tail


def frakT(i: int, n: int, var: int = 1) -> TwistedElement:
    """Sum of ``x^h_1 (x) ... (x) x^h_n`` over ``h_1 + ... + h_n = i``.

    For ``n == 0`` this is the arity-0 element ``tr(x^i)``.
    """
    if i < 0 or n < 0:
        raise ValueError("Need i >= 0 and n >= 0, got i={}, n={}".format(i, n))
    if n == 0:
        return scalar(0, power_trace(i, var))
    result = zero(n)
    for h in weak_compositions(i, n):
        result = result + tensor_monomial([(var,) * e for e in h])
    return result


def antisymmetrizer_element(n: int) -> TwistedElement:
    return from_group_algebra(antisymmetrizer(n, range(1, n + 1)))


@functools.lru_cache(maxsize=None)
def F_kd(k: int, d: int) -> TwistedElement:
    """The multilinear relation ``(-1)^k`` times the interpretation of A_{d+1}.

    Arity ``d + 1 - k``, variables ``x_1..x_k``.
    """
    spec = IdentitySpec(k, d)
    g = antisymmetrizer(d + 1, range(1, d + 2))
    return interpret(g, InterpContext(spec.n, k)).scale((-1) ** k)


def CH(k: int, d: int) -> TwistedElement:
    """The n-tensor Cayley-Hamilton element in one variable, ``n = d + 1 - k``.

    ``A_n o [T_{k,n} + sum_j (-1)^j sigma_j(x) T_{k-j,n}]``; for ``n == 0``
    this is ``(-1)^(d+1) sigma_{d+1}(x)``.
    """
    spec = IdentitySpec(k, d)
    n = spec.n
    if n == 0:
        return scalar(0, sigma_j(d + 1).scale((-1) ** (d + 1)))
    inner = zero(n)
    for j in range(k + 1):
        term = frakT(k - j, n).scale(sigma_j(j))
        inner = inner + (term if j % 2 == 0 else -term)
    return antisymmetrizer_element(n) * inner


def _last_slot_variable(n: int, var: int) -> TwistedElement:
    return tensor_monomial([()] * (n - 1) + [(var,)])


def CH_recursive(k: int, d: int, formal: bool = False, logger=None) -> TwistedElement:
    """Build the Cayley-Hamilton element by repeated partial traces.

    Starting from the antisymmetrizer on d + 1 slots,
    ``c_{j+1} = -1/(j+1) t(c_j (1 (x) ... (x) 1 (x) x))`` with ``L = d``.
    With ``formal`` the traces of the unit are kept as powers of ``L``; the
    result then agrees with :func:`CH` only after specializing ``L`` to d.
    """
    logger = logger or logging.getLogger(__name__)
    spec = IdentitySpec(k, d)
    c = antisymmetrizer_element(d + 1)
    for j in range(spec.k):
        n = d + 1 - j
        c = partial_trace(c * _last_slot_variable(n, 1))
        if not formal:
            c = c.specialize_lambda(d)
        c = c.scale(Fraction(-1, j + 1))
        logger.debug("recursion level %d: %d terms at arity %d", j + 1, len(c), c.n)
    return c


def F_kd_recursive(k: int, d: int) -> TwistedElement:
    """``F_{k,d}`` from ``F_{k-1,d}`` by ``-t(F (1 (x) ... (x) x_k))`` with ``L = d``."""
    spec = IdentitySpec(k, d)
    f = F_kd(0, d)
    for j in range(spec.k):
        n = d + 1 - j
        f = -partial_trace(f * _last_slot_variable(n, j + 1)).specialize_lambda(d)
    return f


def trace_power_ledger(d: int) -> TwistedElement:
    """``t^d(A_{d+1})``, which equals ``prod_{i=1}^{d} (L - i)`` at arity 1."""
    if d < 0:
        raise ValueError("d must be non-negative, got {}".format(d))
    return iterated_partial_trace(antisymmetrizer_element(d + 1), d)


def falling_lambda(d: int) -> TraceScalar:
    """``prod_{i=1}^{d} (L - i)``."""
    result = TraceScalar.one()
    for i in range(1, d + 1):
        result = result * (TraceScalar.lam() - i)
    return result


def trace_polynomial_element(p: TracePolynomial) -> TwistedElement:
    """A free-algebra element as an arity-1 twisted element."""
    result = zero(1)
    for word, coeff in p.items():
        result = result + tensor_monomial([word], coeff)
    return result

