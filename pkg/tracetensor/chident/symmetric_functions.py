import math
from fractions import Fraction

from tracetensor.symgroup.permutation import symmetric_group
from tracetensor.tracering.trace_polynomial import TracePolynomial
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.tracering.trace_scalar import power_trace


def sigma_j(j: int, var: int = 1) -> TraceScalar:
    """Elementary symmetric function of the eigenvalues of ``x_var``.

    Computed with Newton's recursion
    ``j e_j = sum_{i=1}^{j} (-1)^(i-1) e_{j-i} tr(x^i)``.
    """
    if j < 0:
        raise ValueError("j must be non-negative, got {}".format(j))
    e = [TraceScalar.one()]
    for r in range(1, j + 1):
        total = TraceScalar.zero()
        for i in range(1, r + 1):
            term = e[r - i] * power_trace(i, var)
            total = total + (term if i % 2 else -term)
        e.append(total.scale(Fraction(1, r)))
    return e[j]


def sigma_j_by_group_sum(j: int, var: int = 1) -> TraceScalar:
    """``(1/j!) sum_{s in S_j} sign(s) prod_cycles tr(x^len)``."""
    if j < 0:
        raise ValueError("j must be non-negative, got {}".format(j))
    total = TraceScalar.zero()
    for s in symmetric_group(j):
        term = TraceScalar.constant(s.sign())
        for length in s.cycle_type():
            term = term * power_trace(length, var)
        total = total + term
    return total.scale(Fraction(1, math.factorial(j)))


def cayley_hamilton_polynomial(d: int, var: int = 1) -> TracePolynomial:
    """``x^d + sum_{i=1}^{d} (-1)^i sigma_i(x) x^(d-i)``."""
    if d < 1:
        raise ValueError("d must be >= 1, got {}".format(d))
    result = TracePolynomial.word((var,) * d)
    for i in range(1, d + 1):
        coeff = sigma_j(i, var)
        result = result + TracePolynomial.word((var,) * (d - i), coeff if i % 2 == 0 else -coeff)
    return result


def newton_identity(d: int, var: int = 1) -> TraceScalar:
    """``tr(x^(d+1)) + sum_{i=1}^{d} (-1)^i sigma_i(x) tr(x^(d+1-i))``.

    This is the trace of ``x`` times the Cayley-Hamilton polynomial, so it
    vanishes on d x d matrices.
    """
    if d < 1:
        raise ValueError("d must be >= 1, got {}".format(d))
    result = power_trace(d + 1, var)
    for i in range(1, d + 1):
        term = sigma_j(i, var) * power_trace(d + 1 - i, var)
        result = result + (term if i % 2 == 0 else -term)
    return result
