from typing import Dict

from tracetensor.symgroup.permutation import Permutation
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.twisted.element import TermKey
from tracetensor.twisted.element import TwistedElement


def term_trace(tensor, perm: Permutation) -> TraceScalar:
    """Full trace of ``(M_1 (x) ... (x) M_n) o perm``.

    A cycle of ``perm`` with least element ``j`` contributes
    ``tr(M_j M_{perm^-1(j)} M_{perm^-2(j)} ...)``, which is ``L`` when the
    concatenated word is empty.
    """
    inv = perm.inverse()
    result = TraceScalar.one()
    for cycle in perm.cycles(include_fixed=True):
        j = cycle[0]
        word = ()
        i = j
        while True:
            word += tensor[i - 1]
            i = inv(i)
            if i == j:
                break
        result = result * TraceScalar.trace(word)
    return result


def full_trace(a: TwistedElement) -> TraceScalar:
    result = TraceScalar.zero()
    for (tensor, perm), coeff in a.items():
        result = result + coeff * term_trace(tensor, perm)
    return result


def _remove_last(perm: Permutation) -> Permutation:
    """Drop ``n`` from its cycle, linking ``perm^-1(n)`` to ``perm(n)``."""
    n = perm.degree
    images = list(perm.images[:-1])
    r = perm.inverse()(n)
    if r != n:
        images[r - 1] = perm(n)
    return Permutation(images)


def partial_trace(a: TwistedElement) -> TwistedElement:
    """The formal partial trace contracting the last tensor slot.

    For a term ``(M_1 (x) ... (x) M_n) o sigma``: if ``sigma`` fixes ``n``
    the last factor closes into ``tr(M_n)`` (``L`` when empty); otherwise
    ``M_n`` is appended on the right of the factor at slot ``sigma(n)`` and
    ``n`` is removed from its cycle.
    """
    n = a.n
    if n == 0:
        raise ValueError("Cannot take the partial trace of an arity-0 element")
    terms = {}  # type: Dict[TermKey, TraceScalar]
    for (tensor, perm), coeff in a.items():
        j = perm(n)
        if j == n:
            coeff = coeff * TraceScalar.trace(tensor[-1])
            tensor = tensor[:-1]
        else:
            tensor = list(tensor)
            tensor[j - 1] = tensor[j - 1] + tensor[-1]
            tensor = tuple(tensor[:-1])
        key = (tensor, _remove_last(perm))
        terms[key] = terms.get(key, TraceScalar.zero()) + coeff
    return TwistedElement(n - 1, terms)


def iterated_partial_trace(a: TwistedElement, times: int) -> TwistedElement:
    for _ in range(times):
        a = partial_trace(a)
    return a


def as_scalar(a: TwistedElement) -> TraceScalar:
    """The trace-algebra value of an arity-0 element."""
    if a.n != 0:
        raise ValueError("Element of arity {} is not a scalar".format(a.n))
    return full_trace(a)
