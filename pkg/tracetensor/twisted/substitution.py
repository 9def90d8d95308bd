import itertools
from typing import Dict, Mapping

from tracetensor.tracering.trace_polynomial import TracePolynomial
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.tracering.words import Word
from tracetensor.twisted.element import TermKey
from tracetensor.twisted.element import TwistedElement


class Substitution(object):
    """An endomorphism of the free algebra with trace given on variables.

    Args:
        images (mapping): variable index -> image. An image may be a
            :class:`TracePolynomial`, a word (tuple of indices) or a single
            variable index. Unmapped variables are left fixed.
    """

    def __init__(self, images: Mapping[int, object] = None):
        self.images = {}  # type: Dict[int, TracePolynomial]
        for var, image in (images or {}).items():
            if isinstance(image, int):
                image = TracePolynomial.variable(image)
            elif not isinstance(image, TracePolynomial):
                image = TracePolynomial.word(image)
            self.images[int(var)] = image

    def image(self, var: int) -> TracePolynomial:
        return self.images.get(var, TracePolynomial.variable(var))

    def apply_word(self, word: Word) -> TracePolynomial:
        result = TracePolynomial.one()
        for a in word:
            result = result * self.image(a)
        return result

    def apply_scalar(self, s: TraceScalar) -> TraceScalar:
        def apply_monomial(monomial):
            lam, traces = monomial
            value = TraceScalar.lam(lam)
            for w in traces:
                value = value * self.apply_word(w).trace()
            return value

        return s.map_monomials(apply_monomial)


def substitute(a: TwistedElement, g: Substitution) -> TwistedElement:
    """Apply ``g`` to every letter of every tensor factor and trace."""
    if not isinstance(g, Substitution):
        g = Substitution(g)
    terms = {}  # type: Dict[TermKey, TraceScalar]
    for (tensor, perm), coeff in a.items():
        coeff = g.apply_scalar(coeff)
        if not coeff:
            continue
        factors = [list(g.apply_word(w).items()) for w in tensor]
        for choice in itertools.product(*factors):
            c = coeff
            for _, fc in choice:
                c = c * fc
            key = (tuple(w for w, _ in choice), perm)
            terms[key] = terms.get(key, TraceScalar.zero()) + c
    return TwistedElement(a.n, terms)


def _assign(words, assignment, start):
    out = []
    pos = start
    for w in words:
        new = []
        for letter in w:
            if letter == 1:
                new.append(assignment[pos])
                pos += 1
            else:
                new.append(letter)
        out.append(tuple(new))
    return out, pos


def polarize(a: TwistedElement) -> TwistedElement:
    """Full polarization of an element homogeneous in ``x_1``.

    Each monomial of degree k is replaced by the sum over all k! ways of
    distributing x_1, ..., x_k over its occurrences of ``x_1``, so that
    :func:`restitute` of the result is ``k!`` times the input.
    """
    extra = a.variables() - {1}
    if extra:
        raise ValueError(
            "Polarization expects a single variable x1, found {}".format(sorted(extra)))
    degrees = a.degree_in(1)
    if len(degrees) > 1:
        raise ValueError(
            "Element is not homogeneous in x1 (degrees {})".format(sorted(degrees)))
    k = degrees.pop() if degrees else 0
    terms = {}  # type: Dict[TermKey, TraceScalar]
    for (tensor, perm), (lam, traces), c in a.monomial_terms():
        for assignment in itertools.permutations(range(1, k + 1)):
            new_traces, pos = _assign(traces, assignment, 0)
            new_tensor, _ = _assign(tensor, assignment, pos)
            key = (tuple(new_tensor), perm)
            coeff = TraceScalar({(lam, tuple(new_traces)): c})
            terms[key] = terms.get(key, TraceScalar.zero()) + coeff
    return TwistedElement(a.n, terms)


def restitute(a: TwistedElement) -> TwistedElement:
    """Identify every variable with ``x_1``."""
    return a.rename_variables({v: 1 for v in a.variables()})
