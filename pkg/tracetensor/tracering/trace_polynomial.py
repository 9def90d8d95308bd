from typing import Dict, Iterable, Iterator, Mapping, Set, Tuple

from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.tracering.words import Word
from tracetensor.tracering.words import format_word
from tracetensor.tracering.words import make_word


class TracePolynomial(object):
    """An element of the free algebra with trace T<X>.

    A finite combination of words with :class:`TraceScalar` coefficients.
    Multiplication concatenates words; :meth:`trace` closes every word into
    a trace.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], object] = None):
        clean = {}  # type: Dict[Word, TraceScalar]
        for word, coeff in (terms or {}).items():
            word = make_word(word)
            coeff = TraceScalar.coerce(coeff)
            clean[word] = clean.get(word, TraceScalar.zero()) + coeff
        self._terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def word(cls, letters: Iterable[int], coeff=1) -> "TracePolynomial":
        return cls({tuple(letters): coeff})

    @classmethod
    def variable(cls, i: int) -> "TracePolynomial":
        return cls.word((i,))

    @classmethod
    def one(cls) -> "TracePolynomial":
        return cls.word(())

    @classmethod
    def zero(cls) -> "TracePolynomial":
        return cls()

    @classmethod
    def scalar(cls, c) -> "TracePolynomial":
        return cls({(): c})

    def items(self) -> Iterator[Tuple[Word, TraceScalar]]:
        for word in sorted(self._terms):
            yield word, self._terms[word]

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TracePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "TracePolynomial") -> "TracePolynomial":
        terms = dict(self._terms)
        for word, coeff in other._terms.items():
            terms[word] = terms.get(word, TraceScalar.zero()) + coeff
        return TracePolynomial(terms)

    def __neg__(self) -> "TracePolynomial":
        return TracePolynomial({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "TracePolynomial") -> "TracePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "TracePolynomial":
        if not isinstance(other, TracePolynomial):
            return self.scale(other)
        terms = {}  # type: Dict[Word, TraceScalar]
        for wa, ca in self._terms.items():
            for wb, cb in other._terms.items():
                w = wa + wb
                terms[w] = terms.get(w, TraceScalar.zero()) + ca * cb
        return TracePolynomial(terms)

    def __rmul__(self, other) -> "TracePolynomial":
        return self.scale(other)

    def scale(self, c) -> "TracePolynomial":
        c = TraceScalar.coerce(c)
        return TracePolynomial({w: c * v for w, v in self._terms.items()})

    def trace(self) -> TraceScalar:
        """The formal trace, linear over the trace algebra."""
        result = TraceScalar.zero()
        for word, coeff in self._terms.items():
            result = result + coeff * TraceScalar.trace(word)
        return result

    def variables(self) -> Set[int]:
        result = set()
        for word, coeff in self._terms.items():
            result.update(word)
            result.update(coeff.variables())
        return result

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.items():
            parts.append("({})*{}".format(coeff.to_text(), format_word(word)))
        return " + ".join(parts)

    def __repr__(self):
        return "TracePolynomial({})".format(self)
