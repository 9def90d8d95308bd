from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Set, Tuple

from tracetensor.symgroup.group_algebra import GroupAlgebraElement
from tracetensor.symgroup.permutation import Permutation
from tracetensor.symgroup.permutation import direct_product
from tracetensor.symgroup.permutation import format_cycles
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.tracering.words import Word
from tracetensor.tracering.words import format_word
from tracetensor.tracering.words import make_word

TensorWord = Tuple[Word, ...]
TermKey = Tuple[TensorWord, Permutation]


def _rename_word(word: Word, mapping: Mapping[int, int]) -> Word:
    return tuple(mapping.get(a, a) for a in word)


class TwistedElement(object):
    """An element of T<X>^{(x)n} x| Q[S_n] in normal form.

    Every term is ``coeff * (M_1 (x) ... (x) M_n) o sigma`` with the
    permutation kept on the right. Moving a permutation across a tensor
    word follows ``sigma o (M_1 (x) ... (x) M_n) =
    (M_{sigma^-1(1)} (x) ... (x) M_{sigma^-1(n)}) o sigma``.

    Args:
        n (int): Tensor arity.
        terms (mapping): ``(tensor word, permutation)`` -> coefficient.
            Coefficients may be :class:`TraceScalar` or rationals.
    """

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms: Mapping = None):
        if n < 0:
            raise ValueError("Arity must be non-negative, got {}".format(n))
        self._n = n
        clean = {}  # type: Dict[TermKey, TraceScalar]
        for (tensor, perm), coeff in (terms or {}).items():
            tensor = tuple(make_word(w) for w in tensor)
            if len(tensor) != n:
                raise ValueError(
                    "Tensor word {} does not have arity {}".format(tensor, n))
            if perm.degree != n:
                raise ValueError(
                    "Permutation {} does not belong to S_{}".format(perm, n))
            key = (tensor, perm)
            clean[key] = clean.get(key, TraceScalar.zero()) + TraceScalar.coerce(coeff)
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _from_clean(cls, n: int, terms: Dict[TermKey, TraceScalar]) -> "TwistedElement":
        obj = cls.__new__(cls)
        obj._n = n
        obj._terms = {k: v for k, v in terms.items() if v}
        return obj

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Dict[TermKey, TraceScalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[TermKey, TraceScalar]]:
        """Terms sorted by (tensor word, permutation)."""
        for key in sorted(self._terms, key=lambda k: (k[0], k[1].images)):
            yield key, self._terms[key]

    def coefficient(self, tensor: Sequence[Iterable[int]], perm: Permutation) -> TraceScalar:
        key = (tuple(tuple(w) for w in tensor), perm)
        return self._terms.get(key, TraceScalar.zero())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TwistedElement):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self):
        return hash((self._n, frozenset(self._terms.items())))

    def _check(self, other: "TwistedElement"):
        if self._n != other._n:
            raise ValueError(
                "Arity mismatch: {} vs {}".format(self._n, other._n))

    def __add__(self, other: "TwistedElement") -> "TwistedElement":
        self._check(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, TraceScalar.zero()) + coeff
        return TwistedElement._from_clean(self._n, terms)

    def __neg__(self) -> "TwistedElement":
        return TwistedElement._from_clean(
            self._n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "TwistedElement") -> "TwistedElement":
        return self + (-other)

    def __mul__(self, other) -> "TwistedElement":
        if isinstance(other, TwistedElement):
            return tw_mul(self, other)
        if isinstance(other, Permutation):
            return tw_mul(self, permutation_element(other))
        return self.scale(other)

    def __rmul__(self, other) -> "TwistedElement":
        if isinstance(other, Permutation):
            return tw_mul(permutation_element(other), self)
        return self.scale(other)

    def scale(self, c) -> "TwistedElement":
        c = TraceScalar.coerce(c)
        return TwistedElement._from_clean(
            self._n, {k: c * v for k, v in self._terms.items()})

    def map_coefficients(self, fn) -> "TwistedElement":
        terms = {}  # type: Dict[TermKey, TraceScalar]
        for key, coeff in self._terms.items():
            terms[key] = terms.get(key, TraceScalar.zero()) + fn(coeff)
        return TwistedElement._from_clean(self._n, terms)

    def specialize_lambda(self, d: int) -> "TwistedElement":
        return self.map_coefficients(lambda c: c.specialize_lambda(d))

    def has_lambda(self) -> bool:
        return any(c.has_lambda() for c in self._terms.values())

    def rename_variables(self, mapping: Mapping[int, int]) -> "TwistedElement":
        """Rename variables ``x_i -> x_mapping[i]``; unmapped ones are kept."""
        terms = {}  # type: Dict[TermKey, TraceScalar]
        for (tensor, perm), coeff in self._terms.items():
            key = (tuple(_rename_word(w, mapping) for w in tensor), perm)
            terms[key] = terms.get(key, TraceScalar.zero()) + coeff.rename_variables(mapping)
        return TwistedElement._from_clean(self._n, terms)

    def conjugate(self, gamma: Permutation) -> "TwistedElement":
        """``gamma * self * gamma^-1``."""
        return tw_mul(
            tw_mul(permutation_element(gamma), self),
            permutation_element(gamma.inverse()))

    def variables(self) -> Set[int]:
        result = set()
        for (tensor, _), coeff in self._terms.items():
            for w in tensor:
                result.update(w)
            result.update(coeff.variables())
        return result

    def monomial_terms(self) -> Iterator[Tuple[TermKey, Tuple, Fraction]]:
        """Expand into ``(key, trace monomial, rational)`` triples."""
        for key, coeff in self.items():
            for monomial, c in coeff.items():
                yield key, monomial, c

    def degree_in(self, var: int) -> Set[int]:
        """Total degrees in ``x_var`` over all monomial terms."""
        result = set()
        for (tensor, _), (_, traces), _ in self.monomial_terms():
            result.add(sum(w.count(var) for w in tensor)
                       + sum(w.count(var) for w in traces))
        return result

    def is_multilinear(self, k: int) -> bool:
        """Whether every monomial term uses each of x_1..x_k exactly once."""
        expected = list(range(1, k + 1))
        for (tensor, _), (_, traces), _ in self.monomial_terms():
            letters = [a for w in tensor for a in w] + [a for w in traces for a in w]
            if sorted(letters) != expected:
                return False
        return True

    def to_dict(self):
        return {
            "n": self._n,
            "terms": [
                {
                    "coeff": coeff.to_list(),
                    "tensor": [list(w) for w in tensor],
                    "perm": list(perm.images),
                }
                for (tensor, perm), coeff in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, data) -> "TwistedElement":
        try:
            n = int(data["n"])
            terms = {}
            for entry in data["terms"]:
                tensor = tuple(tuple(int(a) for a in w) for w in entry["tensor"])
                perm = Permutation(entry["perm"])
                coeff = TraceScalar.from_list(entry["coeff"])
                key = (tensor, perm)
                terms[key] = terms.get(key, TraceScalar.zero()) + coeff
        except (KeyError, TypeError) as e:
            raise ValueError("Malformed element: {}".format(e))
        return cls(n, terms)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (tensor, perm), coeff in self.items():
            body = " (x) ".join(format_word(w) for w in tensor) or "1"
            if not perm.is_identity():
                body = "{} o {}".format(body, format_cycles(perm))
            parts.append("({}) * [{}]".format(coeff.to_text(), body))
        return "\n+ ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "TwistedElement(n={}, terms={})".format(self._n, len(self._terms))


def zero(n: int) -> TwistedElement:
    return TwistedElement(n)


def unit(n: int) -> TwistedElement:
    return TwistedElement(n, {(((),) * n, Permutation.identity(n)): 1})


def scalar(n: int, c) -> TwistedElement:
    """The trace-algebra element ``c`` placed at arity ``n``."""
    return unit(n).scale(c)


def tensor_monomial(words: Sequence[Iterable[int]], coeff=1) -> TwistedElement:
    words = tuple(tuple(w) for w in words)
    n = len(words)
    return TwistedElement(n, {(words, Permutation.identity(n)): coeff})


def permutation_element(perm: Permutation, coeff=1) -> TwistedElement:
    n = perm.degree
    return TwistedElement(n, {(((),) * n, perm): coeff})


def from_group_algebra(g: GroupAlgebraElement) -> TwistedElement:
    return TwistedElement(
        g.degree, {(((),) * g.degree, p): c for p, c in g.items()})


def _mul_keys(ka: TermKey, kb: TermKey) -> TermKey:
    (ma, sigma), (mb, tau) = ka, kb
    inv = sigma.inverse()
    tensor = tuple(ma[i] + mb[inv(i + 1) - 1] for i in range(len(ma)))
    return tensor, sigma * tau


def tw_mul(a: TwistedElement, b: TwistedElement) -> TwistedElement:
    """Product in the twisted algebra, returned in normal form."""
    a._check(b)
    terms = {}  # type: Dict[TermKey, TraceScalar]
    for ka, ca in a._terms.items():
        for kb, cb in b._terms.items():
            key = _mul_keys(ka, kb)
            terms[key] = terms.get(key, TraceScalar.zero()) + ca * cb
    return TwistedElement._from_clean(a.n, terms)


def outer_product(a: TwistedElement, b: TwistedElement) -> TwistedElement:
    """``a (x) b`` with permutations embedded through S_m x S_n."""
    terms = {}  # type: Dict[TermKey, TraceScalar]
    for (ta, pa), ca in a._terms.items():
        for (tb, pb), cb in b._terms.items():
            key = (ta + tb, direct_product(pa, pb))
            terms[key] = terms.get(key, TraceScalar.zero()) + ca * cb
    return TwistedElement._from_clean(a.n + b.n, terms)


def conjugate(a: TwistedElement, gamma: Permutation) -> TwistedElement:
    return a.conjugate(gamma)


def rename_variables(a: TwistedElement, mapping: Mapping[int, int]) -> TwistedElement:
    return a.rename_variables(mapping)
