from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from tracetensor.symgroup.permutation import Permutation
from tracetensor.symgroup.permutation import permutations_of
from tracetensor.symgroup.permutation import sign


class GroupAlgebraElement(object):
    """An element of Q[S_m]: a finite rational combination of permutations.

    Zero coefficients are never stored.

    Args:
        degree (int): m.
        terms (mapping): Permutation -> rational coefficient.
    """

    __slots__ = ("_degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Permutation, object] = None):
        self._degree = degree
        clean = {}  # type: Dict[Permutation, Fraction]
        for perm, coeff in (terms or {}).items():
            if perm.degree != degree:
                raise ValueError(
                    "Permutation {} does not belong to S_{}".format(perm, degree))
            coeff = Fraction(coeff)
            if coeff:
                clean[perm] = clean.get(perm, Fraction(0)) + coeff
        self._terms = {p: c for p, c in clean.items() if c}

    @classmethod
    def from_permutation(cls, perm: Permutation, coeff=1) -> "GroupAlgebraElement":
        return cls(perm.degree, {perm: coeff})

    @classmethod
    def zero(cls, degree: int) -> "GroupAlgebraElement":
        return cls(degree)

    @classmethod
    def one(cls, degree: int) -> "GroupAlgebraElement":
        return cls(degree, {Permutation.identity(degree): 1})

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> Dict[Permutation, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Permutation, Fraction]]:
        for perm in sorted(self._terms):
            yield perm, self._terms[perm]

    def coefficient(self, perm: Permutation) -> Fraction:
        return self._terms.get(perm, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self._degree == other._degree and self._terms == other._terms

    def __hash__(self):
        return hash((self._degree, frozenset(self._terms.items())))

    def _check(self, other: "GroupAlgebraElement"):
        if self._degree != other._degree:
            raise ValueError("Degree mismatch: S_{} vs S_{}".format(
                self._degree, other._degree))

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        terms = dict(self._terms)
        for perm, coeff in other._terms.items():
            terms[perm] = terms.get(perm, Fraction(0)) + coeff
        return GroupAlgebraElement(self._degree, terms)

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            self._degree, {p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def __mul__(self, other) -> "GroupAlgebraElement":
        if isinstance(other, Permutation):
            other = GroupAlgebraElement.from_permutation(other)
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        self._check(other)
        terms = {}  # type: Dict[Permutation, Fraction]
        for p, a in self._terms.items():
            for q, b in other._terms.items():
                pq = p * q
                terms[pq] = terms.get(pq, Fraction(0)) + a * b
        return GroupAlgebraElement(self._degree, terms)

    def __rmul__(self, other) -> "GroupAlgebraElement":
        if isinstance(other, Permutation):
            return GroupAlgebraElement.from_permutation(other) * self
        return self.scale(other)

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(
            self._degree, {p: c * a for p, a in self._terms.items()})

    def inverse_involution(self) -> "GroupAlgebraElement":
        """The anti-automorphism induced by p -> p^-1."""
        return GroupAlgebraElement(
            self._degree, {p.inverse(): c for p, c in self._terms.items()})

    def conjugate(self, by: Permutation) -> "GroupAlgebraElement":
        inv = by.inverse()
        return GroupAlgebraElement(
            self._degree, {by * p * inv: c for p, c in self._terms.items()})

    def support(self) -> Sequence[int]:
        moved = set()
        for perm in self._terms:
            moved.update(perm.support())
        return sorted(moved)

    def to_dict(self):
        return {
            "m": self._degree,
            "terms": [
                {"perm": list(perm.images), "coeff": str(coeff)}
                for perm, coeff in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, data) -> "GroupAlgebraElement":
        try:
            degree = int(data["m"])
            terms = {}  # type: Dict[Permutation, Fraction]
            for entry in data["terms"]:
                perm = Permutation(entry["perm"])
                terms[perm] = terms.get(perm, Fraction(0)) + Fraction(str(entry["coeff"]))
        except (KeyError, TypeError, ZeroDivisionError) as e:
            raise ValueError("Malformed group algebra element: {}".format(e))
        return cls(degree, terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for perm, coeff in self.items():
            parts.append("{}*{}".format(coeff, perm))
        return " + ".join(parts)


def antisymmetrizer(m: int, indices: Iterable[int]) -> GroupAlgebraElement:
    """Signed sum of all permutations of S_m moving only ``indices``."""
    indices = sorted(set(indices))
    for i in indices:
        if not 1 <= i <= m:
            raise ValueError("Index {} out of range 1..{}".format(i, m))
    return GroupAlgebraElement(
        m, {p: sign(p) for p in permutations_of(indices, m)})


def symmetrizer(m: int, indices: Iterable[int]) -> GroupAlgebraElement:
    indices = sorted(set(indices))
    for i in indices:
        if not 1 <= i <= m:
            raise ValueError("Index {} out of range 1..{}".format(i, m))
    return GroupAlgebraElement(m, {p: 1 for p in permutations_of(indices, m)})
