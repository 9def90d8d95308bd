import functools
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, Mapping, Set, Tuple

from sympy import QQ
from sympy import Symbol
from sympy.polys.rings import PolyRing

# xi^{(i)}_{a,b} is the variable (i, a, b)
Variable = Tuple[int, int, int]
# sparse exponent vector: ((variable, exponent), ...) sorted by variable
Exponents = Tuple[Tuple[Variable, int], ...]


def _as_fraction(c) -> Fraction:
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, Rational):
        return Fraction(c.numerator, c.denominator)
    raise TypeError("Expected a rational number, got {!r}".format(c))


def _qq(c):
    c = _as_fraction(c)
    return QQ(c.numerator, c.denominator)


def _from_qq(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


@functools.lru_cache(maxsize=None)
def _ring(variables: Tuple[Variable, ...]) -> PolyRing:
    """The polynomial ring over QQ generated by ``variables`` in that order."""
    symbols = tuple(Symbol("xi{}_{}_{}".format(*v)) for v in variables)
    return PolyRing(symbols or "", QQ)


def _lift(poly, old: Tuple[Variable, ...], new: Tuple[Variable, ...]):
    if old == new:
        return poly
    position = {v: j for j, v in enumerate(old)}
    index = [position.get(v) for v in new]
    terms = {}
    for monom, c in poly.items():
        terms[tuple(0 if j is None else monom[j] for j in index)] = c
    return _ring(new).from_dict(terms)


class MultiPoly(object):
    """A polynomial over Q in the commuting variables ``xi^{(i)}_{a,b}``.

    The polynomial is a ``sympy`` ring element over ``QQ``. Its generators
    are the variables it was built from, sorted by ``(i, a, b)``. Operands
    over different variable sets are lifted to the ring of the union first.

    Args:
        terms (mapping): exponent vector -> rational coefficient.
    """

    __slots__ = ("_vars", "_poly")

    def __init__(self, terms: Mapping = None):
        clean = {}  # type: Dict[Exponents, Fraction]
        for exps, c in (terms or {}).items():
            key = tuple(sorted((tuple(v), int(e)) for v, e in exps if e))
            clean[key] = clean.get(key, Fraction(0)) + _as_fraction(c)
        variables = tuple(sorted({v for key in clean for v, _ in key}))
        position = {v: j for j, v in enumerate(variables)}
        monoms = {}
        for key, c in clean.items():
            monom = [0] * len(variables)
            for v, e in key:
                monom[position[v]] = e
            monoms[tuple(monom)] = _qq(c)
        self._vars = variables
        self._poly = _ring(variables).from_dict(monoms)

    @classmethod
    def _wrap(cls, variables: Tuple[Variable, ...], poly) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._poly = poly
        return obj

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._wrap((), _ring(()).zero)

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, c) -> "MultiPoly":
        return cls._wrap((), _ring(()).ground_new(_qq(c)))

    @classmethod
    def variable(cls, i: int, a: int, b: int) -> "MultiPoly":
        variables = ((i, a, b),)
        return cls._wrap(variables, _ring(variables).gens[0])

    @classmethod
    def coerce(cls, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return cls.constant(value)

    def _common(self, other: "MultiPoly"):
        if self._vars == other._vars:
            return self._vars, self._poly, other._poly
        variables = tuple(sorted(set(self._vars) | set(other._vars)))
        return (variables, _lift(self._poly, self._vars, variables),
                _lift(other._poly, other._vars, variables))

    def items(self) -> Iterator[Tuple[Exponents, Fraction]]:
        terms = []
        for monom, c in self._poly.items():
            key = tuple((v, e) for v, e in zip(self._vars, monom) if e)
            terms.append((key, _from_qq(c)))
        return iter(sorted(terms))

    def __len__(self):
        return len(self._poly)

    def __bool__(self):
        return bool(self._poly)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        _, p, q = self._common(other)
        return p == q

    def __hash__(self):
        return hash(frozenset(self.items()))

    def __add__(self, other) -> "MultiPoly":
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        variables, p, q = self._common(other)
        return MultiPoly._wrap(variables, p + q)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._wrap(self._vars, -self._poly)

    def __sub__(self, other) -> "MultiPoly":
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return MultiPoly.coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if not self._poly or not other._poly:
            return MultiPoly.zero()
        variables, p, q = self._common(other)
        return MultiPoly._wrap(variables, p * q)

    def __rmul__(self, other) -> "MultiPoly":
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("Negative exponent")
        return MultiPoly._wrap(self._vars, self._poly ** int(exponent))

    def scale(self, c) -> "MultiPoly":
        c = _qq(c)
        if not c:
            return MultiPoly.zero()
        return MultiPoly._wrap(self._vars, self._poly.mul_ground(c))

    def is_constant(self) -> bool:
        return self._poly.is_ground

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("{} is not constant".format(self))
        zero_monom = (0,) * len(self._vars)
        return _from_qq(self._poly.get(zero_monom, QQ(0)))

    def degree(self) -> int:
        return max((sum(monom) for monom in self._poly), default=0)

    def variables(self) -> Set[Variable]:
        return {v for monom in self._poly
                for v, e in zip(self._vars, monom) if e}

    def evaluate_at(self, values: Mapping[Variable, object]) -> "MultiPoly":
        """Substitute rationals for the variables listed in ``values``."""
        poly = self._poly
        gens = poly.ring.gens
        for j, v in enumerate(self._vars):
            if v in values:
                poly = poly.subs(gens[j], _qq(values[v]))
        return MultiPoly._wrap(self._vars, poly)

    def to_text(self) -> str:
        if not self._poly:
            return "0"
        parts = []
        for key, c in self.items():
            factors = []
            for (i, a, b), e in key:
                name = "xi{}_{}{}".format(i, a, b)
                factors.append(name if e == 1 else "{}^{}".format(name, e))
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append("{}*{}".format(c, "*".join(factors)))
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "MultiPoly({!r})".format(self.to_text())
