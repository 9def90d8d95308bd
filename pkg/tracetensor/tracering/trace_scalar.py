import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Set, Tuple

from tracetensor.tracering.words import CyclicWord
from tracetensor.tracering.words import format_word
from tracetensor.tracering.words import parse_word

# (exponent of lambda, sorted multiset of cyclic words)
Monomial = Tuple[int, Tuple[CyclicWord, ...]]

ONE_MONOMIAL = (0, ())  # type: Monomial

_TOKEN_RE = re.compile(r"\s*(tr\(([^()]*)\)|L|\d+/\d+|\d+|\^|\*|\+|-)")


def _as_fraction(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, Rational):
        return Fraction(c.numerator, c.denominator)
    raise TypeError("Expected a rational number, got {!r}".format(c))


def monomial_product(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], tuple(sorted(a[1] + b[1])))


class TraceScalar(object):
    """An element of the trace algebra Q[L][tr(M)].

    ``L`` stands for the formal trace of the unit, so the empty word never
    appears inside a trace; it is absorbed into the exponent of ``L``.

    Args:
        terms (mapping): Monomial -> rational coefficient. Monomials are
            pairs ``(lambda_exponent, traces)`` where ``traces`` is an
            iterable of words; it is canonicalized on construction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping = None):
        clean = {}  # type: Dict[Monomial, Fraction]
        for (lam, traces), coeff in (terms or {}).items():
            if lam < 0:
                raise ValueError("Negative power of L: {}".format(lam))
            key = (int(lam), tuple(sorted(CyclicWord(w) for w in traces)))
            clean[key] = clean.get(key, Fraction(0)) + _as_fraction(coeff)
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: Dict[Monomial, Fraction]) -> "TraceScalar":
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "TraceScalar":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "TraceScalar":
        return cls.constant(1)

    @classmethod
    def constant(cls, c) -> "TraceScalar":
        return cls._from_clean({ONE_MONOMIAL: _as_fraction(c)})

    @classmethod
    def lam(cls, power: int = 1) -> "TraceScalar":
        return cls._from_clean({(power, ()): Fraction(1)})

    @classmethod
    def trace(cls, word: Iterable[int]) -> "TraceScalar":
        """``tr(word)``; the trace of the empty word is ``L``."""
        word = tuple(word)
        if not word:
            return cls.lam()
        return cls._from_clean({(0, (CyclicWord(word),)): Fraction(1)})

    @classmethod
    def coerce(cls, value) -> "TraceScalar":
        if isinstance(value, TraceScalar):
            return value
        return cls.constant(value)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in canonical (sorted) order."""
        for key in sorted(self._terms):
            yield key, self._terms[key]

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(key == ONE_MONOMIAL for key in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("{} is not a rational constant".format(self))
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TraceScalar.constant(other)
        if not isinstance(other, TraceScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "TraceScalar":
        other = TraceScalar.coerce(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return TraceScalar._from_clean(terms)

    __radd__ = __add__

    def __neg__(self) -> "TraceScalar":
        return TraceScalar._from_clean({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "TraceScalar":
        return self + (-TraceScalar.coerce(other))

    def __rsub__(self, other) -> "TraceScalar":
        return TraceScalar.coerce(other) - self

    def __mul__(self, other) -> "TraceScalar":
        if not isinstance(other, TraceScalar):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        terms = {}  # type: Dict[Monomial, Fraction]
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = monomial_product(ka, kb)
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return TraceScalar._from_clean(terms)

    def __rmul__(self, other) -> "TraceScalar":
        try:
            c = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    def __pow__(self, exponent: int) -> "TraceScalar":
        if exponent < 0:
            raise ValueError("Negative exponent")
        result = TraceScalar.one()
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, c) -> "TraceScalar":
        c = _as_fraction(c)
        return TraceScalar._from_clean({k: c * v for k, v in self._terms.items()})

    def specialize_lambda(self, d: int) -> "TraceScalar":
        """Substitute the integer ``d`` for ``L``."""
        terms = {}  # type: Dict[Monomial, Fraction]
        for (lam, traces), coeff in self._terms.items():
            key = (0, traces)
            terms[key] = terms.get(key, Fraction(0)) + coeff * Fraction(d) ** lam
        return TraceScalar._from_clean(terms)

    def lambda_degree(self) -> int:
        return max((lam for lam, _ in self._terms), default=0)

    def has_lambda(self) -> bool:
        return any(lam for lam, _ in self._terms)

    def variables(self) -> Set[int]:
        result = set()
        for _, traces in self._terms:
            for w in traces:
                result.update(w)
        return result

    def degrees_in(self, var: int) -> Set[int]:
        """The set of degrees in ``x_var`` over all monomials."""
        return {
            sum(w.count(var) for w in traces) for _, traces in self._terms
        }

    def map_monomials(self, fn) -> "TraceScalar":
        """Apply ``fn(monomial) -> TraceScalar`` to each monomial linearly."""
        result = TraceScalar.zero()
        for key, coeff in self._terms.items():
            result = result + fn(key).scale(coeff)
        return result

    def rename_variables(self, mapping: Mapping[int, int]) -> "TraceScalar":
        terms = {}  # type: Dict[Monomial, Fraction]
        for (lam, traces), coeff in self._terms.items():
            renamed = tuple(
                sorted(CyclicWord(mapping.get(a, a) for a in w) for w in traces))
            key = (lam, renamed)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return TraceScalar._from_clean(terms)

    def to_list(self):
        """JSON form: a list of ``{"num", "den", "lambda", "traces"}``."""
        return [
            {
                "num": str(coeff.numerator),
                "den": str(coeff.denominator),
                "lambda": lam,
                "traces": [list(w) for w in traces],
            }
            for (lam, traces), coeff in self.items()
        ]

    @classmethod
    def from_list(cls, data) -> "TraceScalar":
        terms = {}  # type: Dict[Monomial, Fraction]
        for entry in data:
            try:
                coeff = Fraction(int(entry["num"]), int(entry["den"]))
                key = (int(entry["lambda"]), tuple(tuple(int(a) for a in w)
                                                   for w in entry["traces"]))
            except (KeyError, TypeError, ZeroDivisionError) as e:
                raise ValueError("Malformed trace coefficient {!r}: {}".format(entry, e))
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(terms)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for (lam, traces), coeff in self.items():
            factors = []
            if lam:
                factors.append("L" if lam == 1 else "L^{}".format(lam))
            i = 0
            while i < len(traces):
                j = i
                while j < len(traces) and traces[j] == traces[i]:
                    j += 1
                factor = "tr({})".format(format_word(traces[i]))
                factors.append(factor if j - i == 1 else "{}^{}".format(factor, j - i))
                i = j
            negative = coeff < 0
            mag = -coeff if negative else coeff
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "{}*{}".format(mag, "*".join(factors))
            if not out:
                out.append("-" + body if negative else body)
            else:
                out.append(("- " if negative else "+ ") + body)
        return " ".join(out)

    @classmethod
    def from_text(cls, text: str) -> "TraceScalar":
        """Parse the form produced by :meth:`to_text`, e.g. ``"L^2 - 4"``."""
        tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            match = _TOKEN_RE.match(text, pos)
            if match is None:
                raise ValueError("Malformed trace scalar: {!r}".format(text))
            tokens.append((match.group(1), match.group(2)))
            pos = match.end()
        if not tokens:
            raise ValueError("Empty trace scalar")
        result = cls.zero()
        i = 0
        while i < len(tokens):
            sign = 1
            while i < len(tokens) and tokens[i][0] in "+-":
                if tokens[i][0] == "-":
                    sign = -sign
                i += 1
            term = cls.constant(sign)
            expect_factor = True
            while i < len(tokens) and tokens[i][0] not in "+-":
                tok, body = tokens[i]
                if not expect_factor:
                    if tok != "*":
                        raise ValueError("Malformed trace scalar: {!r}".format(text))
                    expect_factor = True
                    i += 1
                    continue
                if tok == "L":
                    factor = cls.lam()
                elif tok.startswith("tr("):
                    factor = cls.trace(parse_word(body))
                elif tok[0].isdigit():
                    num, _, den = tok.partition("/")
                    factor = cls.constant(Fraction(int(num), int(den or 1)))
                else:
                    raise ValueError("Malformed trace scalar: {!r}".format(text))
                i += 1
                if i + 1 < len(tokens) and tokens[i][0] == "^":
                    if not tokens[i + 1][0].isdigit():
                        raise ValueError("Malformed exponent in {!r}".format(text))
                    factor = factor ** int(tokens[i + 1][0])
                    i += 2
                term = term * factor
                expect_factor = False
            if expect_factor:
                raise ValueError("Malformed trace scalar: {!r}".format(text))
            result = result + term
        return result

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return "TraceScalar({!r})".format(self.to_text())


def ts_add(a: TraceScalar, b: TraceScalar) -> TraceScalar:
    return a + b


def ts_mul(a: TraceScalar, b: TraceScalar) -> TraceScalar:
    return a * b


def specialize_lambda(a: TraceScalar, d: int) -> TraceScalar:
    if d < 1:
        raise ValueError("Matrix size must be >= 1, got {}".format(d))
    return a.specialize_lambda(d)


def power_trace(i: int, var: int = 1) -> TraceScalar:
    """``tr(x_var^i)``, which is ``L`` for ``i == 0``."""
    if i < 0:
        raise ValueError("Negative power {}".format(i))
    return TraceScalar.trace((var,) * i)
