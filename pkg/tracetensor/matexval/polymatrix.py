from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from tracetensor.matexval.multipoly import MultiPoly
from tracetensor.matexval.multipoly import Variable

Index = Tuple[int, int]


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an integer into a :class:`Fraction`."""
    if isinstance(value, bool):
        raise ValueError("Not a rational number: {!r}".format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ValueError("Not a rational number: {!r}".format(value))


class PolyMatrix(object):
    """A square matrix with :class:`MultiPoly` entries, stored sparsely.

    Rows and columns are 0-based. For evaluations of arity ``n`` the
    dimension is ``d ** n`` and the index of a basis tensor
    ``e_{a_1} (x) ... (x) e_{a_n}`` is its C-order (last slot fastest)
    flattening.
    """

    __slots__ = ("_dim", "_entries")

    def __init__(self, dim: int, entries: Mapping[Index, object] = None):
        if dim < 0:
            raise ValueError("Dimension must be non-negative, got {}".format(dim))
        self._dim = dim
        clean = {}  # type: Dict[Index, MultiPoly]
        for (r, c), value in (entries or {}).items():
            if not (0 <= r < dim and 0 <= c < dim):
                raise ValueError("Entry ({}, {}) outside a {}x{} matrix".format(
                    r, c, dim, dim))
            value = MultiPoly.coerce(value)
            if value:
                clean[(r, c)] = value
        self._entries = clean

    @classmethod
    def _from_clean(cls, dim: int, entries: Dict[Index, MultiPoly]) -> "PolyMatrix":
        obj = cls.__new__(cls)
        obj._dim = dim
        obj._entries = {k: v for k, v in entries.items() if v}
        return obj

    @classmethod
    def zero(cls, dim: int) -> "PolyMatrix":
        return cls(dim)

    @classmethod
    def identity(cls, dim: int) -> "PolyMatrix":
        one = MultiPoly.one()
        return cls._from_clean(dim, {(i, i): one for i in range(dim)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "PolyMatrix":
        dim = len(rows)
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != dim:
                raise ValueError("Matrix is not square: row {} has {} entries, expected {}".format(
                    r, len(row), dim))
            for c, value in enumerate(row):
                if not isinstance(value, MultiPoly):
                    value = MultiPoly.constant(parse_rational(value))
                entries[(r, c)] = value
        return cls(dim, entries)

    @property
    def dim(self) -> int:
        return self._dim

    def __getitem__(self, index: Index) -> MultiPoly:
        return self._entries.get(index, MultiPoly.zero())

    def items(self) -> Iterator[Tuple[Index, MultiPoly]]:
        for key in sorted(self._entries):
            yield key, self._entries[key]

    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._dim == other._dim and self._entries == other._entries

    def __hash__(self):
        return hash((self._dim, frozenset(self._entries.items())))

    def _check(self, other: "PolyMatrix"):
        if self._dim != other._dim:
            raise ValueError("Dimension mismatch: {} vs {}".format(self._dim, other._dim))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        entries = dict(self._entries)
        for key, value in other._entries.items():
            entries[key] = entries[key] + value if key in entries else value
        return PolyMatrix._from_clean(self._dim, entries)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix._from_clean(self._dim, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        rows_of_other = {}  # type: Dict[int, List[Tuple[int, MultiPoly]]]
        for (k, c), value in other._entries.items():
            rows_of_other.setdefault(k, []).append((c, value))
        entries = {}  # type: Dict[Index, MultiPoly]
        for (r, k), a in self._entries.items():
            for c, b in rows_of_other.get(k, ()):
                term = a * b
                key = (r, c)
                entries[key] = entries[key] + term if key in entries else term
        return PolyMatrix._from_clean(self._dim, entries)

    def __mul__(self, other) -> "PolyMatrix":
        if isinstance(other, PolyMatrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other) -> "PolyMatrix":
        return self.scale(other)

    def scale(self, c) -> "PolyMatrix":
        c = MultiPoly.coerce(c)
        if not c:
            return PolyMatrix.zero(self._dim)
        return PolyMatrix._from_clean(self._dim, {k: c * v for k, v in self._entries.items()})

    def trace(self) -> MultiPoly:
        result = MultiPoly.zero()
        for i in range(self._dim):
            if (i, i) in self._entries:
                result = result + self._entries[(i, i)]
        return result

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix._from_clean(
            self._dim, {(c, r): v for (r, c), v in self._entries.items()})

    def permute_columns(self, targets: Sequence[int]) -> "PolyMatrix":
        """Right multiplication by the 0/1 matrix with ones at ``(targets[c], c)``."""
        position = {int(t): c for c, t in enumerate(targets)}
        return PolyMatrix._from_clean(
            self._dim, {(r, position[k]): v for (r, k), v in self._entries.items()})

    def evaluate_at(self, values: Mapping[Variable, object]) -> "PolyMatrix":
        return PolyMatrix._from_clean(
            self._dim, {k: v.evaluate_at(values) for k, v in self._entries.items()})

    def variables(self):
        result = set()
        for value in self._entries.values():
            result.update(value.variables())
        return result

    def to_rows(self) -> List[List[MultiPoly]]:
        return [[self[(r, c)] for c in range(self._dim)] for r in range(self._dim)]

    def to_rational_rows(self) -> List[List[str]]:
        """Rows of ``"p/q"`` strings; every entry must be constant."""
        return [[str(value.constant_value()) for value in row] for row in self.to_rows()]

    def __repr__(self):
        return "PolyMatrix(dim={}, nnz={})".format(self._dim, len(self._entries))


def kron(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Kronecker product with ``a`` indexing the slow (leading) slot."""
    db = b.dim
    entries = {}  # type: Dict[Index, MultiPoly]
    for (r1, c1), x in a.items():
        for (r2, c2), y in b.items():
            entries[(r1 * db + r2, c1 * db + c2)] = x * y
    return PolyMatrix._from_clean(a.dim * db, entries)


def kron_all(factors: Sequence[PolyMatrix]) -> PolyMatrix:
    result = PolyMatrix.identity(1)
    for f in factors:
        result = kron(result, f)
    return result


def generic_matrix(i: int, d: int) -> PolyMatrix:
    """The d x d matrix whose (a, b) entry is ``xi^{(i)}_{a,b}`` (1-based a, b)."""
    if d < 1:
        raise ValueError("d must be >= 1, got {}".format(d))
    return PolyMatrix._from_clean(d, {
        (a, b): MultiPoly.variable(i, a + 1, b + 1) for a in range(d) for b in range(d)
    })


def concrete_matrix(rows: Sequence[Sequence[object]]) -> PolyMatrix:
    """A constant matrix from rows of rationals or ``"p/q"`` strings."""
    if not rows:
        raise ValueError("A matrix needs at least one row")
    return PolyMatrix.from_rows(rows)


def partial_trace_matrix(m: PolyMatrix, d: int, n: int) -> PolyMatrix:
    """Contract the last tensor slot of a ``d ** n`` square matrix."""
    if n < 1:
        raise ValueError("Need at least one tensor slot, got n={}".format(n))
    if m.dim != d ** n:
        raise ValueError("Matrix of dimension {} is not {}^{}".format(m.dim, d, n))
    entries = {}  # type: Dict[Index, MultiPoly]
    for (r, c), value in m.items():
        r0, rt = divmod(r, d)
        c0, ct = divmod(c, d)
        if rt != ct:
            continue
        key = (r0, c0)
        entries[key] = entries[key] + value if key in entries else value
    return PolyMatrix._from_clean(d ** (n - 1), entries)
