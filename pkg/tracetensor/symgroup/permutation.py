import itertools
import re
from typing import Iterable, Iterator, List, Sequence, Tuple

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation(object):
    """A permutation of {1, ..., m} stored in one-line notation.

    ``images[i - 1]`` is the image of ``i``. Composition follows
    ``(p * q)(i) == p(q(i))``.

    Args:
        images (sequence of int): Images of 1, ..., m.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("{} is not a permutation of 1..{}".format(
                images, len(images)))
        self._images = images

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        if m < 0:
            raise ValueError("Degree must be non-negative")
        return cls(range(1, m + 1))

    @classmethod
    def from_cycles(cls, m: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build a permutation from a product of cycles.

        The cycles are composed right to left, so overlapping cycles are
        allowed: ``from_cycles(3, [(1, 2), (2, 3)])`` is ``(1, 2) * (2, 3)``.
        """
        result = cls.identity(m)
        for cycle in cycles:
            cycle = tuple(cycle)
            images = list(range(1, m + 1))
            if len(set(cycle)) != len(cycle):
                raise ValueError("Repeated entry in cycle {}".format(cycle))
            for a in cycle:
                if not 1 <= a <= m:
                    raise ValueError(
                        "Cycle entry {} out of range 1..{}".format(a, m))
            for pos, a in enumerate(cycle):
                images[a - 1] = cycle[(pos + 1) % len(cycle)]
            result = result * cls(images)
        return result

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, i: int) -> int:
        return self._images[i - 1]

    def __len__(self):
        return len(self._images)

    def __iter__(self) -> Iterator[int]:
        return iter(self._images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self):
        return hash(self._images)

    def __lt__(self, other: "Permutation"):
        return (len(self), self._images) < (len(other), other._images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def __repr__(self):
        return "Permutation({})".format(format_cycles(self))

    def __str__(self):
        return format_cycles(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._images)
        for i, image in enumerate(self._images, start=1):
            inv[image - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self._images, 1))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """Disjoint cycles, each starting from its least element.

        Cycles are ordered by their least element. Fixed points are only
        reported when ``include_fixed`` is true.
        """
        seen = set()
        result = []
        for start in range(1, len(self._images) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            if include_fixed or len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_of(self, i: int) -> Tuple[int, ...]:
        """The cycle through ``i``, starting at ``i``."""
        cycle = [i]
        j = self(i)
        while j != i:
            cycle.append(j)
            j = self(j)
        return tuple(cycle)

    def support(self) -> List[int]:
        return [i for i, image in enumerate(self._images, 1) if image != i]

    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted(
            (len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def sign(self) -> int:
        return sign(self)

    def conjugate(self, by: "Permutation") -> "Permutation":
        """Return ``by * self * by^-1``."""
        return by * self * by.inverse()

    def embed(self, m: int, offset: int = 0) -> "Permutation":
        """Embed into S_m acting on ``offset + 1, ..., offset + degree``."""
        if offset < 0 or offset + self.degree > m:
            raise ValueError("Cannot embed S_{} at offset {} into S_{}".format(
                self.degree, offset, m))
        images = list(range(1, m + 1))
        for i, image in enumerate(self._images, 1):
            images[offset + i - 1] = offset + image
        return Permutation(images)

    def restrict(self, indices: Sequence[int]) -> "Permutation":
        """Restrict to an invariant index set, relabelled in increasing order."""
        indices = sorted(indices)
        position = {a: pos for pos, a in enumerate(indices, 1)}
        images = []
        for a in indices:
            image = self(a)
            if image not in position:
                raise ValueError(
                    "{} is not invariant under {}".format(indices, self))
            images.append(position[image])
        return Permutation(images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Composition ``(p o q)(i) = p(q(i))``."""
    if p.degree != q.degree:
        raise ValueError("Cannot compose permutations of degrees {} and {}".format(
            p.degree, q.degree))
    return Permutation(p(image) for image in q.images)


def sign(p: Permutation) -> int:
    """Parity ``(-1)^(m - number of cycles)``, fixed points included."""
    return -1 if (p.degree - len(p.cycles(include_fixed=True))) % 2 else 1


def direct_product(p: Permutation, q: Permutation) -> Permutation:
    """The image of (p, q) under S_m x S_n into S_{m+n}."""
    return Permutation(
        list(p.images) + [p.degree + image for image in q.images])


def symmetric_group(m: int) -> Iterator[Permutation]:
    """All permutations of {1..m} in lexicographic one-line order."""
    for images in itertools.permutations(range(1, m + 1)):
        yield Permutation(images)


def permutations_of(indices: Sequence[int], m: int) -> Iterator[Permutation]:
    """All permutations of S_m moving only ``indices``."""
    indices = sorted(indices)
    for arrangement in itertools.permutations(indices):
        images = list(range(1, m + 1))
        for a, b in zip(indices, arrangement):
            images[a - 1] = b
        yield Permutation(images)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "id"
    return "".join("(" + ",".join(str(a) for a in c) + ")" for c in cycles)


def parse_cycles(text: str, m: int) -> Permutation:
    """Parse cycle notation such as ``"(1,7,8,4,2,6,3)"`` or ``"(1,2)(3,4)"``.

    ``"id"`` and the empty string denote the identity. Cycles are composed
    right to left.
    """
    text = text.strip()
    if text in ("", "id", "()"):
        return Permutation.identity(m)
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError("Malformed cycle notation: {!r}".format(text))
    cycles = []
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        try:
            cycles.append(tuple(int(tok) for tok in re.split(r"[,\s]+", body)))
        except ValueError:
            raise ValueError("Malformed cycle notation: {!r}".format(text))
    return Permutation.from_cycles(m, cycles)


def parse_one_line(text: str) -> Permutation:
    """Parse one-line notation given as a comma list, e.g. ``"2,1,3"``."""
    try:
        images = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError("Malformed one-line notation: {!r}".format(text))
    return Permutation(images)


def parse_index_set(text: str) -> List[int]:
    """Parse a comma list of indices such as ``"1,2"``."""
    try:
        indices = sorted({int(tok) for tok in text.split(",") if tok.strip()})
    except ValueError:
        raise ValueError("Malformed index list: {!r}".format(text))
    return indices
