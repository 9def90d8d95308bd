import re
from typing import Iterable, Tuple

Word = Tuple[int, ...]

_LETTER_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def make_word(letters: Iterable[int]) -> Word:
    """Validate and freeze a word; the empty word is the monomial 1."""
    word = tuple(int(a) for a in letters)
    for a in word:
        if a < 1:
            raise ValueError("Variable indices must be >= 1, got {}".format(a))
    return word


class CyclicWord(tuple):
    """A nonempty word up to rotation, stored as its least rotation.

    Two words that are rotations of each other construct equal
    ``CyclicWord`` instances, so they can be used directly as dict keys.
    """

    __slots__ = ()

    def __new__(cls, letters: Iterable[int]):
        word = make_word(letters)
        if not word:
            raise ValueError("The trace of the empty word is tr(1), not a cyclic word")
        return super().__new__(cls, min(word[i:] + word[:i] for i in range(len(word))))

    @property
    def letters(self) -> Word:
        return tuple(self)

    def __repr__(self):
        return "CyclicWord({})".format(list(self))

    def __str__(self):
        return "tr({})".format(format_word(self))


def cyclic_canonicalize(w: Iterable[int]) -> CyclicWord:
    return CyclicWord(w)


def rotate(w: Word, j: int) -> Word:
    if not w:
        return w
    j %= len(w)
    return w[j:] + w[:j]


def format_word(w: Iterable[int]) -> str:
    """``(1, 3, 3)`` -> ``"x1*x3^2"``; the empty word renders as ``"1"``."""
    w = tuple(w)
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        if j - i == 1:
            parts.append("x{}".format(w[i]))
        else:
            parts.append("x{}^{}".format(w[i], j - i))
        i = j
    return "*".join(parts)


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return ()
    letters = []
    for tok in text.split("*"):
        match = _LETTER_RE.match(tok.strip())
        if match is None:
            raise ValueError("Malformed word: {!r}".format(text))
        power = int(match.group(2)) if match.group(2) else 1
        letters.extend([int(match.group(1))] * power)
    return make_word(letters)
