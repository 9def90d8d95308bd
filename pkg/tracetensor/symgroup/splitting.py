from typing import Iterable, NamedTuple, Tuple

from tracetensor.symgroup.permutation import Permutation
from tracetensor.symgroup.permutation import format_cycles


class CycleSplit(NamedTuple):
    """Factorization of a permutation relative to a bipartition A | B.

    For a right split ``tau1 * tau2 * tau3`` recomposes the permutation;
    for a left split (``left`` is true) ``tau3 * tau1 * tau2`` does.
    ``tau2`` collects the cycles lying inside B, ``tau3`` moves only
    A-indices and every nontrivial cycle of ``tau1`` meets A exactly once.
    """

    tau1: Permutation
    tau2: Permutation
    tau3: Permutation
    A: Tuple[int, ...]
    left: bool = False

    def recompose(self) -> Permutation:
        if self.left:
            return self.tau3 * self.tau1 * self.tau2
        return self.tau1 * self.tau2 * self.tau3


def _validate(p: Permutation, A: Iterable[int]) -> Tuple[int, ...]:
    A = tuple(sorted(set(A)))
    for a in A:
        if not 1 <= a <= p.degree:
            raise ValueError("Index {} out of range 1..{}".format(a, p.degree))
    return A


def _parts(p: Permutation, A: Tuple[int, ...]):
    """The B-only part and the A-successor map of ``p``."""
    in_a = set(A)
    m = p.degree
    b_images = list(range(1, m + 1))
    a_images = list(range(1, m + 1))
    for cycle in p.cycles():
        hits = [x for x in cycle if x in in_a]
        if not hits:
            for x in cycle:
                b_images[x - 1] = p(x)
            continue
        for a in hits:
            j = p(a)
            while j not in in_a:
                j = p(j)
            a_images[a - 1] = j
    return Permutation(b_images), Permutation(a_images)


def split_cycles(p: Permutation, A: Iterable[int]) -> CycleSplit:
    """Split ``p`` as ``tau1 * tau2 * tau3`` relative to ``A``.

    Each cycle ``(C_1, a_1, C_2, a_2, ..., C_j, a_j)`` of ``p`` (the C's
    being strings outside A) is rewritten as
    ``(a_1, C_1)(a_2, C_2)...(a_j, C_j) * (a_1, a_2, ..., a_j)``.
    """
    A = _validate(p, A)
    tau2, tau3 = _parts(p, A)
    tau1 = p * tau3.inverse() * tau2.inverse()
    split = CycleSplit(tau1, tau2, tau3, A)
    assert split.recompose() == p
    return split


def split_cycle_left(p: Permutation, A: Iterable[int]) -> CycleSplit:
    """Split ``p`` as ``tau3 * tau1 * tau2`` with the A-part on the left.

    A cycle ``(C_1, a_1, ..., C_j, a_j)`` becomes
    ``(a_1, ..., a_j) * (a_j, C_1)(a_1, C_2)...(a_{j-1}, C_j)``.
    """
    A = _validate(p, A)
    tau2, tau3 = _parts(p, A)
    tau1 = tau3.inverse() * p * tau2.inverse()
    split = CycleSplit(tau1, tau2, tau3, A, left=True)
    assert split.recompose() == p
    return split


def in_U(p: Permutation, A: Iterable[int]) -> bool:
    """Whether every cycle of ``p`` contains at most one element of ``A``."""
    in_a = set(A)
    return all(
        sum(1 for x in cycle if x in in_a) <= 1 for cycle in p.cycles())


def _tau1_cycles(split: CycleSplit):
    """Cycles of tau1 in the order they close along the original cycles.

    Each original cycle is read starting right after its least A-index, so
    the factor for that index comes last.
    """
    p = split.recompose()
    in_a = set(split.A)
    result = []
    for cycle in p.cycles():
        hits = [x for x in cycle if x in in_a]
        if not hits:
            continue
        start = cycle.index(min(hits))
        ordered = cycle[start + 1:] + cycle[:start + 1]
        run = []
        for x in ordered:
            if x in in_a:
                if split.left:
                    head = split.tau3.inverse()(x)
                    if run:
                        result.append((head,) + tuple(run))
                else:
                    if run:
                        result.append((x,) + tuple(run))
                run = []
            else:
                run.append(x)
    return result


def format_split(split: CycleSplit) -> str:
    """Render as ``"tau1 | tau2 | tau3"`` in cycle notation."""
    cycles = _tau1_cycles(split)
    tau1 = "".join(
        "(" + ",".join(str(a) for a in c) + ")" for c in cycles) or "id"
    return " | ".join([tau1, format_cycles(split.tau2), format_cycles(split.tau3)])
