import logging
from typing import Dict, Iterable, List, Tuple

from tracetensor.interp.certificate import CertificateStep
from tracetensor.interp.certificate import DeductionCertificate
from tracetensor.interp.interpretation import InterpContext
from tracetensor.interp.interpretation import interpret
from tracetensor.symgroup.group_algebra import antisymmetrizer
from tracetensor.symgroup.permutation import Permutation
from tracetensor.symgroup.permutation import sign
from tracetensor.symgroup.splitting import split_cycles
from tracetensor.utils.random import get_random_state
from tracetensor.utils.random import random_permutation
from tracetensor.utils.random import random_subset


class _Frame(object):
    """Local slot and variable labels built up during a reduction.

    Local slot ``j`` stands for the global slot ``ys[j - 1]`` and local
    variable ``j`` for the global index ``xs[j - 1]``.
    """

    def __init__(self, ys, xs):
        self.ys = list(ys)
        self.xs = list(xs)
        self.steps = []  # type: List[CertificateStep]

    def slot(self, g):
        return self.ys.index(g) + 1

    def var(self, g):
        return self.xs.index(g) + 1

    def add(self, kind, **params):
        self.steps.append(CertificateStep(kind, params))


def _check_problem(sigma: Permutation, C: Iterable[int], ctx: InterpContext, d: int):
    C = sorted(set(C))
    if sigma.degree != ctx.m:
        raise ValueError("Permutation {} is not in S_{}".format(sigma, ctx.m))
    if d < 0:
        raise ValueError("d must be non-negative, got {}".format(d))
    if d + 1 > ctx.m:
        raise ValueError(
            "No relation: d + 1 = {} exceeds n + k = {}".format(d + 1, ctx.m))
    if len(C) != d + 1:
        raise ValueError("C must have d + 1 = {} elements, got {}".format(d + 1, C))
    for c in C:
        if not 1 <= c <= ctx.m:
            raise ValueError("Index {} out of range 1..{}".format(c, ctx.m))
    return C


def reduce_to_basic(sigma: Permutation, C: Iterable[int], ctx: InterpContext, d: int,
                    logger=None) -> DeductionCertificate:
    """Certify that the interpretation of ``sigma * A(C)`` follows from F_{h,d}.

    The permutation is split over ``(C, D)`` so that its C-part is absorbed
    into the antisymmetrizer up to sign. Cycles through C that still contain
    slot indices are rewritten with ``(c, X, a, Y) = (a, X)(c, Y)(a, c)``,
    moving ``a`` into C and pushing ``(a, c)`` to the right. What remains is
    a product of cycles ``(c, u)`` with ``u`` pure variables, a disjoint
    block, the core antisymmetrizer and the pushed transpositions; each is
    peeled by one rewrite step. The degree ``h`` of the basic relation is
    the number of variable indices left in C at the end.

    Raises:
        ValueError: if ``|C| != d + 1`` or ``d + 1 > n + k``.
    """
    logger = logger or logging.getLogger(__name__)
    C = _check_problem(sigma, C, ctx, d)
    n, m = ctx.n, ctx.m

    def is_slot(i):
        return i <= n

    target = interpret(sigma * antisymmetrizer(m, C), ctx)

    split = split_cycles(sigma, C)
    s = sign(split.tau3)
    phi = split.tau1 * split.tau2
    in_c = set(C)
    words = {c: list(phi.cycle_of(c)[1:]) for c in C}  # type: Dict[int, List[int]]
    rest = [cyc for cyc in phi.cycles(include_fixed=True) if not in_c.intersection(cyc)]

    left_factors = []  # type: List[Tuple[int, List[int]]]
    pushed = []  # type: List[Tuple[int, int]]
    while True:
        pending = [c for c in sorted(in_c) if any(is_slot(i) for i in words[c])]
        if not pending:
            break
        c = pending[0]
        w = words.pop(c)
        pos = max(j for j, i in enumerate(w) if is_slot(i))
        a = w[pos]
        left_factors.append((c, w[pos + 1:]))
        pushed.append((a, c))
        in_c.remove(c)
        in_c.add(a)
        words[a] = w[:pos]
        logger.debug("swapped %d into C for %d", a, c)

    core = sorted(in_c)
    frame = _Frame([i for i in core if is_slot(i)], [i for i in core if not is_slot(i)])
    h = len(frame.xs)
    logger.info("reducing to F_{%d,%d} with %d pushed transpositions", h, d, len(pushed))

    for a, c in reversed(pushed):
        if is_slot(c):
            frame.ys.append(c)
            frame.add("pad-identity", count=1)
            gamma = Permutation.from_cycles(
                len(frame.ys), [(frame.slot(a), frame.slot(c))])
            frame.add("permutation-factor-move", perm=list(gamma.images), side="left")
        else:
            frame.xs.append(c)
            frame.add("left-multiply-monomial", slot=frame.slot(a), word=[frame.var(c)])

    block = [cyc for cyc in rest if len(cyc) > 1]
    if block:
        bys = sorted(i for cyc in block for i in cyc if is_slot(i))
        bxs = sorted(i for cyc in block for i in cyc if not is_slot(i))
        local = {g: j for j, g in enumerate(bys + bxs, 1)}
        perm = Permutation.from_cycles(
            len(local), [tuple(local[g] for g in cyc) for cyc in block])
        frame.add("tensor-split", n=len(bys), k=len(bxs), perm=list(perm.images),
                  shift=len(frame.xs))
        frame.ys.extend(bys)
        frame.xs.extend(bxs)
    fixed_slots = [cyc[0] for cyc in rest if len(cyc) == 1 and is_slot(cyc[0])]
    fixed_vars = [cyc[0] for cyc in rest if len(cyc) == 1 and not is_slot(cyc[0])]
    if fixed_slots:
        frame.ys.extend(fixed_slots)
        frame.add("pad-identity", count=len(fixed_slots))
    if fixed_vars:
        frame.xs.extend(fixed_vars)
        frame.add("trace-factor-multiply", variables=[frame.var(g) for g in fixed_vars])

    def peel(c, u):
        if not u:
            return
        frame.xs.extend(u)
        word = [frame.var(g) for g in u]
        if is_slot(c):
            frame.add("right-multiply-monomial", slot=frame.slot(c), word=word)
        else:
            frame.add("monomial-substitution", variable=frame.var(c), word=word,
                      side="left")

    for c in core:
        peel(c, words[c])
    for c, u in reversed(left_factors):
        peel(c, u)

    assert sorted(frame.ys) == list(ctx.A)
    assert sorted(frame.xs) == list(ctx.B)
    gamma = Permutation(frame.ys) if frame.ys else Permutation.identity(0)
    variables = [g - n for g in frame.xs]
    total_sign = s * (-1) ** h
    if not (gamma.is_identity() and variables == list(range(1, ctx.k + 1))
            and total_sign == 1):
        frame.add("conjugate", perm=list(gamma.images), variables=variables,
                  sign=str(total_sign))
    logger.debug("certificate with %d steps", len(frame.steps))
    return DeductionCertificate(h, d, target, frame.steps)


def sample_reduction_problem(random_state=None, max_m=8, max_d=3):
    """A random ``(sigma, C, ctx, d)`` accepted by :func:`reduce_to_basic`."""
    rng = get_random_state(random_state)
    m = int(rng.randint(2, max_m + 1))
    d = int(rng.randint(1, min(max_d, m - 1) + 1))
    n = int(rng.randint(0, m + 1))
    ctx = InterpContext(n, m - n)
    sigma = random_permutation(m, rng)
    C = random_subset(m, d + 1, rng)
    return sigma, C, ctx, d
