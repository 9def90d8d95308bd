from fractions import Fraction
from typing import Dict, Tuple

from tracetensor.symgroup.group_algebra import GroupAlgebraElement
from tracetensor.symgroup.permutation import Permutation
from tracetensor.symgroup.splitting import split_cycles
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.twisted.element import TwistedElement


class NotMultilinearError(ValueError):
    """The element is not jointly multilinear in x_1, ..., x_k."""


class InterpContext(object):
    """Index layout for the n-interpretation of S_{n+k}.

    ``A = {1..n}`` indexes tensor slots and ``B = {n+1..n+k}`` indexes the
    variables, index ``n + j`` standing for ``x_j``.
    """

    __slots__ = ("n", "k")

    def __init__(self, n: int, k: int):
        if n < 0 or k < 0 or n + k < 1:
            raise ValueError(
                "Need n >= 0, k >= 0 and n + k >= 1, got n={}, k={}".format(n, k))
        self.n = n
        self.k = k

    @property
    def m(self) -> int:
        return self.n + self.k

    @property
    def A(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def B(self) -> Tuple[int, ...]:
        return tuple(range(self.n + 1, self.n + self.k + 1))

    def __eq__(self, other):
        if not isinstance(other, InterpContext):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k)

    def __hash__(self):
        return hash((self.n, self.k))

    def __repr__(self):
        return "InterpContext(n={}, k={})".format(self.n, self.k)


def _check(tau: Permutation, ctx: InterpContext):
    if tau.degree != ctx.m:
        raise ValueError("Permutation {} is not in S_{} (n={}, k={})".format(
            tau, ctx.m, ctx.n, ctx.k))


def interpret_term(tau: Permutation, ctx: InterpContext):
    """``(tensor word, permutation, trace coefficient)`` of one permutation."""
    _check(tau, ctx)
    n = ctx.n
    split = split_cycles(tau, ctx.A)
    coeff = TraceScalar.one()
    for cycle in tau.cycles(include_fixed=True):
        if min(cycle) > n:
            coeff = coeff * TraceScalar.trace(tuple(b - n for b in cycle))
    words = []
    for i in range(1, n + 1):
        cycle = split.tau1.cycle_of(i)
        words.append(tuple(b - n for b in cycle[1:]))
    tau3 = split.tau3
    tensor = tuple(words[tau3(i) - 1] for i in range(1, n + 1))
    return tensor, tau3.inverse().restrict(ctx.A), coeff


def interpret_perm(tau: Permutation, ctx: InterpContext) -> TwistedElement:
    """The n-interpretation of a single permutation.

    With ``tau = tau1 tau2 tau3`` split over ``A``, this is
    ``tau3^-1 o prod tr(N_l) (M_1 (x) ... (x) M_n)`` where ``M_i`` reads the
    variables of the tau1-cycle through ``i`` forwards and ``N_l`` those of
    the tau2-cycles. For ``k == 0`` the result is ``tau^-1`` rather than
    ``tau``: the trace pairing reads cycles forwards. The two agree on
    involutions, and antisymmetrizers are unchanged.
    """
    tensor, perm, coeff = interpret_term(tau, ctx)
    return TwistedElement(ctx.n, {(tensor, perm): coeff})


def interpret(g: GroupAlgebraElement, ctx: InterpContext) -> TwistedElement:
    if g.degree != ctx.m:
        raise ValueError("Element of Q[S_{}] does not match n + k = {}".format(
            g.degree, ctx.m))
    terms = {}  # type: Dict
    for tau, c in g.items():
        tensor, perm, coeff = interpret_term(tau, ctx)
        key = (tensor, perm)
        terms[key] = terms.get(key, TraceScalar.zero()) + coeff.scale(c)
    return TwistedElement(ctx.n, terms)


def encode_term(tensor, perm: Permutation, traces, ctx: InterpContext) -> Permutation:
    """Inverse of :func:`interpret_term` for a multilinear monomial term."""
    n, k = ctx.n, ctx.k
    letters = [a for w in tensor for a in w] + [a for w in traces for a in w]
    if sorted(letters) != list(range(1, k + 1)):
        raise NotMultilinearError(
            "Term {} o {} with traces {} is not multilinear in x1..x{}".format(
                tensor, perm, list(traces), k))
    cycles = []
    for j in range(1, n + 1):
        word = tensor[perm(j) - 1]
        if word:
            cycles.append((j,) + tuple(n + a for a in word))
    for w in traces:
        cycles.append(tuple(n + a for a in w))
    tau12 = Permutation.from_cycles(n + k, cycles)
    tau3 = perm.inverse().embed(n + k)
    return tau12 * tau3


def encode(a: TwistedElement, ctx: InterpContext) -> GroupAlgebraElement:
    """Inverse of :func:`interpret` on multilinear elements.

    Raises:
        NotMultilinearError: if some term does not use each of x_1..x_k
            exactly once, or carries a power of ``L``.
    """
    if a.n != ctx.n:
        raise ValueError("Element arity {} does not match n = {}".format(a.n, ctx.n))
    terms = {}  # type: Dict[Permutation, Fraction]
    for (tensor, perm), (lam, traces), c in a.monomial_terms():
        if lam:
            raise NotMultilinearError(
                "Term {} o {} carries L^{}; specialize it first".format(tensor, perm, lam))
        tau = encode_term(tensor, perm, traces, ctx)
        terms[tau] = terms.get(tau, Fraction(0)) + c
    return GroupAlgebraElement(ctx.m, terms)
