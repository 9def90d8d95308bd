import logging
from typing import Dict, Iterable, Mapping

from tracetensor.interp.interpretation import InterpContext
from tracetensor.interp.interpretation import encode
from tracetensor.matexval.multipoly import MultiPoly
from tracetensor.matexval.operators import group_algebra_operator
from tracetensor.matexval.operators import perm_targets
from tracetensor.matexval.polymatrix import PolyMatrix
from tracetensor.matexval.polymatrix import concrete_matrix
from tracetensor.matexval.polymatrix import generic_matrix
from tracetensor.matexval.polymatrix import kron_all
from tracetensor.symgroup.permutation import Permutation
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.tracering.words import Word
from tracetensor.twisted.element import TwistedElement
from tracetensor.utils.random import get_random_state
from tracetensor.utils.limits import check_dimension

Assignment = Mapping[int, PolyMatrix]


class UnspecializedLambdaError(ValueError):
    """The element still contains the formal trace of the unit."""


def generic_assignment(variables: Iterable[int], d: int) -> Dict[int, PolyMatrix]:
    return {i: generic_matrix(i, d) for i in sorted(set(variables))}


def random_assignment(variables: Iterable[int], d: int, random_state=None,
                      low: int = -3, high: int = 4) -> Dict[int, PolyMatrix]:
    """Independent random integer matrices with entries in ``[low, high)``."""
    rng = get_random_state(random_state)
    result = {}
    for i in sorted(set(variables)):
        values = rng.randint(low, high, size=(d, d))
        result[i] = concrete_matrix([[int(v) for v in row] for row in values])
    return result


class _Evaluator(object):
    def __init__(self, asg: Assignment, d: int):
        for i, mat in asg.items():
            if mat.dim != d:
                raise ValueError("Matrix for x{} is {}x{}, expected {}x{}".format(
                    i, mat.dim, mat.dim, d, d))
        self.asg = asg
        self.d = d
        self.words = {(): PolyMatrix.identity(d)}  # type: Dict[Word, PolyMatrix]

    def word(self, w: Word) -> PolyMatrix:
        if w not in self.words:
            head = self.word(w[:-1])
            try:
                letter = self.asg[w[-1]]
            except KeyError:
                raise ValueError("No matrix assigned to x{}".format(w[-1]))
            self.words[w] = head @ letter
        return self.words[w]

    def scalar(self, s: TraceScalar) -> MultiPoly:
        result = MultiPoly.zero()
        for (lam, traces), c in s.items():
            if lam:
                raise UnspecializedLambdaError(
                    "Coefficient {} contains L; specialize it to d={} first".format(
                        s, self.d))
            value = MultiPoly.constant(c)
            for w in traces:
                value = value * self.word(tuple(w)).trace()
            result = result + value
        return result


def evaluate_trace_scalar(s: TraceScalar, asg: Assignment, d: int) -> MultiPoly:
    """The polynomial value of a trace-algebra element."""
    return _Evaluator(asg, d).scalar(s)


def evaluate(a: TwistedElement, asg: Assignment, d: int) -> PolyMatrix:
    """The evaluation morphism into ``End((Q^d)^{(x) n})``.

    A term ``c (M_1 (x) ... (x) M_n) o sigma`` evaluates to
    ``c(asg) * (M_1(asg) (x) ... (x) M_n(asg)) P_sigma``.

    Raises:
        UnspecializedLambdaError: if a coefficient contains ``L``.
        DimensionLimitError: if ``d ** n`` exceeds the configured cap.
        ValueError: on a missing or wrongly sized matrix.
    """
    if d < 1:
        raise ValueError("d must be >= 1, got {}".format(d))
    dim = check_dimension(d, a.n)
    ev = _Evaluator(asg, d)
    by_perm = {}  # type: Dict[Permutation, PolyMatrix]
    for (tensor, perm), coeff in a.items():
        c = ev.scalar(coeff)
        if not c:
            continue
        block = kron_all([ev.word(w) for w in tensor]).scale(c)
        by_perm[perm] = by_perm[perm] + block if perm in by_perm else block
    result = PolyMatrix.zero(dim)
    for perm in sorted(by_perm, key=lambda p: p.images):
        result = result + by_perm[perm].permute_columns(perm_targets(perm, d))
    return result


def evaluate_generic(a: TwistedElement, d: int) -> PolyMatrix:
    return evaluate(a, generic_assignment(a.variables(), d), d)


def is_identity(a: TwistedElement, d: int, trials: int = 2, random_state=None,
                logger=None) -> bool:
    """Whether ``a`` vanishes on all d x d matrices.

    ``L`` is specialized to ``d``. A few random integer evaluations are
    tried first; the answer is then settled by the exact evaluation at
    generic matrices.
    """
    logger = logger or logging.getLogger(__name__)
    if not a:
        return True
    a = a.specialize_lambda(d)
    variables = a.variables()
    rng = get_random_state(random_state)
    for t in range(trials):
        if not evaluate(a, random_assignment(variables, d, rng), d).is_zero():
            logger.info("nonzero at a random %dx%d evaluation (trial %d)", d, d, t)
            return False
    result = evaluate_generic(a, d).is_zero()
    logger.info("generic %dx%d evaluation of arity %d: %s", d, d, a.n,
                "zero" if result else "nonzero")
    return result


def is_identity_multilinear(a: TwistedElement, d: int, logger=None) -> bool:
    """Membership test for multilinear elements through the group algebra.

    The element is encoded in Q[S_{n+k}] and the sum of the corresponding
    place-permutation operators on ``(Q^d)^{(x) n+k}`` is tested for zero.

    Raises:
        NotMultilinearError: if ``a`` is not multilinear in x_1..x_k.
    """
    logger = logger or logging.getLogger(__name__)
    a = a.specialize_lambda(d)
    k = max(a.variables(), default=0)
    if a.n + k == 0:
        return not a
    g = encode(a, InterpContext(a.n, k))
    check_dimension(d, a.n + k)
    result = group_algebra_operator(g, d).is_zero()
    logger.info("operator of %d permutations on (Q^%d)^%d: %s", len(g), d, a.n + k,
                "zero" if result else "nonzero")
    return result
