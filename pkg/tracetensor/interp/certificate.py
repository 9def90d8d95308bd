import logging
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple

from tracetensor.interp.interpretation import InterpContext
from tracetensor.interp.interpretation import interpret_perm
from tracetensor.symgroup.permutation import Permutation
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.twisted.element import TwistedElement
from tracetensor.twisted.element import outer_product
from tracetensor.twisted.element import permutation_element
from tracetensor.twisted.element import tensor_monomial
from tracetensor.twisted.element import unit
from tracetensor.twisted.substitution import Substitution
from tracetensor.twisted.substitution import substitute

STEP_KINDS = (
    "conjugate",
    "tensor-split",
    "right-multiply-monomial",
    "left-multiply-monomial",
    "monomial-substitution",
    "permutation-factor-move",
    "trace-factor-multiply",
    "pad-identity",
)


class CertificateError(ValueError):
    """A certificate or one of its steps is malformed."""


class CertificateStep(NamedTuple):
    kind: str
    params: Dict[str, Any]

    def to_dict(self):
        return {"kind": self.kind, "params": dict(self.params)}


class DeductionCertificate(object):
    """A replayable derivation of ``target`` from the relation F_{k,d}.

    Args:
        base_k (int): Degree of the basic relation.
        base_d (int): Matrix size of the basic relation.
        target (TwistedElement): The element being certified.
        steps (list of CertificateStep): Rewrite steps applied in order.
    """

    def __init__(self, base_k: int, base_d: int, target: TwistedElement,
                 steps: List[CertificateStep] = None):
        self.base_k = base_k
        self.base_d = base_d
        self.target = target
        self.steps = list(steps or [])

    @property
    def base(self):
        return {"k": self.base_k, "d": self.base_d}

    def to_dict(self):
        return {
            "base": self.base,
            "target": self.target.to_dict(),
            "steps": [step.to_dict() for step in self.steps],
        }

    @classmethod
    def from_dict(cls, data) -> "DeductionCertificate":
        try:
            base = data["base"]
            k, d = int(base["k"]), int(base["d"])
            target = TwistedElement.from_dict(data["target"])
            steps = [CertificateStep(str(s["kind"]), dict(s["params"]))
                     for s in data["steps"]]
        except (KeyError, TypeError, ValueError) as e:
            raise CertificateError("Malformed certificate: {}".format(e))
        return cls(k, d, target, steps)

    def __repr__(self):
        return "DeductionCertificate(base=F_{{{},{}}}, steps={})".format(
            self.base_k, self.base_d, len(self.steps))


def _int(params, name, minimum=None):
    try:
        value = params[name]
    except KeyError:
        raise CertificateError("Missing parameter {!r}".format(name))
    if isinstance(value, bool) or not isinstance(value, int):
        raise CertificateError("Parameter {!r} must be an integer, got {!r}".format(
            name, value))
    if minimum is not None and value < minimum:
        raise CertificateError("Parameter {!r} must be >= {}, got {}".format(
            name, minimum, value))
    return value


def _int_list(params, name, minimum=1):
    try:
        value = params[name]
    except KeyError:
        raise CertificateError("Missing parameter {!r}".format(name))
    if not isinstance(value, (list, tuple)) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise CertificateError("Parameter {!r} must be a list of integers".format(name))
    if any(v < minimum for v in value):
        raise CertificateError("Parameter {!r} has entries below {}".format(name, minimum))
    return [int(v) for v in value]


def _perm(params, name, degree):
    images = _int_list(params, name)
    try:
        perm = Permutation(images)
    except ValueError as e:
        raise CertificateError(str(e))
    if perm.degree != degree:
        raise CertificateError(
            "Permutation {} has degree {}, expected {}".format(perm, perm.degree, degree))
    return perm


def _side(params):
    side = params.get("side")
    if side not in ("left", "right"):
        raise CertificateError("Parameter 'side' must be 'left' or 'right', got {!r}".format(
            side))
    return side


def _slot(params, n):
    slot = _int(params, "slot", 1)
    if slot > n:
        raise CertificateError("Slot {} out of range 1..{}".format(slot, n))
    return slot


def _slot_monomial(n, slot, word):
    words = [()] * n
    words[slot - 1] = tuple(word)
    return tensor_monomial(words)


def apply_step(element: TwistedElement, step: CertificateStep) -> TwistedElement:
    """Apply one rewrite step.

    Raises:
        CertificateError: if the step kind is unknown or its parameters are
            malformed or do not fit the current element.
    """
    kind, params = step.kind, step.params
    if not isinstance(params, dict):
        raise CertificateError("Step parameters must be a mapping")
    n = element.n
    if kind == "conjugate":
        gamma = _perm(params, "perm", n)
        variables = _int_list(params, "variables")
        if len(set(variables)) != len(variables):
            raise CertificateError("Variable relabelling {} is not injective".format(variables))
        try:
            sign = Fraction(str(params["sign"]))
        except (KeyError, ValueError, ZeroDivisionError):
            raise CertificateError("Parameter 'sign' must be a rational")
        mapping = {j: v for j, v in enumerate(variables, 1)}
        return element.conjugate(gamma).rename_variables(mapping).scale(sign)
    if kind == "tensor-split":
        bn = _int(params, "n", 0)
        bk = _int(params, "k", 0)
        shift = _int(params, "shift", 0)
        tau = _perm(params, "perm", bn + bk)
        try:
            block = interpret_perm(tau, InterpContext(bn, bk))
        except ValueError as e:
            raise CertificateError(str(e))
        block = block.rename_variables({j: j + shift for j in range(1, bk + 1)})
        return outer_product(element, block)
    if kind in ("right-multiply-monomial", "left-multiply-monomial"):
        slot = _slot(params, n)
        factor = _slot_monomial(n, slot, _int_list(params, "word"))
        if kind == "right-multiply-monomial":
            return element * factor
        return factor * element
    if kind == "monomial-substitution":
        var = _int(params, "variable", 1)
        word = tuple(_int_list(params, "word"))
        image = word + (var,) if _side(params) == "left" else (var,) + word
        return substitute(element, Substitution({var: image}))
    if kind == "permutation-factor-move":
        gamma = permutation_element(_perm(params, "perm", n))
        if _side(params) == "left":
            return gamma * element
        return element * gamma
    if kind == "trace-factor-multiply":
        factor = TraceScalar.one()
        for v in _int_list(params, "variables"):
            factor = factor * TraceScalar.trace((v,))
        return element.scale(factor)
    if kind == "pad-identity":
        return outer_product(element, unit(_int(params, "count", 0)))
    raise CertificateError("Unknown step kind {!r}".format(kind))


def replay_certificate(cert: DeductionCertificate, logger=None) -> TwistedElement:
    """Replay the steps of ``cert`` starting from F_{k,d}."""
    from tracetensor.chident.identities import F_kd

    logger = logger or logging.getLogger(__name__)

    try:
        element = F_kd(cert.base_k, cert.base_d)
    except ValueError as e:
        raise CertificateError("Invalid base relation: {}".format(e))
    for i, step in enumerate(cert.steps):
        element = apply_step(element, step)
        logger.debug("step %d (%s): %d terms at arity %d", i, step.kind,
                     len(element), element.n)
    return element


def verify_certificate(cert: DeductionCertificate, logger=None) -> bool:
    """True iff replaying ``cert`` reproduces its target exactly.

    Raises:
        CertificateError: on malformed steps.
    """
    logger = logger or logging.getLogger(__name__)
    result = replay_certificate(cert, logger=logger)
    ok = result == cert.target
    if ok:
        logger.info("certificate from F_{%d,%d} verified (%d steps)",
                    cert.base_k, cert.base_d, len(cert.steps))
    else:
        logger.info("certificate from F_{%d,%d} does not reproduce its target",
                    cert.base_k, cert.base_d)
    return ok
