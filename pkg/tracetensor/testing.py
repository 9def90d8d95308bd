from fractions import Fraction

from tracetensor.symgroup.permutation import Permutation
from tracetensor.tracering.trace_scalar import TraceScalar
from tracetensor.twisted.element import TwistedElement
from tracetensor.utils.random import get_random_state


def assert_elements_equal(actual, desired):
    """Assert two twisted elements (or trace scalars) have equal normal forms.

    On mismatch both normal forms and their difference are printed, which
    is far more readable than the default repr.
    """
    if actual != desired:
        raise AssertionError(
            "Elements differ\nactual:\n{}\ndesired:\n{}\ndifference:\n{}".format(
                actual, desired, actual - desired
            )
        )


def random_word(k, max_len, random_state=None):
    rng = get_random_state(random_state)
    length = int(rng.randint(0, max_len + 1))
    if k == 0 or length == 0:
        return ()
    return tuple(int(a) for a in rng.randint(1, k + 1, size=length))


def random_trace_scalar(k, max_len=2, max_traces=1, random_state=None, with_lambda=True):
    """A random monomial coefficient with a small rational factor."""
    rng = get_random_state(random_state)
    traces = []
    for _ in range(int(rng.randint(0, max_traces + 1))):
        w = random_word(k, max_len, rng)
        if w:
            traces.append(w)
    lam = int(rng.randint(0, 2)) if with_lambda else 0
    coeff = Fraction(int(rng.randint(1, 4)) * int(rng.choice([-1, 1])), int(rng.randint(1, 3)))
    return TraceScalar({(lam, tuple(traces)): coeff})


def random_twisted_element(n, k, max_len=2, n_terms=3, random_state=None, with_lambda=True):
    """Random element of arity ``n`` in variables x_1..x_k."""
    rng = get_random_state(random_state)
    terms = {}
    for _ in range(n_terms):
        tensor = tuple(random_word(k, max_len, rng) for _ in range(n))
        perm = Permutation(int(a) + 1 for a in rng.permutation(n))
        coeff = random_trace_scalar(k, max_len, 1, rng, with_lambda)
        key = (tensor, perm)
        terms[key] = terms.get(key, TraceScalar.zero()) + coeff
    return TwistedElement(n, terms)
