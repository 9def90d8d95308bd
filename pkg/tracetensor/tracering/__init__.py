from tracetensor.tracering.words import CyclicWord  # NOQA
from tracetensor.tracering.words import Word  # NOQA
from tracetensor.tracering.words import cyclic_canonicalize  # NOQA
from tracetensor.tracering.words import format_word  # NOQA
from tracetensor.tracering.words import make_word  # NOQA
from tracetensor.tracering.words import parse_word  # NOQA
from tracetensor.tracering.words import rotate  # NOQA
from tracetensor.tracering.trace_scalar import Monomial  # NOQA
from tracetensor.tracering.trace_scalar import TraceScalar  # NOQA
from tracetensor.tracering.trace_scalar import power_trace  # NOQA
from tracetensor.tracering.trace_scalar import specialize_lambda  # NOQA
from tracetensor.tracering.trace_scalar import ts_add  # NOQA
from tracetensor.tracering.trace_scalar import ts_mul  # NOQA
from tracetensor.tracering.trace_polynomial import TracePolynomial  # NOQA
