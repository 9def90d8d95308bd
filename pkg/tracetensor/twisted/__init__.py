from tracetensor.twisted.element import TensorWord  # NOQA
from tracetensor.twisted.element import TwistedElement  # NOQA
from tracetensor.twisted.element import conjugate  # NOQA
from tracetensor.twisted.element import from_group_algebra  # NOQA
from tracetensor.twisted.element import outer_product  # NOQA
from tracetensor.twisted.element import permutation_element  # NOQA
from tracetensor.twisted.element import rename_variables  # NOQA
from tracetensor.twisted.element import scalar  # NOQA
from tracetensor.twisted.element import tensor_monomial  # NOQA
from tracetensor.twisted.element import tw_mul  # NOQA
from tracetensor.twisted.element import unit  # NOQA
from tracetensor.twisted.element import zero  # NOQA
from tracetensor.twisted.traces import as_scalar  # NOQA
from tracetensor.twisted.traces import full_trace  # NOQA
from tracetensor.twisted.traces import iterated_partial_trace  # NOQA
from tracetensor.twisted.traces import partial_trace  # NOQA
from tracetensor.twisted.traces import term_trace  # NOQA
from tracetensor.twisted.substitution import Substitution  # NOQA
from tracetensor.twisted.substitution import polarize  # NOQA
from tracetensor.twisted.substitution import restitute  # NOQA
from tracetensor.twisted.substitution import substitute  # NOQA
from tracetensor.twisted.serialization import dumps  # NOQA
from tracetensor.twisted.serialization import loads  # NOQA
