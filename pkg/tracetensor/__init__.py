from tracetensor import chident  # NOQA
from tracetensor import interp  # NOQA
from tracetensor import matexval  # NOQA
from tracetensor import symgroup  # NOQA
from tracetensor import testing  # NOQA
from tracetensor import tracering  # NOQA
from tracetensor import twisted  # NOQA
from tracetensor import utils  # NOQA
