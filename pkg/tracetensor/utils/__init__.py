from tracetensor.utils.jsonio import dumps_json  # NOQA
from tracetensor.utils.jsonio import read_json  # NOQA
from tracetensor.utils.jsonio import write_json  # NOQA
from tracetensor.utils.limits import DimensionLimitError  # NOQA
from tracetensor.utils.limits import check_dimension  # NOQA
from tracetensor.utils.limits import max_dimension  # NOQA
from tracetensor.utils.random import get_random_state  # NOQA
from tracetensor.utils.random import random_permutation  # NOQA
from tracetensor.utils.random import random_subset  # NOQA
from tracetensor.utils.random import sample_n_k  # NOQA
from tracetensor.utils.random_seed import set_random_seed  # NOQA
