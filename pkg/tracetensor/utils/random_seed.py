import random

import numpy as np


def set_random_seed(seed):
    """Set a given random seed to every generator the library draws from.

    Random test elements, random certificates and the rational pre-filter of
    the identity test all draw from ``numpy.random`` when no ``random_state``
    is passed. The standard ``random`` module is seeded too, for callers that
    mix it in.

    Args:
        seed (int): Random seed [0, 2 ** 32).
    """
    random.seed(seed)
    np.random.seed(seed)
