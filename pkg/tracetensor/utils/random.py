import numpy as np

from tracetensor.symgroup.permutation import Permutation


def get_random_state(random_state=None):
    """The generator to draw from.

    ``None`` means the global ``numpy.random`` state, an int seeds a fresh
    ``numpy.random.RandomState`` and anything else is returned unchanged.
    """
    if random_state is None:
        return np.random
    if isinstance(random_state, (int, np.integer)):
        return np.random.RandomState(int(random_state))
    return random_state


def sample_n_k(n, k, random_state=None):
    """Sample k distinct elements uniformly from range(n)"""

    if not 0 <= k <= n:
        raise ValueError("Sample larger than population or is negative")
    rng = get_random_state(random_state)
    if k == 0:
        return np.empty((0,), dtype=np.int64)
    elif 3 * k >= n:
        return rng.choice(n, k, replace=False)
    else:
        result = rng.choice(n, 2 * k)
        selected = set()
        selected_add = selected.add
        j = k
        for i in range(k):
            x = result[i]
            while x in selected:
                x = result[i] = result[j]
                j += 1
                if j == 2 * k:
                    # This is slow, but it rarely happens.
                    result[k:] = rng.choice(n, k)
                    j = k
            selected_add(x)
        return result[:k]


def random_subset(m, size, random_state=None):
    """Sorted list of ``size`` distinct indices from {1, ..., m}."""
    return sorted(int(x) + 1 for x in sample_n_k(m, size, random_state))


def random_permutation(m, random_state=None):
    """Uniform random element of S_m."""
    rng = get_random_state(random_state)
    return Permutation(int(x) + 1 for x in rng.permutation(m))
