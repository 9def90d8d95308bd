import os

DEFAULT_MAX_DIMENSION = 4096
MAX_DIMENSION_ENV = "TCI_MAX_DIM"


class DimensionLimitError(ValueError):
    """A matrix evaluation would exceed the configured dimension cap."""


def max_dimension():
    """The largest allowed matrix dimension ``d ** n``.

    Read from the ``TCI_MAX_DIM`` environment variable on every call,
    defaulting to 4096.
    """
    value = os.environ.get(MAX_DIMENSION_ENV)
    if value is None or not value.strip():
        return DEFAULT_MAX_DIMENSION
    try:
        cap = int(value)
    except ValueError:
        raise ValueError(
            "{} must be a positive integer, got {!r}".format(MAX_DIMENSION_ENV, value)
        )
    if cap < 1:
        raise ValueError(
            "{} must be a positive integer, got {!r}".format(MAX_DIMENSION_ENV, value)
        )
    return cap


def check_dimension(d, n):
    """Raise :class:`DimensionLimitError` if ``d ** n`` exceeds the cap."""
    dim = d ** n
    cap = max_dimension()
    if dim > cap:
        raise DimensionLimitError(
            "Matrix dimension {}^{} = {} exceeds the cap {} (set {} to raise it)".format(
                d, n, dim, cap, MAX_DIMENSION_ENV
            )
        )
    return dim
