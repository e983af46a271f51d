"""Exception types shared across the package."""


class TruncationError(RuntimeError):
    """A constructed state leaves too much population near the top of the basis."""


class NodeCountError(RuntimeError):
    """A quadrature rule has too few nodes to resolve the requested average."""


class GridError(RuntimeError):
    """An outcome or phase-space grid is too small or too coarse for the state."""


class ConfigError(ValueError):
    """A sweep configuration file or override is malformed."""
