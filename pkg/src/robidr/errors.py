"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid scenario, spec, or run configuration."""


class IngestionError(ValueError):
    """Malformed tabular input; message names the offending row/column."""


class EstimationError(RuntimeError):
    """A fit failed to converge or received degenerate inputs."""


class EvaluationError(RuntimeError):
    """A metric is undefined on the given data (e.g. no matching units)."""
