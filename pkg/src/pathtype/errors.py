"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed graph, weight, cover or ideal input."""


class WeightConditionError(InputError):
    """A base edge outweighs the first whisker edge at one of its endpoints."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__(
            "weight condition violated on %d edge(s)" % len(self.violations))


class ConsistencyError(RuntimeError):
    """Two routes that must agree produced different answers."""
