"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of a map or decomposition."""


class LimitExceeded(ValueError):
    """An enumeration request exceeds the configured size limit."""


class UnknownName(KeyError):
    """A catalog entry, statistic or verification target does not exist."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"
