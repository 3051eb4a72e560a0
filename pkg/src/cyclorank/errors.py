"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a mathematical precondition (maps to CLI exit 1)."""


class TruthTableError(DomainError):
    """A truth-table file is malformed; message carries the offending line number."""
