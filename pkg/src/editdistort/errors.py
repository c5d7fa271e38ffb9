"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input (bad lengths, alphabet mismatch, bad files)."""


class PreconditionError(ValueError):
    """Input is well-formed but violates an algorithm's precondition (e.g. non-Ulam strings)."""


class SchemaError(InputError):
    """A persisted file does not match its expected layout."""
