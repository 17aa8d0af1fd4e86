"""Exception types shared across the package."""


class StructureError(ValueError):
    """Malformed input: indices out of range, bad labels, wrong lengths."""


class OutOfWindowError(ValueError):
    """Request lies outside the supported enumeration window."""


class EmptyModuliError(ValueError):
    """The spin moduli space requested is empty (odd twist sum)."""


class LedgerError(ValueError):
    """A ledger refers to an unknown name or carries an invalid constant."""
