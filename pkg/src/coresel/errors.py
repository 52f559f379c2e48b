"""Exceptions shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input (bad indices, infeasible allocation, parse failure)."""


class CapacityError(RuntimeError):
    """Instance exceeds the declared desk-scale bounds (bidder count, grid budget, ...)."""
