"""Exception hierarchy shared by all modules."""


class NonrepError(Exception):
    """Base class for every error raised by this package."""


class InputError(NonrepError, ValueError):
    """Arguments violate an operation's preconditions."""


class DecodeError(NonrepError):
    """A path code is not realisable for the given graph, set and vertex."""


class ReconstructionError(NonrepError):
    """A (colouring, record) pair is not produced by any input vector."""


class InvariantError(NonrepError):
    """An internal invariant that should always hold was violated."""


class ExhaustionError(NonrepError, RuntimeError):
    """A Las Vegas procedure ran out of steps or retries."""


class ValidationError(NonrepError, ValueError):
    """A path decomposition fails one of its axioms."""


class ConstructionError(NonrepError, RuntimeError):
    """A palette-bounded search found no colouring."""


class ResourceError(NonrepError):
    """An enumeration was asked to exceed its configured cap."""
