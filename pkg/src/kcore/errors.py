"""Exception hierarchy shared by all kcore modules."""


class KcoreError(Exception):
    """Base class for every error raised by kcore."""


class DomainError(KcoreError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegreeUndefinedError(DomainError):
    """The additivity degree of the all-zero set function is undefined."""


class GuardError(KcoreError):
    """An enumeration would exceed the configured size guard."""


class StructureError(KcoreError):
    """An order does not have the structure an operation requires
    (e.g. a non-lattice achievable family where a top element is needed)."""


class InvariantError(KcoreError, AssertionError):
    """A guaranteed mathematical invariant failed; indicates a bug."""


class InputError(KcoreError, ValueError):
    """Malformed game/order file content."""
