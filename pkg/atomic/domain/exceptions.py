class AtomicError(Exception):
    pass


class InvalidTypeError(AtomicError):
    pass


class IndexOutOfRangeError(AtomicError):
    pass


class DimensionMismatchError(AtomicError):
    pass


class SystemMismatchError(AtomicError):
    pass


class NotReducedError(AtomicError):
    pass


class NotAReflectionError(AtomicError):
    pass


class NotDominantError(AtomicError):
    pass


class UnsupportedTypeError(AtomicError):
    pass


class PreconditionViolationError(AtomicError):
    pass


class InvalidIndexError(AtomicError):
    pass


class InvalidModulusError(AtomicError):
    pass


class NotACoreError(AtomicError):
    pass


class NotAdequateError(AtomicError):
    pass


class CapExceededError(AtomicError):
    pass


class SubgroupTooLargeError(CapExceededError):
    pass


class OrbitTooLargeError(CapExceededError):
    pass


class RadiusTooLargeError(CapExceededError):
    pass


class SizeTooLargeError(CapExceededError):
    pass


class MissingArgumentError(AtomicError):
    pass
