from atomic.domain.exceptions import (
    AtomicError,
    CapExceededError,
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidIndexError,
    InvalidModulusError,
    InvalidTypeError,
    MissingArgumentError,
    NotACoreError,
    NotAdequateError,
    NotAReflectionError,
    NotDominantError,
    NotReducedError,
    UnsupportedTypeError,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def map_domain_error(err: AtomicError) -> tuple[int, str]:
    if isinstance(err, CapExceededError):
        return EXIT_CAP, f"computation cap exceeded: {err}"
    if isinstance(err, (InvalidTypeError, UnsupportedTypeError)):
        return EXIT_USAGE, f"invalid type: {err}"
    if isinstance(err, (IndexOutOfRangeError, InvalidIndexError, DimensionMismatchError, MissingArgumentError)):
        return EXIT_USAGE, f"invalid input: {err}"
    if isinstance(err, NotDominantError):
        return EXIT_USAGE, f"weight is not dominant: {err}"
    if isinstance(err, NotReducedError):
        return EXIT_USAGE, f"word is not reduced: {err}"
    if isinstance(err, (InvalidModulusError, NotACoreError, NotAdequateError, NotAReflectionError)):
        return EXIT_USAGE, str(err)
    return EXIT_FAILURE, f"computation failed: {err}"
