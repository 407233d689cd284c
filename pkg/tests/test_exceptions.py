from atomic.domain.exceptions import (
    AtomicError,
    InvalidTypeError,
    MissingArgumentError,
    NotACoreError,
    NotDominantError,
    OrbitTooLargeError,
    PreconditionViolationError,
    RadiusTooLargeError,
)
from atomic.exceptions import EXIT_CAP, EXIT_FAILURE, EXIT_USAGE, map_domain_error


def test_cap_errors_map_to_cap_code():
    for err in (OrbitTooLargeError("x"), RadiusTooLargeError("x")):
        code, message = map_domain_error(err)
        assert code == EXIT_CAP
        assert message.startswith("computation cap exceeded")


def test_input_errors_map_to_usage():
    for err in (InvalidTypeError("H3"), MissingArgumentError("--type"), NotDominantError("x"), NotACoreError("x")):
        assert map_domain_error(err)[0] == EXIT_USAGE


def test_other_errors_are_failures():
    assert map_domain_error(PreconditionViolationError("x"))[0] == EXIT_FAILURE
    assert map_domain_error(AtomicError("x")) == (EXIT_FAILURE, "computation failed: x")
