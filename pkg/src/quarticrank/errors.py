"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument lies outside the domain the theory covers."""


class NotSquarefreeError(InputError):
    def __init__(self, n, prime):
        super().__init__(f"{n} is not squarefree (repeated prime {prime})")
        self.n = n
        self.prime = prime


class DeferredCaseError(InputError):
    """l is a prime congruent to 5 mod 8.

    That family has a separate treatment and is deliberately not handled
    here; callers can catch this to tell "out of scope" from "malformed".
    """


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
