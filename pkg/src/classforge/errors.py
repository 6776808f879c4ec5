"""Exception types shared across classforge."""


class ClassforgeError(Exception):
    """Base class for classforge errors."""


class FactorizationIncomplete(ClassforgeError):
    """Integer factorization did not finish within the effort budget.

    Carries the partial factorization so callers can report it.
    """

    def __init__(self, partial):
        self.partial = partial
        super().__init__(
            f"factorization incomplete: cofactor {partial.cofactor} remains"
        )


class BudgetExceeded(ClassforgeError):
    """A computation hit its configured effort budget."""


class CertificateError(ClassforgeError):
    """A certificate precondition or postcondition failed."""


class BadReduction(ClassforgeError):
    """The curve does not have good reduction at the requested prime."""
