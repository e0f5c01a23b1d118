class DomainError(ValueError):
    """Raised when an input lies outside the domain an operation supports.

    The CLI maps this to exit code 3.  The message always names the
    violated precondition.
    """
