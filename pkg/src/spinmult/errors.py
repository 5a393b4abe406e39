class ValidationError(ValueError):
    """Malformed or out-of-domain input."""


class OracleTooLargeError(ValidationError):
    """Exhaustive enumeration would exceed the configured subset bound."""

    def __init__(self, num_roots: int, bound: int):
        self.num_roots = num_roots
        self.bound = bound
        super().__init__(
            f"oracle too large: {num_roots} roots exceeds the bound of {bound} "
            f"(2^{num_roots} subsets); raise SPINMULT_ORACLE_MAX to override"
        )
