"""
Exception hierarchy for the Diophantine toolkit.

Every error raised on purpose by the library derives from ``DiophantineError``.
Input problems additionally derive from ``ValueError`` so that callers that
only know the builtin contract still catch them.
"""


class DiophantineError(Exception):
    """Base class for library errors."""


class InvalidInputError(DiophantineError, ValueError):
    """A precondition of an operation was violated."""


class NotMersenneExponentError(InvalidInputError):
    """The exponent is not prime or 2^p - 1 is composite."""

    def __init__(self, p: int, reason: str):
        self.p = p
        self.reason = reason
        super().__init__(f"p={p} is not a Mersenne exponent: {reason}")


class CompositeModulusError(InvalidInputError):
    """The modulus l of (l z)^2 is not prime."""

    def __init__(self, l: int):
        self.l = l
        super().__init__(f"l={l} is not prime")


class EvenModulusError(InvalidInputError):
    """The odd-prime solver was handed l = 2."""

    def __init__(self):
        super().__init__("l=2 is handled by solve_l2, not solve_odd")


class CapExceededError(DiophantineError):
    """Factorization would exceed the configured effort bound."""

    def __init__(self, n: int, cap_bits: int):
        self.n = n
        self.cap_bits = cap_bits
        super().__init__(
            f"cannot factor n with {n.bit_length()} bits: cap is {cap_bits} bits"
        )
