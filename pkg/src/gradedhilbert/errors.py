"""Exception hierarchy shared by all modules."""


class HilbertError(Exception):
    """Base class for every error raised by this package."""


class OrderMismatchError(HilbertError, ValueError):
    pass


class NonInvertibleError(HilbertError, ValueError):
    """Raised when a denominator has no inverse in Z[[t]]."""


class NonIntegralError(HilbertError, ValueError):
    pass


class SeriesSpecError(HilbertError, ValueError):
    pass


class CapacityError(HilbertError, ValueError):
    """A coefficient a_n exceeds the number of available monomials of degree n."""

    def __init__(self, degree, value, bound):
        self.degree = degree
        self.value = value
        self.bound = bound
        super().__init__(
            f"capacity violated at degree {degree}: a_{degree} = {value} > {bound}"
        )


class InfeasibleError(HilbertError, ValueError):
    pass


class InvalidSpecError(HilbertError, ValueError):
    pass


class UnsupportedVariantError(HilbertError, ValueError):
    pass


class PresentationSyntaxError(HilbertError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DegenerateAutomatonError(HilbertError, ValueError):
    pass


class SizeGuardError(HilbertError, RuntimeError):
    pass


class DataShortageError(HilbertError, ValueError):
    pass
