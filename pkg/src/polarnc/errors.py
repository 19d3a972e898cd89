"""Exception types raised by the polar n-complex library.

Every exception carries a ``kind`` used by the command line front end to
print a stable one-line diagnostic.
"""


class PolarNComplexError(Exception):
    kind = "PolarNComplexError"

    def __str__(self):
        detail = super().__str__()
        return f"{self.kind}: {detail}" if detail else self.kind


class DimensionMismatch(PolarNComplexError, ValueError):
    kind = "DimensionMismatch"


class NotInvertible(PolarNComplexError, ZeroDivisionError):
    """Raised when a number lies on a nodal hypersurface.

    ``sector`` names the vanishing canonical sector: ``v_plus``, ``v_minus``
    or ``rho_k``.
    """

    kind = "NotInvertible"

    def __init__(self, sector):
        super().__init__(sector)
        self.sector = sector


class NonPositiveNu(PolarNComplexError, ValueError):
    kind = "NonPositiveNu"


class OutsideDomain(PolarNComplexError, ValueError):
    kind = "OutsideDomain"

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class DegenerateDirection(PolarNComplexError, ValueError):
    kind = "DegenerateDirection"

    def __init__(self, which):
        super().__init__(which)
        self.which = which


class Overflow(PolarNComplexError, OverflowError):
    kind = "Overflow"


class InsufficientCoefficients(PolarNComplexError, ValueError):
    kind = "InsufficientCoefficients"


class OutsideConvergenceRegion(PolarNComplexError, ValueError):
    kind = "OutsideConvergenceRegion"


class PointOnPath(PolarNComplexError, ValueError):
    kind = "PointOnPath"

    def __init__(self, k):
        super().__init__(f"k={k}")
        self.k = k


class NoConvergence(PolarNComplexError, ArithmeticError):
    kind = "NoConvergence"

    def __init__(self, sector):
        super().__init__(sector)
        self.sector = sector


class NonRealAssembly(PolarNComplexError, ValueError):
    kind = "NonRealAssembly"
