"""Exception hierarchy shared by all analysis modules."""


class MixedMilnorError(Exception):
    """Base class for every error raised by this package."""


class PolySyntaxError(MixedMilnorError, ValueError):
    """Malformed polynomial or arc text.

    Carries the 0-based position of the offending token and a short
    description of what was expected there.
    """

    def __init__(self, position, expected, text=""):
        self.position = position
        self.expected = expected
        self.text = text
        super().__init__(f"at position {position}: expected {expected}")


class OddModulusExponentError(PolySyntaxError):
    """|z_k|^e sugar only desugars for even e."""

    def __init__(self, position, exponent):
        self.position = position
        self.expected = "even exponent on modulus factor"
        self.exponent = exponent
        MixedMilnorError.__init__(
            self, f"at position {position}: |z_k|^{exponent} needs an even exponent"
        )


class ZeroPolynomialError(MixedMilnorError, ValueError):
    """Operation requires a nonzero polynomial."""


class TooManyVariablesError(MixedMilnorError, ValueError):
    """Subset enumeration is guarded at 16 variables."""


class TooManySupportPointsError(MixedMilnorError, ValueError):
    """Exact face enumeration is guarded at 64 support points."""


class VanishingSubsetError(MixedMilnorError, ValueError):
    """Subset I was expected to be non-vanishing (f^I != 0)."""


class NotVanishingError(MixedMilnorError, ValueError):
    """Subset I was expected to be vanishing (f^I == 0)."""


class NotEssentialFaceError(MixedMilnorError, ValueError):
    """Face is not an essential non-compact face."""


class TruncationOverflowError(MixedMilnorError, ValueError):
    """Requested series order exceeds what the arc jets can support."""


class TruncationExhaustedError(MixedMilnorError, ValueError):
    """Arc jets are too short to resolve a limit-tangent reduction step."""


class ArcInsideVarietyError(MixedMilnorError, ValueError):
    """f vanishes identically along the arc; no limit tangent exists."""


class SingularFiberError(MixedMilnorError, ValueError):
    """Point is (numerically) a mixed critical point of its fiber."""


class AllValuesZeroError(MixedMilnorError, ValueError):
    """f vanished on every sample of the probe neighborhood."""


class NotStronglyPolarError(MixedMilnorError, ValueError):
    """Face function is not strongly polar weighted homogeneous with pdeg > 0."""


class NotStronglyPolarFaceTypeError(NotStronglyPolarError):
    """Some face of the input fails strong polar positivity, so the zeta
    product formula does not apply."""


class NegativeReducedExponentError(MixedMilnorError, ValueError):
    """Polar reduction produced a negative exponent (Laurent case, unsupported)."""


class ZetaIntegralityError(MixedMilnorError, ArithmeticError):
    """pdeg does not divide chi; signals an upstream bug or invalid input."""


class DimensionMismatchError(MixedMilnorError, ValueError):
    """Constructor arguments disagree on the number of variables."""


class UnknownCorpusNameError(MixedMilnorError, KeyError):
    """No corpus polynomial under that name."""


class BadParamsError(MixedMilnorError, ValueError):
    """Corpus parameters outside the documented range."""
