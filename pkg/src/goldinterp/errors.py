"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` so the HTTP service
and the CLI can report failures without parsing prose.
"""


class GoldenInterpError(Exception):
    """Base class for all domain errors."""

    code = "ERROR"


class InvalidNodes(GoldenInterpError):
    """Node sequence is malformed (too short, non-finite, or x not strictly increasing)."""

    code = "INVALID_NODES"


class MissingDerivative(GoldenInterpError):
    """A quadratic-spline construction was requested without a start derivative."""

    code = "MISSING_DERIVATIVE"


class InvalidParam(GoldenInterpError):
    """A method parameter is outside its documented range."""

    code = "INVALID_PARAM"


class OutOfDomain(GoldenInterpError):
    """Evaluation point lies outside the function's breakpoint span."""

    code = "OUT_OF_DOMAIN"


class TooFewNodes(GoldenInterpError):
    """At least three nodes are needed to form adjacent-ratio series."""

    code = "TOO_FEW_NODES"


class TooFewRatios(GoldenInterpError):
    """An error measure was requested over an empty ratio series."""

    code = "TOO_FEW_RATIOS"


class TooLarge(GoldenInterpError):
    """Brute-force search instance exceeds desk scale."""

    code = "TOO_LARGE"


class DegenerateChord(GoldenInterpError):
    """Hill chord has zero length."""

    code = "DEGENERATE_CHORD"


class NoHilltop(GoldenInterpError):
    """No point with tangent slope equal to the chord slope was found."""

    code = "NO_HILLTOP"


class AxisCross(GoldenInterpError):
    """Profile touches or crosses the revolution axis."""

    code = "AXIS_CROSS"


class OverlapError(GoldenInterpError):
    """Mirror line passes through the profile, so the reflection would overlap it."""

    code = "OVERLAP"
