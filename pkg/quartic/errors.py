"""Exception hierarchy for the quartic toolkit."""


class QuarticError(Exception):
    """Base class for every domain error raised by the package."""


class ConfigError(QuarticError):
    """An environment setting or registry document is malformed."""


class InputOffCurve(QuarticError):
    """A point handed to the group law does not satisfy the curve equation."""


class PointAtInfinity(QuarticError):
    """An affine point was required but the point at infinity was given."""


class SingularCurve(QuarticError):
    """4A^3 + 27B^2 = 0."""


class NotASquareForm(QuarticError):
    """A polynomial has no content * square decomposition."""


class NotASquare(QuarticError):
    """M / content is not the square of a rational number."""


class ModelRelationViolated(QuarticError):
    """A pair (x, r) does not satisfy d*r^2 = a3*x^3 + a1*x + a0."""


class DegenerateSolution(QuarticError):
    """Back-substitution produced a zero term (torsion point, r = 0, e*x + f = 0, ...)."""


class DigitBudgetExhausted(QuarticError):
    """The digit budget stopped a solution stream before anything was produced."""


class UnknownConfig(QuarticError):
    """No family configuration exists for the requested (variant, k)."""


class NoSeedPoint(QuarticError):
    """No usable point was found on a curve within the search bound."""


class IdentityFailed(QuarticError):
    """A parametric family evaluated to a tuple that does not satisfy its equation."""
