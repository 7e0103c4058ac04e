"""Exception hierarchy for orbitkit."""


class OrbitkitError(Exception):
    """Base class for all library errors."""


class MixedAlgebras(OrbitkitError):
    pass


class NotInAlgebra(OrbitkitError):
    pass


class NotNilpotent(OrbitkitError):
    pass


class ZeroNilpositive(OrbitkitError):
    pass


class NoSolution(OrbitkitError):
    pass


class InvalidTriple(OrbitkitError):
    pass


class UnsupportedFamily(OrbitkitError):
    pass


class InvalidLabel(OrbitkitError):
    pass


class MixedFamilies(OrbitkitError):
    pass


class SpectrumViolation(OrbitkitError):
    pass


class DimensionTooHigh(OrbitkitError):
    pass


class UnsupportedGeometry(OrbitkitError):
    """The solution manifold is not a star-shaped hypersurface of the slice."""


class NoConvergence(OrbitkitError):
    pass


class NonpositiveT(OrbitkitError):
    pass


class DegenerateForm(OrbitkitError):
    pass


class NotOnIntersection(OrbitkitError):
    pass


class TransversalityFailure(OrbitkitError):
    pass


class NoncompactOrbit(OrbitkitError):
    pass


class NonRegularInput(OrbitkitError):
    pass


class NotRegular(NonRegularInput):
    pass


class MixedDimensions(OrbitkitError):
    pass


class EmptySamples(OrbitkitError):
    pass


class UnsupportedOrbit(OrbitkitError):
    pass


class TailBoundViolation(OrbitkitError):
    pass
