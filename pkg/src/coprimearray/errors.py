"""Exception types raised by this package."""


class CoprimeArrayError(Exception):
    """Base class for all errors raised by coprimearray."""


class NotCoprimeError(CoprimeArrayError):
    """The two undersampling factors share a common divisor."""


class OutOfRangeError(CoprimeArrayError):
    """A factor or lag falls outside its documented domain."""


class NoSideLobeError(CoprimeArrayError):
    """A curve has no strict local maximum outside its main lobe."""


class NotEnoughPeaksError(CoprimeArrayError):
    """Fewer strict local maxima exist than were requested."""


class InsufficientDataError(CoprimeArrayError):
    """A sample stream is too short for the requested snapshot."""


class UnsupportedRegimeError(CoprimeArrayError):
    """A closed form was requested outside the regime it is derived for."""


class ConsistencyError(CoprimeArrayError):
    """A closed-form value disagrees with its brute-force counterpart.

    This is an internal cross-check failure, not a usage error; it should
    never fire on a correct build.
    """


class NotFittedError(CoprimeArrayError):
    """The estimator was used before ``fit``."""
