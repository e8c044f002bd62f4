"""Exception hierarchy shared by every module of the package."""


class FocalError(Exception):
    """Base class for all errors raised by focalgroups."""


# permutations
class MalformedCycle(FocalError, ValueError):
    pass


class PointOutOfRange(FocalError, ValueError):
    pass


class RepeatedPoint(FocalError, ValueError):
    pass


class DegreeMismatch(FocalError, ValueError):
    pass


# groups
class OrderCapExceeded(FocalError, RuntimeError):
    pass


class ElementNotInGroup(FocalError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotNormal(FocalError, ValueError):
    pass


class TrivialGroup(FocalError, ValueError):
    pass


# number theory
class NotPrime(FocalError, ValueError):
    pass


class NotCoprime(FocalError, ValueError):
    pass


# words
class WordSyntaxError(FocalError, ValueError):
    pass


class InvalidIndex(FocalError, ValueError):
    pass


class ArityMismatch(FocalError, ValueError):
    pass


class EnumerationCapExceeded(FocalError, RuntimeError):
    pass


# verifiers
class HypothesisViolated(FocalError, ValueError):
    pass


class TheoremViolated(FocalError, AssertionError):
    """A computation contradicted a proven statement: this is a bug, not mathematics."""


# corpus
class ParameterOutOfRange(FocalError, ValueError):
    pass


class FileFormatError(FocalError, ValueError):
    pass
