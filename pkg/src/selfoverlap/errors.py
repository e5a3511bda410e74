"""Exception hierarchy.

Every error a caller can trigger with bad input derives from
:class:`DomainError`; the CLI maps those to exit code 3.
"""


class DomainError(ValueError):
    """Base class for input-domain failures."""


class NotABijection(DomainError):
    """The values do not form a bijection onto 1..n."""


class MalformedToken(DomainError):
    """A permutation string contains something that is not an integer."""


class DuplicateEntry(DomainError):
    """A sequence that must hold distinct entries repeats a value."""


class EmptyPermutation(DomainError):
    """The operation is undefined for the empty permutation."""


class NonUnitConstantTerm(DomainError):
    """Series inversion over the integers needs a constant term of +1 or -1."""


class NegativeExponent(DomainError):
    pass


class DegenerateBasis(DomainError):
    """Some basis element 1/n^(k) has a vanishing denominator for this n."""


class BadRange(DomainError):
    pass


class IneligiblePattern(DomainError):
    """The closed formulas need both the pattern and its reverse to be
    non-self-overlapping (and size at least 3)."""


class PatternLargerThanHost(DomainError):
    pass


class SizeCapExceeded(DomainError):
    """Exhaustive enumeration was requested above the configured cap."""
