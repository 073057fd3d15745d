"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: ValidationError (and
subclasses) exit 1, InternalCheckError exits 2.
"""


class ValidationError(ValueError):
    """Bad input: malformed data or a violated operation precondition."""


class RetractConditionError(ValidationError):
    """The inclusion of the support into its closed star is not a
    homology isomorphism; subdividing first usually repairs this."""


class InternalCheckError(AssertionError):
    """A mathematical identity that must hold failed; indicates a bug."""
