# src/signet/errors.py
"""Exception hierarchy shared by every signet module.

All errors derive from :class:`SignetError`, itself a :class:`ValueError`,
so argument checks can be caught either way. Each class carries a short
``code`` that the CLI reports as the machine-readable error code.
"""


class SignetError(ValueError):
    """Base class for domain failures."""

    code = "domain"


class DomainError(SignetError):
    """A precondition on the input does not hold."""

    code = "domain"


class SingularError(SignetError):
    """Singular or degenerate input (zero determinant, pole, root)."""

    code = "singular"


class ShapeError(SignetError):
    """Dimensions do not agree."""

    code = "shape"


class NotSymplecticError(SignetError):
    """A matrix does not preserve the given skew form."""

    code = "not_symplectic"


class UnsatisfiableError(SignetError):
    """A bounded search found no admissible answer."""

    code = "unsatisfiable"


class ParseError(SignetError):
    """Malformed text or JSON encoding."""

    code = "parse"
