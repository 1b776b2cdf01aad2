"""Exception hierarchy shared across the package."""

from __future__ import annotations


class DimspecError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(DimspecError):
    """Caller supplied parameters outside an operation's domain.

    Carries a short machine-readable ``code`` alongside the human message so
    the CLI can map failures onto exit codes deterministically.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class GammaPoleError(DimspecError):
    """Gamma function requested at a pole (argument <= 0 on the lattice)."""


class NoMinimumError(DimspecError):
    """The effective potential has no interior minimum for these parameters."""


class SingularPotentialError(DimspecError):
    """Fall-to-center parameters: the radial problem has no ground state."""


class NoConvergenceError(DimspecError):
    """A numerical search failed to converge or to bracket its target."""
