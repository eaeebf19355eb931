"""Exception types shared across the package.

Everything raised on purpose derives from PowersignError so callers can
catch one base type at API boundaries (the CLI does exactly that).
"""

from __future__ import annotations


class PowersignError(Exception):
    """Base class for all errors raised by this package."""


class NotAGroup(PowersignError):
    """A multiplication table failed validation.

    `reason` is one of "not-latin", "no-identity", "not-associative".
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        msg = f"table is not a group ({reason})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class ClosureTooLarge(PowersignError):
    """Generating a closure exceeded the configured element cap."""


class NotAnAutomorphism(PowersignError):
    """A claimed automorphism is not a bijective homomorphism."""


class NotAHomomorphism(PowersignError):
    """A claimed action map does not respect the group operation."""


class NotCentral(PowersignError):
    """A subgroup required to be central is not."""


class NotASubgroup(PowersignError):
    """An element set is not closed, or misses the identity."""


class IsomorphismSearchExceeded(PowersignError):
    """The isomorphism backtracker hit its node budget."""


class NotCoprime(PowersignError):
    """An exponent must be coprime to the group order (or modulus)."""


class ZeroInput(PowersignError):
    """Zero passed where a nonzero integer is required."""


class ModulusMismatch(PowersignError):
    """Two characters with different moduli cannot be compared."""


class NotACharacter(PowersignError):
    """A value table contains a zero, so it is not a character on units."""


class NoDiscriminantFound(PowersignError):
    """No fundamental discriminant reproduces the given character."""


class IllDefined(PowersignError):
    """A map expected to be constant on conjugacy classes is not."""


class NotEquivariant(PowersignError):
    """A permutation does not commute with conjugation."""


class EnumerationCapExceeded(PowersignError):
    """An exhaustive enumeration would exceed the configured cap."""


class EvenOrder(PowersignError):
    """An odd group order is required."""


class NotPowerInvariant(PowersignError):
    """A subset is not stable under the relevant power map."""


class ParseError(PowersignError):
    """A group spec string could not be parsed."""


class FileError(PowersignError):
    """A group file is missing, malformed, or out of supported range."""


class IncompleteOrder(PowersignError):
    """The built-in catalog produced the wrong number of groups for an order."""

    def __init__(self, order: int, found: int, expected: int):
        self.order = order
        self.found = found
        self.expected = expected
        super().__init__(
            f"catalog incomplete at order {order}: built {found} groups, expected {expected}"
        )
