"""Exception hierarchy shared by all modules."""


class PolydirichletError(Exception):
    """Base class for all library errors."""


class FieldMismatch(PolydirichletError):
    """Operands live over different fields."""


class NotPrime(PolydirichletError):
    """PrimeField modulus failed the primality test."""


class PolynomialDomainError(PolydirichletError):
    """Operation not supported over this coefficient field."""


class NoValidCycleLength(PolydirichletError):
    """No integer e with n/2 < e < n-m and the required gcd conditions."""


class FieldTooSmall(PolydirichletError):
    """Element search exhausted the field (or its search budget)."""


class NotCoprime(PolydirichletError):
    """Inputs required to be relatively prime are not."""


class DegreeTooSmall(PolydirichletError):
    """Target degree too small for the construction to go through."""


class PreconditionViolation(PolydirichletError):
    """Caller broke a documented precondition."""


class DegreeTooLarge(PolydirichletError):
    """Permutation-group closure requested beyond the degree guard."""


class NotTransitive(PolydirichletError):
    """Operation requires a transitive group."""


class NotASubgroup(PolydirichletError):
    """Claimed subgroup is not contained in the group."""


class NotSeparable(PolydirichletError):
    """Polynomial has a repeated root."""


class BudgetExceeded(PolydirichletError):
    """Search space larger than the configured budget."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class OrderGuardExceeded(PolydirichletError):
    """Constructed group would exceed the order guard."""


class InvalidGroupData(PolydirichletError):
    """Multiplication table / action / extension data fails the group axioms."""


class ParseError(PolydirichletError):
    """Malformed polynomial, permutation, or group description text."""
