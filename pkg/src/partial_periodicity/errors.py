"""Exception types shared across the package."""

# Values are kept within the signed 64-bit range even though Python ints are
# unbounded, so results agree with fixed-width implementations.
INT_MAX = 2**63 - 1


class ArithmeticOverflowError(OverflowError):
    """An intermediate or final value left the signed 64-bit range."""


class TrivialInstanceError(ValueError):
    """gcd(p, q) is p or q: every length works, so no threshold exists."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search would exceed its configured work budget."""


def checked(value: int) -> int:
    if value > INT_MAX or value < -INT_MAX - 1:
        raise ArithmeticOverflowError(f"value {value} exceeds 64-bit range")
    return value


def checked_mul(a: int, b: int) -> int:
    return checked(a * b)
