"""Working-precision context for all real-valued computation.

Every numeric routine takes a ``PrecisionContext``; exact (rational)
routines do not.  The context fixes the posted decimal precision and the
absolute target tolerance derived from it.  Internally each operation
chain runs with extra guard digits and rounds once at the boundary.

Contexts at 15 digits or below are served by plain float64 fast paths
where one exists (float64 carries just under 16 decimal digits).
"""
from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp

# epsilon = 10^(EPSILON_GUARD - digits); must stay < 1e-10 at digits=15
EPSILON_GUARD = 4
# internal working precision = digits + WORKING_GUARD decimal digits
WORKING_GUARD = 10
# at or below this digit count a float64 backend meets the tolerance
FLOAT_DIGITS_MAX = 15

DEFAULT_DIGITS = 30


@dataclass(frozen=True)
class PrecisionContext:
    digits: int = DEFAULT_DIGITS

    def __post_init__(self):
        if self.digits < 15:
            raise ValueError(f"digits must be >= 15, got {self.digits}")

    @property
    def epsilon(self) -> float:
        """Absolute target tolerance for values computed under this context."""
        return 10.0 ** (EPSILON_GUARD - self.digits)

    @property
    def dps(self) -> int:
        """Internal working precision in decimal digits."""
        return self.digits + WORKING_GUARD

    @property
    def use_float(self) -> bool:
        return self.digits <= FLOAT_DIGITS_MAX

    def workdps(self):
        """Context manager setting mpmath to the working precision."""
        return mp.workdps(self.dps)


FLOAT_CTX = PrecisionContext(digits=15)
