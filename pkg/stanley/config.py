from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from stanley.exceptions import CapExceededError

__all__ = ["Limits", "CoefficientField"]

CoefficientField = Literal["Q", "Fp"]


class Limits(BaseModel):
    """
    Desk-scale caps shared by every exact solver, together with the coefficient
    field used by the homology oracle.

    Every solver accepts an optional :code:`limits` keyword; when omitted,
    :meth:`Limits.default` applies.

    Example:
        Raising the Stanley depth cap for a single call::

            limits = Limits(sdepth_max_n=8)
            result = sdepth(ideal, "quotient", limits=limits)
    """

    model_config = ConfigDict(frozen=True)

    chordality_max_n: int = Field(default=12, gt=0, le=64)
    hochster_max_m: int = Field(default=14, gt=0, le=64)
    sdepth_max_n: int = Field(default=7, gt=0, le=64)
    sv_max_generators: int = Field(default=12, gt=0)
    generator_max_n: int = Field(default=7, gt=0, le=64)
    field: CoefficientField = "Q"
    prime: int = Field(default=32003, gt=2)

    @field_validator("prime")
    @classmethod
    def _prime_is_prime(cls, value: int) -> int:
        if any(value % p == 0 for p in range(2, int(value**0.5) + 1)):
            raise ValueError(f"{value} is not a prime")
        return value

    @classmethod
    def default(cls) -> "Limits":
        return _DEFAULT

    def with_max_n(self, max_n: int) -> "Limits":
        """Override every variable-count cap at once, as the CLI's --max-n does."""
        return self.model_copy(
            update={
                "chordality_max_n": max_n,
                "hochster_max_m": max_n,
                "sdepth_max_n": max_n,
                "generator_max_n": max_n,
            }
        )

    def require(self, cap: str, value: int) -> None:
        limit = getattr(self, cap)
        if value > limit:
            raise CapExceededError(cap, limit, value)


_DEFAULT = Limits()
