"""Finite abelian l-group types for HurwitzKit."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime


class AbelianLGroupType(BaseModel):
    """⊕ Z/l^ei, stored as the non-increasing exponent partition (e1, e2, ...)."""
    model_config = ConfigDict(frozen=True)

    l: int = Field(..., description="The prime l")
    partition: Tuple[int, ...] = Field(default=(), description="Non-increasing positive exponents")

    @field_validator("partition")
    @classmethod
    def _check_partition(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(e <= 0 for e in value):
            raise ValueError(f"partition entries must be positive: {value}")
        if list(value) != sorted(value, reverse=True):
            raise ValueError(f"partition must be non-increasing: {value}")
        return tuple(value)

    @model_validator(mode="after")
    def _check_prime(self) -> "AbelianLGroupType":
        if not isprime(self.l):
            raise ValueError(f"l must be prime, got {self.l}")
        return self

    @property
    def size(self) -> int:
        """Sum of exponents, so that the order is l**size."""
        return sum(self.partition)

    @property
    def order(self) -> int:
        return self.l ** self.size

    @property
    def rank(self) -> int:
        return len(self.partition)

    @property
    def is_trivial(self) -> bool:
        return not self.partition

    def label(self) -> str:
        """Short text form, e.g. ``Z/9xZ/3`` or ``1``."""
        if self.is_trivial:
            return "1"
        return "x".join(f"Z/{self.l ** e}" for e in self.partition)

    def key(self) -> str:
        """Compact key used in CSV columns, e.g. ``2.1`` (``0`` for trivial)."""
        return ".".join(str(e) for e in self.partition) or "0"

    @classmethod
    def trivial(cls, l: int) -> "AbelianLGroupType":
        return cls(l=l, partition=())

    @classmethod
    def parse(cls, text: str, l: int) -> "AbelianLGroupType":
        """Parse ``1``, ``2,1``, ``2.1`` or ``trivial``/``0`` as exponent partitions."""
        body = text.strip()
        if body in ("", "0", "trivial"):
            return cls.trivial(l)
        parts = [p for p in body.replace(".", ",").replace(" ", ",").split(",") if p]
        return cls(l=l, partition=tuple(sorted((int(p) for p in parts), reverse=True)))

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"l": self.l, "partition": list(self.partition)}

    @classmethod
    def from_dict(cls, data: dict) -> "AbelianLGroupType":
        """Create from dictionary."""
        return cls(l=data["l"], partition=tuple(data["partition"]))
