"""Resource caps guarding exhaustive computations.

Every enumeration in bubblelab grows exponentially in ``r = m + n``. The caps
below keep accidental invocations from exhausting memory; they are resource
guards only and can be lifted (``Limits.unbounded()``, CLI ``--force``).
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class ResourceCapError(Exception):
    """Raised when an instance exceeds a configured resource cap.

    Attributes:
        quantity: Name of the cap that was exceeded (a ``Limits`` field name).
        value: The requested size.
        limit: The configured maximum.

    Example:
        >>> raise ResourceCapError("max_r_words", 18, 16)
    """

    def __init__(self, quantity: str, value: int, limit: int) -> None:
        """Initialize ResourceCapError.

        Args:
            quantity: Name of the exceeded cap.
            value: Requested size.
            limit: Configured maximum.
        """
        self.quantity = quantity
        self.value = value
        self.limit = limit
        super().__init__(f"instance too large: {quantity} requires {value} but limit is {limit}")


class Limits(BaseModel):
    """Immutable set of resource caps.

    A cap of ``None`` disables the corresponding check.

    Attributes:
        max_r_words: Largest ``m + n`` for word enumeration.
        max_r_poset: Largest ``m + n`` for dense order matrices (posets, Möbius).
        max_r_gamma: Largest ``m + n`` for building Γ(m,n).
        max_r_delta: Largest ``m + n`` for building Δ(m,n).
        max_r_extended: Largest ``m + n`` for the extended triangles.
        max_r_paths: Largest ``m + n`` for Delannoy path enumeration.
        max_colors: Largest number of diagonal colors.
        max_vd_vertices: Largest vertex count for vertex-decomposition search.
    """

    model_config = ConfigDict(frozen=True)

    max_r_words: int | None = Field(default=16, ge=0)
    max_r_poset: int | None = Field(default=8, ge=0)
    max_r_gamma: int | None = Field(default=14, ge=0)
    max_r_delta: int | None = Field(default=12, ge=0)
    max_r_extended: int | None = Field(default=8, ge=0)
    max_r_paths: int | None = Field(default=14, ge=0)
    max_colors: int | None = Field(default=6, ge=0)
    max_vd_vertices: int | None = Field(default=20, ge=0)

    @classmethod
    def unbounded(cls) -> Limits:
        """Return limits with every cap disabled."""
        return cls(**{name: None for name in cls.model_fields})

    def check(self, quantity: str, value: int) -> None:
        """Raise if ``value`` exceeds the cap named ``quantity``.

        Args:
            quantity: A field name of this model.
            value: Requested size.

        Raises:
            ResourceCapError: If the cap is set and exceeded.
            AttributeError: If ``quantity`` is not a known cap.
        """
        limit: int | None = getattr(self, quantity)
        if limit is not None and value > limit:
            raise ResourceCapError(quantity, value, limit)


DEFAULT_LIMITS = Limits()


def resolve_limits(limits: Limits | None) -> Limits:
    """Return ``limits`` or the default caps when ``None``."""
    return DEFAULT_LIMITS if limits is None else limits
