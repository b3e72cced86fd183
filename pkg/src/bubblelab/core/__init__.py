"""Cross-cutting configuration for bubblelab.

The only configuration surface is the set of resource caps in
:class:`~bubblelab.core.limits.Limits`. Nothing is read from the environment.
"""

from bubblelab.core.limits import DEFAULT_LIMITS, Limits, ResourceCapError, resolve_limits

__all__ = [
    "DEFAULT_LIMITS",
    "Limits",
    "ResourceCapError",
    "resolve_limits",
]
