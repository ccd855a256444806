"""Default size guards, overridable through the HILBQDIM_GUARD environment variable."""
import os

FREUDENTHAL_GUARD = 10**6
CONVOLUTION_GUARD = 10**7
QDIM_GUARD = 10**6


def guard(default: int) -> int:
    """Return HILBQDIM_GUARD if set, else ``default``."""
    value = os.environ.get("HILBQDIM_GUARD")
    if value is None or not value.strip():
        return default
    return int(value)
