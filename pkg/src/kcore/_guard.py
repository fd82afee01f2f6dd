import os

from .errors import GuardError

ENV_VAR = "KCORE_GUARD_OVERRIDE"


def _factor():
    raw = os.environ.get(ENV_VAR, "").strip().lower()
    if not raw:
        return 1
    if raw in ("off", "none", "unlimited"):
        return None
    try:
        value = int(raw)
    except ValueError:
        raise GuardError(f"{ENV_VAR} must be a positive integer or 'off', got {raw!r}")
    if value < 1:
        raise GuardError(f"{ENV_VAR} must be >= 1, got {value}")
    return value


def check(what, size, limit):
    """Raise GuardError when ``size`` exceeds ``limit`` scaled by the override factor."""
    factor = _factor()
    if factor is None:
        return
    if size > limit * factor:
        raise GuardError(
            f"{what}: size {size} exceeds guard {limit * factor} "
            f"(set {ENV_VAR} to raise it; unsupported territory)"
        )
