"""Shared exception types and the global state-cap setting."""

import os

DEFAULT_STATE_CAP = 10**7
_CAP_ENV = "MINUSCULE_STATE_CAP"


class ParameterError(ValueError):
    """A caller-supplied parameter is out of range or inconsistent."""


class UnsupportedPosetError(ValueError):
    """The operation is only defined for the built-in minuscule families."""


class StateCapExceeded(RuntimeError):
    """An exhaustive traversal would exceed the configured state cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(f"{message} (state cap: {cap})")
        self.cap = cap


class ExactnessError(ArithmeticError):
    """An exact polynomial division left a nonzero remainder."""


def state_cap(override: int | None = None) -> int:
    """Effective state cap: explicit override, else the environment, else the default."""
    if override is not None:
        if override < 1:
            raise ParameterError("state cap must be positive")
        return override
    env = os.environ.get(_CAP_ENV)
    if env:
        try:
            cap = int(env)
        except ValueError as exc:
            raise ParameterError(f"{_CAP_ENV} must be an integer, got {env!r}") from exc
        if cap < 1:
            raise ParameterError(f"{_CAP_ENV} must be positive")
        return cap
    return DEFAULT_STATE_CAP
