"""Resource bounds for enumeration and symbolic computation.

Defaults can be overridden per process through the ``DASASM_BOUNDS``
environment variable, e.g. ``DASASM_BOUNDS="asm=8,triangles=7"``.
"""

from __future__ import annotations

import os

from .errors import InputError, ResourceError

DEFAULT_BOUNDS = {
    "asm": 7,  # enumerate_asm / class filtering
    "triangles": 6,  # enumerate_triangles
    "symbolic": 3,  # partition_function_symbolic
    "dp": 14,  # transfer DP
    "ssyt": 24,  # |lambda| for tableau enumeration
}

ENV_VAR = "DASASM_BOUNDS"


def _env_overrides() -> dict:
    raw = os.environ.get(ENV_VAR, "").strip()
    out = {}
    if not raw:
        return out
    for item in raw.split(","):
        if not item.strip():
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULT_BOUNDS:
            raise InputError(f"bad entry {item!r} in {ENV_VAR}")
        try:
            out[key] = int(value)
        except ValueError:
            raise InputError(f"bad bound {value!r} for {key} in {ENV_VAR}") from None
    return out


def bound(name: str) -> int:
    """The effective bound named ``name``."""
    return _env_overrides().get(name, DEFAULT_BOUNDS[name])


def check_bound(name: str, n: int, limit: int | None = None) -> None:
    limit = bound(name) if limit is None else limit
    if n > limit:
        raise ResourceError(f"{name}: n={n} exceeds the configured bound {limit}")
