"""Built-in quivers addressable by name from the command line and tests."""

from __future__ import annotations

import re

from .quiver import Quiver


def _path(n: int) -> Quiver:
    return Quiver(n, tuple((i, i + 1) for i in range(n - 1)))


def _cycle(n: int) -> Quiver:
    return Quiver(n, tuple((i, (i + 1) % n) for i in range(n)))


def _star(legs: int) -> Quiver:
    # center is vertex 0, one edge to each leaf
    return Quiver(legs + 1, tuple((i, 0) for i in range(1, legs + 1)))


def _jordan(loops: int) -> Quiver:
    return Quiver(1, tuple((0, 0) for _ in range(loops)))


_FIXED = {
    "a2": lambda: _path(2),
    "a3": lambda: _path(3),
    "affa1": lambda: Quiver(2, ((0, 1), (0, 1))),
    "affa2": lambda: _cycle(3),
    "affd4": lambda: _star(4),
}


def builtin(name: str) -> Quiver:
    """Resolve a named quiver: a2, a3, affa1, affa2, affd4, jordanK, starK."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"jordan(\d+)", key)
    if m:
        return _jordan(int(m.group(1)))
    m = re.fullmatch(r"star(\d+)", key)
    if m:
        legs = int(m.group(1))
        if legs < 1:
            raise ValueError("star quivers need at least one leg")
        return _star(legs)
    raise ValueError(f"unknown builtin quiver {name!r}")


BUILTIN_NAMES = ("a2", "a3", "affa1", "affa2", "affd4", "jordanK", "starK")
