"""Positive roots of the quiver's Kac-Moody root system.

Classification uses reflection descent: repeatedly reflect at a loopfree
vertex pairing positively with the candidate.  Real roots descend to a
coordinate vector; a candidate with no descent step left is a root iff it
lies in the fundamental region (positive, connected support, pairing
nonpositively with every coordinate vector).  The height strictly drops
each step, so the descent terminates.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import DomainError
from .quiver import Quiver, Vec, _check_sizes, cartan_pairing, p_value


class RootKind(enum.Enum):
    REAL = "real"
    ISOTROPIC = "isotropic"
    NON_ISOTROPIC = "non-isotropic"


@dataclass(frozen=True, order=True)
class RootInfo:
    vector: Vec
    kind: RootKind
    p: int

    @property
    def is_imaginary(self) -> bool:
        return self.kind is not RootKind.REAL

    def __str__(self):
        return f"{list(self.vector)}:{self.kind.value}(p={self.p})"


def support_connected(q: Quiver, b: Sequence[int]) -> bool:
    """True iff the subgraph induced on {i : b_i > 0} is connected."""
    _check_sizes(q, b)
    support = {i for i, x in enumerate(b) if x > 0}
    if not support:
        raise DomainError("support of the zero vector is undefined")
    seen = {min(support)}
    frontier = [min(support)]
    while frontier:
        i = frontier.pop()
        for j in q.neighbours(i) & support - seen:
            seen.add(j)
            frontier.append(j)
    return seen == support


def in_fundamental_region(q: Quiver, b: Sequence[int]) -> bool:
    """b > 0 with connected support and (b, e_i) <= 0 for every vertex i."""
    _check_sizes(q, b)
    b = tuple(b)
    if all(x == 0 for x in b) or any(x < 0 for x in b):
        return False
    if not support_connected(q, b):
        return False
    return all(_pair_with_vertex(q, b, i) <= 0 for i in range(q.vertices))


def _pair_with_vertex(q: Quiver, b: Sequence[int], i: int) -> int:
    # (b, e_i) expanded via the Cartan matrix column.
    return sum(b[j] * q.cartan_entry(j, i) for j in range(q.vertices))


@lru_cache(maxsize=None)
def _classify_cached(q: Quiver, b: Vec) -> Optional[RootInfo]:
    original = b
    cur = list(b)
    loopfree = [i for i in range(q.vertices) if q.is_loopfree(i)]
    while True:
        step = None
        for i in loopfree:
            if _pair_with_vertex(q, cur, i) > 0:
                step = i
                break
        if step is None:
            break
        if cur[step] == 1 and sum(cur) == 1:
            return RootInfo(original, RootKind.REAL, 0)
        c = _pair_with_vertex(q, cur, step)
        cur[step] -= c
        if cur[step] < 0:
            return None
    if sum(cur) == 1 and q.is_loopfree(cur.index(1)):
        # a coordinate vector at a loopfree vertex pairs to 2 with itself,
        # so it is caught above; keep the branch for safety.
        return RootInfo(original, RootKind.REAL, 0)
    if all(x == 0 for x in cur):
        return None
    if not support_connected(q, tuple(cur)):
        return None
    p = p_value(q, original)
    kind = RootKind.ISOTROPIC if p == 1 else RootKind.NON_ISOTROPIC
    return RootInfo(original, kind, p)


def classify(q: Quiver, b: Sequence[int]) -> Optional[RootInfo]:
    """Classify a nonnegative vector as a positive root, or None if not a root."""
    _check_sizes(q, b)
    b = tuple(int(x) for x in b)
    if all(x == 0 for x in b):
        raise DomainError("the zero vector is not classified")
    if any(x < 0 for x in b):
        raise ValueError("only nonnegative vectors are classified")
    return _classify_cached(q, b)


def enumerate_roots(q: Quiver, bound: Sequence[int]) -> list[RootInfo]:
    """All positive roots b with 0 < b <= bound, lexicographically sorted."""
    _check_sizes(q, bound)
    bound = tuple(int(x) for x in bound)
    if any(x < 0 for x in bound):
        raise ValueError("bound must be nonnegative")
    out = []
    for b in itertools.product(*(range(x + 1) for x in bound)):
        if all(x == 0 for x in b):
            continue
        info = _classify_cached(q, b)
        if info is not None:
            out.append(info)
    return out
