"""Restricted roots, the set Sigma, max-p, and the canonical decomposition.

All of the heavy lifting happens in a per-(quiver, params, bound) context
holding one dynamic program over the box [0, bound]:

  maxp[v]  = max sum of p over decompositions of v into restricted roots
  sigmap[v] = same, parts restricted to Sigma elements

Sigma membership for a root a needs only maxp on vectors < a, so one table
serves every query at or below the bound.  The canonical decomposition is
the unique Sigma-decomposition maximizing the p-sum; it is reconstructed
from sigmap by always peeling the lexicographically smallest optimal part.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import DomainError, InternalConsistencyError
from .quiver import ParamSet, Quiver, Vec, p_value
from .roots import RootInfo, RootKind, enumerate_roots


@dataclass(frozen=True)
class RestrictedRootSet:
    """R^+ restricted to roots annihilated by every parameter covector."""

    params: ParamSet
    bound: Vec
    members: tuple[RootInfo, ...]


@dataclass(frozen=True)
class CanonicalDecomposition:
    """Multiset of (multiplicity, Sigma root) pairs summing to ``total``."""

    parts: tuple[tuple[int, RootInfo], ...]
    total: Vec

    def multiplicity_sum(self) -> int:
        return sum(m for m, _ in self.parts)

    def dimension(self) -> int:
        return 2 * sum(m * r.p for m, r in self.parts)


def _box(bound: Vec):
    return itertools.product(*(range(x + 1) for x in bound))


def _sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def _leq(a: Vec, b: Vec) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _Context:
    """DP tables for a fixed (quiver, params, bound)."""

    def __init__(self, q: Quiver, params: ParamSet, bound: Vec):
        self.quiver = q
        self.params = params
        self.bound = bound
        self.roots = tuple(
            r for r in enumerate_roots(q, bound) if params.annihilates(r.vector)
        )
        self.by_vec = {r.vector: r for r in self.roots}
        self.maxp: dict[Vec, int] = {}
        self.sigma_roots: tuple[RootInfo, ...] = ()
        self.sigmap: dict[Vec, int] = {}
        self._fill()

    def _fill(self):
        zero = tuple(0 for _ in self.bound)
        maxp = {zero: 0}
        for v in _box(self.bound):
            if v == zero:
                continue
            best = None
            for r in self.roots:
                if not _leq(r.vector, v):
                    continue
                prev = maxp.get(_sub(v, r.vector))
                if prev is not None and (best is None or prev + r.p > best):
                    best = prev + r.p
            if best is not None:
                maxp[v] = best
        self.maxp = maxp

        sigma = []
        for r in self.roots:
            if self._is_sigma(r):
                sigma.append(r)
        self.sigma_roots = tuple(sigma)

        sigmap = {zero: 0}
        for v in _box(self.bound):
            if v == zero:
                continue
            best = None
            for r in self.sigma_roots:
                if not _leq(r.vector, v):
                    continue
                prev = sigmap.get(_sub(v, r.vector))
                if prev is not None and (best is None or prev + r.p > best):
                    best = prev + r.p
            if best is not None:
                sigmap[v] = best
        self.sigmap = sigmap

    def _is_sigma(self, r: RootInfo) -> bool:
        # p(a) must strictly beat p(gamma) + maxp(a - gamma) for every proper
        # first part gamma; an empty range means no r >= 2 decomposition exists.
        for g in self.roots:
            if g.vector == r.vector or not _leq(g.vector, r.vector):
                continue
            rest = self.maxp.get(_sub(r.vector, g.vector))
            if rest is not None and r.p <= g.p + rest:
                return False
        return True

    def canonical_parts(self, a: Vec) -> Optional[tuple[RootInfo, ...]]:
        """The p-sum maximizing Sigma-decomposition of a, as a sorted tuple;
        None when a is not a sum of restricted roots."""
        if a not in self.sigmap:
            return None
        parts = []
        v = a
        zero = tuple(0 for _ in a)
        while v != zero:
            target = self.sigmap[v]
            chosen = None
            for r in self.sigma_roots:  # lexicographically ascending
                if not _leq(r.vector, v):
                    continue
                prev = self.sigmap.get(_sub(v, r.vector))
                if prev is not None and prev + r.p == target:
                    chosen = r
                    break
            if chosen is None:
                raise InternalConsistencyError("sigmap table is inconsistent")
            parts.append(chosen)
            v = _sub(v, chosen.vector)
        return tuple(sorted(parts))


@lru_cache(maxsize=256)
def _context(q: Quiver, params: ParamSet, bound: Vec) -> _Context:
    from . import cache

    key = f"ctx:{q!r}:{params!r}:{bound!r}"
    hit = cache.load(key)
    if isinstance(hit, _Context):
        return hit
    ctx = _Context(q, params, bound)
    cache.store(key, ctx)
    return ctx


def _normalize(q: Quiver, params: ParamSet, a: Sequence[int]) -> Vec:
    a = tuple(int(x) for x in a)
    if len(a) != q.vertices or params.size != q.vertices:
        raise ValueError("vector/parameter sizes do not match the quiver")
    if any(x < 0 for x in a):
        raise ValueError("dimension vectors must be nonnegative")
    return a


def restricted_roots(q: Quiver, params: ParamSet, bound: Sequence[int]) -> RestrictedRootSet:
    bound = _normalize(q, params, bound)
    ctx = _context(q, params, bound)
    return RestrictedRootSet(params, bound, ctx.roots)


def max_p(q: Quiver, params: ParamSet, a: Sequence[int]) -> Optional[int]:
    """Maximum of sum p over decompositions of a into restricted roots;
    None iff a is not a nonnegative integer combination of them."""
    a = _normalize(q, params, a)
    return _context(q, params, a).maxp.get(a)


def sigma_member(q: Quiver, params: ParamSet, a: Sequence[int]) -> bool:
    a = _normalize(q, params, a)
    ctx = _context(q, params, a)
    r = ctx.by_vec.get(a)
    return r is not None and r in ctx.sigma_roots


def sigma_enumerate(q: Quiver, params: ParamSet, bound: Sequence[int]) -> list[RootInfo]:
    bound = _normalize(q, params, bound)
    return list(_context(q, params, bound).sigma_roots)


def canonical_decomposition(
    q: Quiver, params: ParamSet, a: Sequence[int]
) -> Optional[CanonicalDecomposition]:
    """The coarsest decomposition of a into Sigma elements; None means the
    variety is empty.  Raises ValueError when params do not annihilate a."""
    a = _normalize(q, params, a)
    if not params.annihilates(a):
        raise ValueError("parameters do not annihilate the dimension vector")
    if all(x == 0 for x in a):
        return CanonicalDecomposition((), a)
    parts = _context(q, params, a).canonical_parts(a)
    if parts is None:
        return None
    grouped: list[tuple[int, RootInfo]] = []
    for r in parts:
        if grouped and grouped[-1][1] == r:
            grouped[-1] = (grouped[-1][0] + 1, r)
        else:
            grouped.append((1, r))
    for m, r in grouped:
        if r.kind is RootKind.NON_ISOTROPIC and m != 1:
            raise InternalConsistencyError("non-isotropic part with multiplicity > 1")
    return CanonicalDecomposition(tuple(grouped), a)


def is_minimal(q: Quiver, params: ParamSet, s: RootInfo) -> bool:
    """True iff s admits no decomposition into >= 2 Sigma elements."""
    a = _normalize(q, params, s.vector)
    ctx = _context(q, params, a)
    if ctx.by_vec.get(a) not in ctx.sigma_roots:
        raise ValueError("is_minimal is only defined on Sigma elements")
    for g in ctx.sigma_roots:
        if g.vector == a or not _leq(g.vector, a):
            continue
        if _sub(a, g.vector) in ctx.sigmap:
            return False
    return True
