"""Per-variety verdicts: dimension, smoothness, resolutions, strata.

A VarietyDescriptor is purely symbolic: the quiver, a dimension vector and
the parameter set.  Verdicts are read off the canonical decomposition;
strata are representation types, i.e. multisets of (multiplicity, Sigma
root) parts where a real root heads at most one part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .decomp import (
    CanonicalDecomposition,
    canonical_decomposition,
    is_minimal,
    sigma_enumerate,
)
from .errors import DomainError, InternalConsistencyError
from .quiver import ParamSet, Quiver, Vec, cartan_pairing, p_value
from .roots import RootInfo, RootKind, enumerate_roots

# resolution methods, per canonical part
METHOD_POINT = "point"
METHOD_VGIT = "variation-of-GIT"
METHOD_FRAMING = "framing-symmetric-power"
METHOD_OGRADY = "ogrady-blowup"
METHOD_OBSTRUCTED = "obstructed"


@dataclass(frozen=True)
class PartVerdict:
    root: RootInfo
    mult: int
    gcd: int
    method: str


@dataclass(frozen=True)
class ResolutionVerdict:
    resolvable: bool
    per_part: tuple[PartVerdict, ...]
    witness: Optional[PartVerdict]


@dataclass(frozen=True)
class Stratum:
    """A representation type: parts (e_j, beta_j) with sum e_j beta_j = alpha.

    dim counts each part once: 2 * sum over parts of p(beta_j).
    """

    parts: tuple[tuple[int, RootInfo], ...]
    dim: int
    codim: int
    gcd_tau: int
    is_open: bool
    formally_resolvable: Optional[bool]


def _part_method(root: RootInfo) -> tuple[int, str]:
    g = math.gcd(*root.vector)
    if root.kind is RootKind.REAL:
        return g, METHOD_POINT
    if root.kind is RootKind.ISOTROPIC:
        return g, METHOD_FRAMING
    if g == 1:
        return g, METHOD_VGIT
    base = tuple(x // g for x in root.vector)
    # p of the indivisible core, via p(m b) = m^2 (p(b) - 1) + 1
    p_base = (root.p - 1) // (g * g) + 1
    if (g, p_base) == (2, 2):
        return g, METHOD_OGRADY
    return g, METHOD_OBSTRUCTED


@dataclass(eq=False)
class VarietyDescriptor:
    quiver: Quiver
    alpha: Vec
    params: ParamSet

    def __post_init__(self):
        self.alpha = tuple(int(x) for x in self.alpha)
        if not self.params.annihilates(self.alpha):
            raise ValueError("parameters must annihilate alpha")

    @cached_property
    def canonical(self) -> Optional[CanonicalDecomposition]:
        return canonical_decomposition(self.quiver, self.params, self.alpha)

    @cached_property
    def sigma(self) -> tuple[RootInfo, ...]:
        return tuple(sigma_enumerate(self.quiver, self.params, self.alpha))

    def is_empty(self) -> bool:
        return self.canonical is None

    def _require_nonempty(self) -> CanonicalDecomposition:
        if self.canonical is None:
            raise DomainError("the variety is empty")
        return self.canonical

    def dimension(self) -> int:
        return self._require_nonempty().dimension()

    def is_smooth(self) -> bool:
        canon = self._require_nonempty()
        for m, r in canon.parts:
            if r.is_imaginary and m > 1:
                return False
            if not is_minimal(self.quiver, self.params, r):
                return False
        return True

    def resolution_verdict(self) -> ResolutionVerdict:
        canon = self._require_nonempty()
        per_part = []
        witness = None
        for m, r in canon.parts:
            g, method = _part_method(r)
            pv = PartVerdict(r, m, g, method)
            per_part.append(pv)
            if witness is None and method == METHOD_OBSTRUCTED:
                witness = pv
        return ResolutionVerdict(witness is None, tuple(per_part), witness)

    # -- strata -----------------------------------------------------------

    @cached_property
    def strata(self) -> tuple[Stratum, ...]:
        self._require_nonempty()
        total_dim = self.dimension()
        zero = tuple(0 for _ in self.alpha)
        types: list[tuple[tuple[int, RootInfo], ...]] = []

        sigma = self.sigma

        def extend(idx: int, remaining: Vec, acc: list[tuple[int, RootInfo]]):
            if remaining == zero:
                types.append(tuple(acc))
                return
            if idx == len(sigma):
                return
            root = sigma[idx]
            extend(idx + 1, remaining, acc)
            vec = root.vector
            max_c = min(
                (r // v for r, v in zip(remaining, vec) if v > 0), default=0
            )
            if root.kind is RootKind.REAL:
                # a unique stable: one part, any multiplicity
                for e in range(1, max_c + 1):
                    rem = tuple(r - e * v for r, v in zip(remaining, vec))
                    acc.append((e, root))
                    extend(idx + 1, rem, acc)
                    acc.pop()
            else:
                # distinct stables abound: any partition of the copy count
                for total in range(1, max_c + 1):
                    rem = tuple(r - total * v for r, v in zip(remaining, vec))
                    for partition in _partitions(total):
                        for e in partition:
                            acc.append((e, root))
                        extend(idx + 1, rem, acc)
                        del acc[len(acc) - len(partition):]

        extend(0, self.alpha, [])

        strata = []
        formal_mode = self._formal_mode()
        for parts in types:
            parts = tuple(sorted(parts, key=lambda er: (er[1].vector, er[0])))
            dim = 2 * sum(r.p for _, r in parts)
            gcd_tau = math.gcd(*(e for e, _ in parts)) if parts else 0
            strata.append(
                Stratum(
                    parts=parts,
                    dim=dim,
                    codim=total_dim - dim,
                    gcd_tau=gcd_tau,
                    is_open=(dim == total_dim),
                    formally_resolvable=self._formal(formal_mode, gcd_tau),
                )
            )
        strata.sort(key=lambda s: (s.codim, s.parts))
        if sum(1 for s in strata if s.is_open) != 1 and self.alpha != zero:
            raise InternalConsistencyError("open stratum is not unique")
        return tuple(strata)

    def _formal_mode(self) -> Optional[str]:
        """'all' when every stratum is formally resolvable, 'gcd' when the
        gcd-1 criterion applies, None when alpha is outside Sigma or not
        non-isotropic."""
        match = next((r for r in self.sigma if r.vector == self.alpha), None)
        if match is None or match.kind is not RootKind.NON_ISOTROPIC:
            return None
        g = math.gcd(*self.alpha)
        p_base = (match.p - 1) // (g * g) + 1
        return "all" if (g, p_base) == (2, 2) else "gcd"

    @staticmethod
    def _formal(mode: Optional[str], gcd_tau: int) -> Optional[bool]:
        if mode is None:
            return None
        if mode == "all":
            return True
        return gcd_tau == 1

    def local_quiver(self, tau: Stratum) -> tuple[Quiver, Vec]:
        """The slice quiver of a stratum: one vertex per part, p(beta_i)
        loops, -(beta_i, beta_j) arrows i->j, dimension vector (e_1..e_k)."""
        if tau not in self.strata:
            raise ValueError("stratum does not belong to this variety")
        parts = tau.parts
        arrows = []
        for i, (_, r) in enumerate(parts):
            arrows.extend((i, i) for _ in range(r.p))
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                c = cartan_pairing(self.quiver, parts[i][1].vector, parts[j][1].vector)
                arrows.extend((i, j) for _ in range(-c))
        e = tuple(m for m, _ in parts)
        return Quiver(len(parts), tuple(arrows)), e

    def formally_resolvable(self, tau: Stratum) -> Optional[bool]:
        if tau not in self.strata:
            raise ValueError("stratum does not belong to this variety")
        return tau.formally_resolvable


def _partitions(n: int, largest: Optional[int] = None):
    """Integer partitions of n as nonincreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def is_generic_stability(q: Quiver, theta: Sequence, a: Sequence[int]) -> bool:
    """True iff theta.b != 0 for every root 0 < b <= a that is not a
    rational multiple of a."""
    from fractions import Fraction

    theta = tuple(Fraction(x) for x in theta)
    a = tuple(int(x) for x in a)
    for r in enumerate_roots(q, a):
        if _is_rational_multiple(r.vector, a):
            continue
        if sum((t * x for t, x in zip(theta, r.vector)), Fraction(0)) == 0:
            return False
    return True


def _is_rational_multiple(b: Vec, a: Vec) -> bool:
    # b = q a for some rational q > 0, i.e. cross-ratios all agree
    return all(b[i] * a[j] == b[j] * a[i] for i in range(len(a)) for j in range(len(a)))
