"""Character varieties of surface groups, bridged to the quiver engine.

For genus g and rank n these are the GL(n) / SL(n) representation-variety
quotients of a genus-g surface group.  Everything reported here is either
a closed-form formula (dimensions, singular components, verdicts) or a
translation into the one-vertex quiver picture: the GL character variety
of rank n and genus d has the same tangent-cone combinatorics as the
quiver with one vertex and d loops at dimension n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiver import ParamSet, Quiver, Vec
from .variety import VarietyDescriptor

GL = "GL"
SL = "SL"

# resolution methods for whole character varieties
CHAR_SMOOTH = "smooth"
CHAR_HILBERT = "hilbert-scheme"
CHAR_BLOWUP = "blowup"

# a weighted partition: parts (l, v) with sum l*v = n, sorted ascending
WeightedPartition = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SurfaceVariety:
    n: int
    g: int
    group: str = GL

    def __post_init__(self):
        if self.n < 1 or self.g < 1:
            raise ValueError("rank and genus must both be at least 1")
        if self.group not in (GL, SL):
            raise ValueError(f"unknown group {self.group!r}")


def dimension_char(s: SurfaceVariety) -> int:
    if s.g == 1:
        return 2 * s.n if s.group == GL else 2 * (s.n - 1)
    if s.group == GL:
        return 2 * s.n * s.n * (s.g - 1) + 2
    return 2 * (s.g - 1) * (s.n * s.n - 1)


def weighted_partitions(n: int) -> list[WeightedPartition]:
    """All multisets of pairs (l, v) with sum l*v = n, each sorted by (v, l)."""
    pairs = sorted(
        ((l, v) for v in range(1, n + 1) for l in range(1, n // v + 1)),
        key=lambda lv: (lv[1], lv[0]),
    )

    out: list[WeightedPartition] = []

    def extend(idx: int, remaining: int, acc: list[tuple[int, int]]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if idx == len(pairs):
            return
        extend(idx + 1, remaining, acc)
        l, v = pairs[idx]
        weight = l * v
        count = 1
        while count * weight <= remaining:
            acc.extend([(l, v)] * count)
            extend(idx + 1, remaining - count * weight, acc)
            del acc[len(acc) - count:]
            count += 1

    extend(0, n, [])
    return sorted(out)


def strata_char(s: SurfaceVariety) -> list[tuple[WeightedPartition, int, int]]:
    """(weighted partition, dim, codim) triples, open stratum first.

    Only the GL stratification is enumerated; SL strata differ by a torus
    factor and are not modelled.
    """
    if s.group != GL:
        raise ValueError("strata are enumerated for the GL form only")
    total = dimension_char(s)
    rows = []
    for nu in weighted_partitions(s.n):
        if s.g == 1:
            if any(v != 1 for _, v in nu):
                continue
            dim = 2 * len(nu)
        else:
            dim = 2 * (len(nu) + (s.g - 1) * sum(v * v for _, v in nu))
        rows.append((nu, dim, total - dim))
    rows.sort(key=lambda r: (r[2], r[0]))
    return rows


def singular_components_char(s: SurfaceVariety) -> list[int]:
    """Ranks labelling the components of the singular locus.

    Genus 1 is the symmetric-product model: a single diagonal class as
    soon as n >= 2.
    """
    if s.g == 1:
        return [1] if s.n >= 2 else []
    return list(range(1, s.n // 2 + 1))


def local_quiver_char(g: int, nu: WeightedPartition) -> tuple[Quiver, Vec]:
    """Tangent-cone quiver of a stratum: vertex i gets (g-1)v_i^2 + 1 loops,
    (2g-2) v_i v_j arrows i->j, and dimension l_i."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    nu = tuple((int(l), int(v)) for l, v in nu)
    if not nu or any(l < 1 or v < 1 for l, v in nu):
        raise ValueError("weighted partition parts must be positive")
    k = len(nu)
    arrows = []
    for i, (_, v) in enumerate(nu):
        arrows.extend((i, i) for _ in range((g - 1) * v * v + 1))
    for i in range(k):
        for j in range(i + 1, k):
            arrows.extend((i, j) for _ in range((2 * g - 2) * nu[i][1] * nu[j][1]))
    return Quiver(k, tuple(arrows)), tuple(l for l, _ in nu)


def resolution_verdict_char(s: SurfaceVariety) -> dict:
    if s.n == 1:
        return {"resolvable": True, "method": CHAR_SMOOTH}
    if s.g == 1:
        return {"resolvable": True, "method": CHAR_HILBERT}
    if (s.n, s.g) == (2, 2):
        return {"resolvable": True, "method": CHAR_BLOWUP}
    return {"resolvable": False, "method": None}


def char_as_quiver(n: int, d: int) -> VarietyDescriptor:
    """The one-vertex quiver model: d loops, dimension vector (n), zero params."""
    if n < 1 or d < 1:
        raise ValueError("rank and loop count must both be at least 1")
    q = Quiver(1, tuple((0, 0) for _ in range(d)))
    return VarietyDescriptor(q, (n,), ParamSet.zero(1))
