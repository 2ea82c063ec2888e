"""Quivers, dimension vectors, parameters and the bilinear forms.

A quiver is a finite directed multigraph, loops allowed.  All of the
combinatorics downstream (roots, decompositions, strata) is driven by
three forms computed here: the Ringel form, its symmetrization (the
Cartan pairing) and p(a) = 1 - <a, a>.

Everything is exact: dimension vectors are tuples of ints, parameter
covectors are tuples of Fractions.  All values are immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

Vec = tuple[int, ...]
Covector = tuple[Fraction, ...]


def _as_vec(a: Sequence[int]) -> Vec:
    return tuple(int(x) for x in a)


def _as_covector(c: Iterable) -> Covector:
    return tuple(Fraction(x) for x in c)


@dataclass(frozen=True)
class Quiver:
    """A finite quiver: ``vertices`` counts vertices 0..n-1, ``arrows`` is a
    multiset of (tail, head) pairs.  A loop is an arrow (i, i)."""

    vertices: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertices < 1:
            raise ValueError("quiver needs at least one vertex")
        arrows = tuple((int(t), int(h)) for t, h in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        for t, h in arrows:
            if not (0 <= t < self.vertices and 0 <= h < self.vertices):
                raise ValueError(f"arrow ({t},{h}) has endpoint outside 0..{self.vertices - 1}")

    def loop_count(self, i: int) -> int:
        return sum(1 for t, h in self.arrows if t == h == i)

    def edge_count(self, i: int, j: int) -> int:
        """Total arrows between distinct vertices i and j, either direction."""
        if i == j:
            raise ValueError("edge_count is for distinct vertices; use loop_count")
        return sum(1 for t, h in self.arrows if {t, h} == {i, j})

    def cartan_entry(self, i: int, j: int) -> int:
        if i == j:
            return 2 - 2 * self.loop_count(i)
        return -self.edge_count(i, j)

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        n = self.vertices
        return tuple(tuple(self.cartan_entry(i, j) for j in range(n)) for i in range(n))

    def is_loopfree(self, i: int) -> bool:
        return self.loop_count(i) == 0

    def neighbours(self, i: int) -> set[int]:
        out = set()
        for t, h in self.arrows:
            if t == i and h != i:
                out.add(h)
            elif h == i and t != i:
                out.add(t)
        return out

    # -- serialization ----------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"vertices": self.vertices, "arrows": [list(a) for a in self.arrows]})

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        try:
            data = json.loads(text)
            return cls(int(data["vertices"]), tuple((a[0], a[1]) for a in data["arrows"]))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ValueError(f"malformed quiver JSON: {exc}") from exc


@dataclass(frozen=True)
class ParamSet:
    """Deformation/stability data (lambda, theta).

    A complex deformation parameter is represented by a *list* of exact
    rational covectors: a vector pairs to zero with lambda iff every listed
    covector annihilates it.  theta is a single rational covector.
    """

    lambdas: tuple[Covector, ...]
    theta: Covector

    @classmethod
    def make(cls, lambdas: Iterable[Iterable], theta: Iterable) -> "ParamSet":
        return cls(tuple(_as_covector(l) for l in lambdas), _as_covector(theta))

    @classmethod
    def zero(cls, n: int) -> "ParamSet":
        return cls((), tuple(Fraction(0) for _ in range(n)))

    @property
    def size(self) -> int:
        return len(self.theta)

    def covectors(self) -> tuple[Covector, ...]:
        return self.lambdas + (self.theta,)

    def annihilates(self, a: Sequence[int]) -> bool:
        return all(_dot(c, a) == 0 for c in self.covectors())


def _dot(cov: Covector, a: Sequence[int]) -> Fraction:
    if len(cov) != len(a):
        raise ValueError(f"covector length {len(cov)} != vector length {len(a)}")
    return sum((c * x for c, x in zip(cov, a)), Fraction(0))


def _check_sizes(q: Quiver, *vecs: Sequence[int]):
    for v in vecs:
        if len(v) != q.vertices:
            raise ValueError(f"vector of length {len(v)} does not fit quiver with {q.vertices} vertices")


def ringel_form(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """<a, b> = sum_i a_i b_i - sum_{arrows t->h} a_t b_h (loops included)."""
    _check_sizes(q, a, b)
    return sum(x * y for x, y in zip(a, b)) - sum(a[t] * b[h] for t, h in q.arrows)


def cartan_pairing(q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """(a, b) = <a, b> + <b, a>; symmetric and bilinear."""
    return ringel_form(q, a, b) + ringel_form(q, b, a)


def p_value(q: Quiver, a: Sequence[int]) -> int:
    """p(a) = 1 - <a, a>; half the variety dimension for a in Sigma."""
    return 1 - ringel_form(q, a, a)


def reflect(q: Quiver, i: int, a: Sequence[int]) -> Vec:
    """Simple reflection s_i(a) = a - (a, e_i) e_i at a loopfree vertex i.

    The result may have negative entries; callers interpret.
    """
    _check_sizes(q, a)
    if not q.is_loopfree(i):
        raise DomainError(f"vertex {i} carries a loop; reflection undefined")
    e_i = tuple(1 if j == i else 0 for j in range(q.vertices))
    c = cartan_pairing(q, a, e_i)
    return tuple(x - (c if j == i else 0) for j, x in enumerate(a))


def frame(
    q: Quiver, a: Sequence[int], theta: Sequence, framing: Sequence[int]
) -> tuple[Quiver, Vec, Covector]:
    """Absorb a framing into an ordinary quiver.

    Adds one new vertex (index ``q.vertices``) with ``framing[i]`` arrows
    to each vertex i; the dimension vector extends by 1 and the stability
    covector by c = -theta.a, so the extended covector annihilates (a, 1).
    """
    _check_sizes(q, a, framing)
    fr = _as_vec(framing)
    if any(x < 0 for x in fr):
        raise ValueError("framing must be nonnegative")
    theta_cov = _as_covector(theta)
    inf = q.vertices
    new_arrows = q.arrows + tuple((inf, i) for i in range(q.vertices) for _ in range(fr[i]))
    new_q = Quiver(q.vertices + 1, new_arrows)
    new_a = _as_vec(a) + (1,)
    c = -_dot(theta_cov, a)
    return new_q, new_a, theta_cov + (c,)


def validate_params(q: Quiver, a: Sequence[int], params: ParamSet) -> list[dict]:
    """Report every covector in lambda / theta that fails to annihilate a.

    Returns an empty list when all constraints hold (diagnostic, never raises
    beyond size checks).
    """
    _check_sizes(q, a)
    violations = []
    for idx, cov in enumerate(params.lambdas):
        val = _dot(cov, a)
        if val != 0:
            violations.append({"which": "lambda", "index": idx, "value": val})
    val = _dot(params.theta, a)
    if val != 0:
        violations.append({"which": "theta", "index": 0, "value": val})
    return violations


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
