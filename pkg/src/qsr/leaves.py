"""Codimension-two leaves: isotropic decompositions and Weyl-group factors.

An isotropic decomposition splits alpha into distinct imaginary Sigma
roots plus real Sigma roots with multiplicities, such that the pairing
matrix of the parts is an affine Dynkin Cartan matrix whose minimal
imaginary root equals the multiplicity vector.  Each accepted
decomposition labels one codimension-two symplectic leaf; the finite
Weyl group attached to its affine type is that leaf's factor of the
Namikawa Weyl group (before the fundamental-group twist).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, InternalConsistencyError
from .quiver import Quiver, Vec, cartan_pairing
from .roots import RootInfo, RootKind
from .variety import Stratum, VarietyDescriptor

Matrix = tuple[tuple[int, ...], ...]

STRICT = "strict"
PERMISSIVE = "permissive"


class AffineRejection(Exception):
    """The matrix/multiplicity pair is not an affine Dynkin datum."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class AffineType:
    family: str  # "A~", "D~" or "E~"
    rank: int
    delta: Vec
    weyl_label: str

    @property
    def label(self) -> str:
        return f"{self.family[0]}~{self.rank}"


@dataclass(frozen=True)
class IsotropicDecomposition:
    imag_parts: tuple[RootInfo, ...]
    real_parts: tuple[tuple[int, RootInfo], ...]
    qpp_cartan: Matrix
    affine: AffineType

    def stratum_parts(self) -> tuple[tuple[int, RootInfo], ...]:
        parts = [(1, r) for r in self.imag_parts] + list(self.real_parts)
        return tuple(sorted(parts, key=lambda er: (er[1].vector, er[0])))


def build_cartan(parts: Sequence[Sequence[int]], q: Quiver) -> tuple[Matrix, bool]:
    """Pairing matrix of the parts: 2 on the diagonal, (part_i, part_j) off it.

    Returns (matrix, dynkin_ok); dynkin_ok is False when some off-diagonal
    entry is positive (impossible for distinct stables).
    """
    if not parts:
        raise ValueError("need at least one part")
    n = len(parts)
    rows = []
    ok = True
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
            else:
                c = cartan_pairing(q, parts[i], parts[j])
                if c > 0:
                    ok = False
                row.append(c)
        rows.append(tuple(row))
    return tuple(rows), ok


def _nullspace(a: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of the rational kernel of a square matrix (Gaussian elimination)."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = m[row][col]
        m[row] = [x / inv for x in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(tuple(vec))
    return basis


def _primitive_positive(v: Sequence[Fraction]) -> Optional[Vec]:
    from math import gcd, lcm

    denom = lcm(*(x.denominator for x in v))
    ints = [int(x * denom) for x in v]
    if all(x == 0 for x in ints):
        return None
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        return None
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _graph_family(a: Matrix) -> tuple[str, int]:
    """Identify the underlying diagram in the simply-laced affine catalog.

    Raises AffineRejection when the shape is not in the catalog.
    """
    n = len(a)
    edges = {(i, j): -a[i][j] for i in range(n) for j in range(i + 1, n) if a[i][j] < 0}
    if any(m > 1 for m in edges.values()):
        if n == 2 and edges.get((0, 1)) == 2:
            return "A~", 1
        raise AffineRejection("not in catalog: multiple edge outside affine A1")
    degree = [0] * n
    for i, j in edges:
        degree[i] += 1
        degree[j] += 1
    if n >= 3 and all(d == 2 for d in degree):
        return "A~", n - 1  # a single cycle
    if len(edges) != n - 1:
        raise AffineRejection("not in catalog: neither a cycle nor a tree")
    deg_sorted = sorted(degree, reverse=True)
    if deg_sorted[0] == 4 and deg_sorted[1] == 1 and n == 5:
        return "D~", 4
    if deg_sorted[0] == 3 and deg_sorted[1] == 3 and n >= 6:
        # two branch nodes joined by a path, four pendant legs
        if degree.count(3) == 2 and degree.count(1) == 4:
            return "D~", n - 1
    if deg_sorted[0] == 3 and deg_sorted[1] <= 2:
        lengths = sorted(_branch_lengths(n, edges, degree.index(3)))
        if lengths == [2, 2, 2] and n == 7:
            return "E~", 6
        if lengths == [1, 3, 3] and n == 8:
            return "E~", 7
        if lengths == [1, 2, 5] and n == 9:
            return "E~", 8
    raise AffineRejection("not in catalog")


def _branch_lengths(n: int, edges: dict, center: int) -> list[int]:
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    lengths = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return lengths


def affine_classify(a: Matrix, mults: Sequence[int]) -> AffineType:
    """Accept a symmetric Cartan matrix as an affine Dynkin datum.

    Requires: connected diagram, catalog shape, one-dimensional radical with
    primitive positive generator delta, and mults == delta.  Rejections
    raise AffineRejection with a reason.
    """
    n = len(a)
    mults = tuple(int(x) for x in mults)
    if len(mults) != n:
        raise ValueError("multiplicity vector does not match the matrix size")
    if not _connected(a):
        raise AffineRejection("disconnected")
    kernel = _nullspace(a)
    if len(kernel) != 1:
        raise AffineRejection("radical is not one-dimensional")
    delta = _primitive_positive(kernel[0])
    if delta is None:
        raise AffineRejection("radical has no positive generator")
    family, rank = _graph_family(a)
    if mults != delta:
        raise AffineRejection("multiplicities differ from the minimal imaginary root")
    weyl = f"{family[0]}{rank}"
    return AffineType(family, rank, delta, weyl)


def _connected(a: Matrix) -> bool:
    n = len(a)
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and j not in seen:
                seen.add(j)
                frontier.append(j)
    return len(seen) == n


def isotropic_decompositions(
    v: VarietyDescriptor, mode: str = STRICT
) -> list[IsotropicDecomposition]:
    """All isotropic decompositions of alpha, sorted deterministically.

    strict: imaginary parts pairwise distinct as vectors (the definition).
    permissive: repeated imaginary vectors allowed, which is exactly what
    codimension-two strata of alpha = 2*beta with p(beta) = 2 require.
    """
    if mode not in (STRICT, PERMISSIVE):
        raise ValueError(f"unknown mode {mode!r}")
    alpha_root = next((r for r in v.sigma if r.vector == v.alpha), None)
    if alpha_root is None:
        raise DomainError("alpha is not a Sigma element")
    if alpha_root.kind is RootKind.REAL:
        raise DomainError("alpha is a real root; no codimension-two leaves")
    p_alpha = alpha_root.p

    imag = [r for r in v.sigma if r.is_imaginary and r.vector != v.alpha]
    real = [r for r in v.sigma if r.kind is RootKind.REAL]
    zero = tuple(0 for _ in v.alpha)
    results = []

    def real_fill(idx: int, remaining: Vec, acc: list[tuple[int, RootInfo]], imag_acc):
        if remaining == zero:
            _try_accept(imag_acc, tuple(acc))
            return
        if idx == len(real):
            return
        real_fill(idx + 1, remaining, acc, imag_acc)
        root = real[idx]
        max_m = min((r // x for r, x in zip(remaining, root.vector) if x > 0), default=0)
        for m in range(1, max_m + 1):
            rem = tuple(r - m * x for r, x in zip(remaining, root.vector))
            acc.append((m, root))
            real_fill(idx + 1, rem, acc, imag_acc)
            acc.pop()

    def _try_accept(imag_parts: tuple[RootInfo, ...], real_parts):
        vecs = [r.vector for r in imag_parts] + [r.vector for _, r in real_parts]
        cartan, ok = build_cartan(vecs, v.quiver)
        if not ok:
            return
        mults = tuple([1] * len(imag_parts)) + tuple(m for m, _ in real_parts)
        try:
            affine = affine_classify(cartan, mults)
        except AffineRejection:
            return
        results.append(IsotropicDecomposition(imag_parts, real_parts, cartan, affine))

    def imag_fill(idx: int, remaining: Vec, budget: int, acc: list[RootInfo]):
        if budget == 0:
            real_fill(0, remaining, [], tuple(acc))
            return
        if idx == len(imag):
            return
        root = imag[idx]
        # skip this root entirely
        imag_fill(idx + 1, remaining, budget, acc)
        if root.p <= budget and all(x <= r for x, r in zip(root.vector, remaining)):
            rem = tuple(r - x for r, x in zip(remaining, root.vector))
            acc.append(root)
            if mode == PERMISSIVE:
                imag_fill(idx, rem, budget - root.p, acc)
            else:
                imag_fill(idx + 1, rem, budget - root.p, acc)
            acc.pop()

    # codimension two forces p(alpha) - sum p(imaginary parts) = 1
    imag_fill(0, v.alpha, p_alpha - 1, [])

    results.sort(
        key=lambda d: (
            tuple(r.vector for r in d.imag_parts),
            tuple((r.vector, m) for m, r in d.real_parts),
        )
    )
    return results


def codim2_leaves(
    v: VarietyDescriptor, mode: str = STRICT
) -> list[tuple[IsotropicDecomposition, Stratum]]:
    """Pair every isotropic decomposition with its stratum; codim must be 2."""
    out = []
    by_parts = {s.parts: s for s in v.strata}
    for dec in isotropic_decompositions(v, mode):
        stratum = by_parts.get(dec.stratum_parts())
        if stratum is None or stratum.codim != 2:
            raise InternalConsistencyError(
                "isotropic decomposition does not match a codimension-two stratum"
            )
        out.append((dec, stratum))
    return out


def namikawa_factors(v: VarietyDescriptor, mode: str = STRICT) -> list[str]:
    """One finite ADE Weyl label per codimension-two leaf, sorted."""
    return sorted(dec.affine.weyl_label for dec, _ in codim2_leaves(v, mode))


def modes_may_differ(v: VarietyDescriptor) -> bool:
    """True when alpha = 2*beta with p(beta) = 2 for some Sigma beta, the
    only pattern on which strict and permissive leaf sets can disagree."""
    if any(x % 2 for x in v.alpha):
        return False
    half = tuple(x // 2 for x in v.alpha)
    return any(r.vector == half and r.p == 2 for r in v.sigma)
