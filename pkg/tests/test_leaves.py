import pytest

from qsr import (
    DomainError,
    ParamSet,
    VarietyDescriptor,
    affine_classify,
    build_cartan,
    builtin,
    codim2_leaves,
    isotropic_decompositions,
    namikawa_factors,
)
from qsr.leaves import PERMISSIVE, STRICT, AffineRejection, modes_may_differ

from .cases import all_descriptors, descriptor


# -- affine Dynkin recognition --------------------------------------------


def _cycle_matrix(n):
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = 2
        row[(i + 1) % n] -= 1
        row[(i - 1) % n] -= 1
        rows.append(tuple(row))
    return tuple(rows)


def _tree_matrix(edges, n):
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        rows[i][j] = rows[j][i] = -1
    return tuple(tuple(r) for r in rows)


def test_affine_a1():
    a = ((2, -2), (-2, 2))
    t = affine_classify(a, (1, 1))
    assert (t.family, t.rank, t.delta, t.weyl_label) == ("A~", 1, (1, 1), "A1")


def test_affine_cycles():
    for n in (3, 4, 5):
        t = affine_classify(_cycle_matrix(n), (1,) * n)
        assert t.family == "A~" and t.rank == n - 1
        assert t.delta == (1,) * n


def test_affine_d4():
    a = _tree_matrix([(0, 1), (0, 2), (0, 3), (0, 4)], 5)
    t = affine_classify(a, (2, 1, 1, 1, 1))
    assert (t.family, t.rank, t.weyl_label) == ("D~", 4, "D4")
    assert t.delta == (2, 1, 1, 1, 1)


def test_affine_d5():
    # path 2-0-1-3 with extra leaves: two degree-3 nodes
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]
    a = _tree_matrix(edges, 6)
    t = affine_classify(a, (2, 2, 1, 1, 1, 1))
    assert (t.family, t.rank, t.weyl_label) == ("D~", 5, "D5")


def test_affine_e6():
    # center 0 with three branches of length 2
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
    a = _tree_matrix(edges, 7)
    t = affine_classify(a, (3, 2, 1, 2, 1, 2, 1))
    assert (t.family, t.rank, t.weyl_label) == ("E~", 6, "E6")


def test_affine_e7():
    # branch node 0: legs of length 1, 3, 3
    edges = [(0, 1), (0, 2), (2, 3), (3, 4), (0, 5), (5, 6), (6, 7)]
    a = _tree_matrix(edges, 8)
    t = affine_classify(a, (4, 2, 3, 2, 1, 3, 2, 1))
    assert (t.family, t.rank, t.weyl_label) == ("E~", 7, "E7")


def test_affine_e8():
    # branch node 0: legs of length 1, 2, 5
    edges = [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
    a = _tree_matrix(edges, 9)
    t = affine_classify(a, (6, 3, 4, 2, 5, 4, 3, 2, 1))
    assert (t.family, t.rank, t.weyl_label) == ("E~", 8, "E8")


def test_affine_rejections():
    # finite A2: no radical
    finite = ((2, -1), (-1, 2))
    with pytest.raises(AffineRejection) as err:
        affine_classify(finite, (1, 1))
    assert "radical" in err.value.reason

    # disconnected pair of affine A1 blocks
    disc = (
        (2, -2, 0, 0),
        (-2, 2, 0, 0),
        (0, 0, 2, -2),
        (0, 0, -2, 2),
    )
    with pytest.raises(AffineRejection) as err:
        affine_classify(disc, (1, 1, 1, 1))
    assert err.value.reason == "disconnected"

    # right diagram, wrong multiplicities
    a = _tree_matrix([(0, 1), (0, 2), (0, 3), (0, 4)], 5)
    with pytest.raises(AffineRejection) as err:
        affine_classify(a, (1, 1, 1, 1, 1))
    assert "multiplicities" in err.value.reason

    # triple edge is outside the catalog
    with pytest.raises(AffineRejection):
        affine_classify(((2, -3), (-3, 2)), (1, 1))


def test_build_cartan_flags_positive_offdiagonal():
    q = builtin("a2")
    _, ok = build_cartan([(1, 0), (0, 1)], q)
    assert ok
    _, ok2 = build_cartan([(1, 0), (1, 0)], q)
    assert not ok2


# -- decompositions on the corpus -----------------------------------------


def test_kleinian_leaves():
    expected = {
        "affa1-delta": ("A~1", "A1"),
        "affa2-delta": ("A~2", "A2"),
        "affd4-delta": ("D~4", "D4"),
    }
    for label, (aff, weyl) in expected.items():
        v = descriptor(label)
        pairs = codim2_leaves(v)
        assert len(pairs) == 1, label
        dec, stratum = pairs[0]
        assert dec.affine.label == aff
        assert dec.affine.weyl_label == weyl
        assert stratum.codim == 2
        assert namikawa_factors(v) == [weyl]


def test_generic_parameters_kill_leaves():
    v = descriptor("affa1-generic")
    assert [r.vector for r in v.sigma] == [(1, 1)]
    assert v.is_smooth()
    assert codim2_leaves(v) == []


def test_strict_vs_permissive_fires_only_on_2beta_p2():
    differing = []
    for label, v in all_descriptors():
        if v.is_empty():
            continue
        if not any(r.vector == v.alpha and r.is_imaginary for r in v.sigma):
            continue
        strict = isotropic_decompositions(v, STRICT)
        permissive = isotropic_decompositions(v, PERMISSIVE)
        if strict != permissive:
            differing.append(label)
            assert modes_may_differ(v), label
        codim2 = [s for s in v.strata if s.codim == 2]
        assert len(permissive) == len(codim2), label
    assert differing == ["jordan2-2"]


def test_jordan2_permissive_leaf():
    v = descriptor("jordan2-2")
    assert isotropic_decompositions(v, STRICT) == []
    perm = isotropic_decompositions(v, PERMISSIVE)
    assert len(perm) == 1
    dec = perm[0]
    assert [r.vector for r in dec.imag_parts] == [(1,), (1,)]
    assert dec.real_parts == ()
    assert dec.qpp_cartan == ((2, -2), (-2, 2))
    assert dec.affine.label == "A~1"


def test_alpha_outside_sigma_rejected():
    v = descriptor("affa1-2delta")
    with pytest.raises(DomainError):
        isotropic_decompositions(v)
    real = VarietyDescriptor(builtin("a2"), (1, 1), ParamSet.zero(2))
    with pytest.raises(DomainError):
        isotropic_decompositions(real)
