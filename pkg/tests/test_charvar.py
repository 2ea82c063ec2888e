import pytest

from qsr import (
    SurfaceVariety,
    builtin,
    char_as_quiver,
    dimension_char,
    local_quiver_char,
    p_value,
    resolution_verdict_char,
    singular_components_char,
    strata_char,
)
from qsr.charvar import GL, SL, weighted_partitions


def test_dimensions():
    assert dimension_char(SurfaceVariety(2, 2, SL)) == 6
    assert dimension_char(SurfaceVariety(2, 2, GL)) == 10
    assert dimension_char(SurfaceVariety(3, 1, SL)) == 4
    assert dimension_char(SurfaceVariety(3, 1, GL)) == 6
    for n in range(1, 5):
        for g in range(2, 5):
            assert dimension_char(SurfaceVariety(n, g, SL)) == 2 * (g - 1) * (
                n * n - 1
            )


def test_bundle_relation():
    for n in range(1, 6):
        for g in range(1, 6):
            gl = dimension_char(SurfaceVariety(n, g, GL))
            sl = dimension_char(SurfaceVariety(n, g, SL))
            assert gl - sl == 2 * g


def test_weighted_partitions_of_2():
    parts = weighted_partitions(2)
    assert sorted(parts) == sorted([((1, 1), (1, 1)), ((2, 1),), ((1, 2),)])


def test_strata_2_2():
    rows = strata_char(SurfaceVariety(2, 2, GL))
    assert {dim for _, dim, _ in rows} == {10, 8, 4}
    assert {codim for _, _, codim in rows} == {0, 2, 6}
    by_nu = {nu: (dim, codim) for nu, dim, codim in rows}
    assert by_nu[((1, 2),)] == (10, 0)
    assert by_nu[((1, 1), (1, 1))] == (8, 2)
    assert by_nu[((2, 1),)] == (4, 6)


def test_strata_genus_one():
    rows = strata_char(SurfaceVariety(2, 1, GL))
    assert {nu: dim for nu, dim, _ in rows} == {
        ((1, 1), (1, 1)): 4,
        ((2, 1),): 2,
    }


def test_strata_2_3():
    rows = strata_char(SurfaceVariety(2, 3, GL))
    by_nu = dict((nu, dim) for nu, dim, _ in rows)
    assert by_nu[((1, 1), (1, 1))] == 12


def test_strata_require_gl():
    with pytest.raises(ValueError):
        strata_char(SurfaceVariety(2, 2, SL))


def test_singular_components():
    assert singular_components_char(SurfaceVariety(4, 2, GL)) == [1, 2]
    assert singular_components_char(SurfaceVariety(2, 3, SL)) == [1]
    assert singular_components_char(SurfaceVariety(1, 4, GL)) == []
    assert singular_components_char(SurfaceVariety(3, 1, GL)) == [1]
    assert singular_components_char(SurfaceVariety(1, 1, GL)) == []


def test_local_quiver_trivial_rep():
    lq, e = local_quiver_char(2, ((2, 1),))
    assert lq == builtin("jordan2") and e == (2,)
    lq1, e1 = local_quiver_char(1, ((3, 1),))
    assert lq1 == builtin("jordan1") and e1 == (3,)


def test_local_quiver_two_parts():
    lq, e = local_quiver_char(2, ((1, 1), (1, 1)))
    assert lq.vertices == 2 and e == (1, 1)
    assert lq.loop_count(0) == 2 and lq.loop_count(1) == 2
    assert lq.edge_count(0, 1) == 2


def test_local_quiver_arrow_counts_structural():
    for g in (1, 2, 3):
        nu = ((1, 1), (2, 2), (1, 3))
        lq, e = local_quiver_char(g, nu)
        assert e == (1, 2, 1)
        for i, (_, vi) in enumerate(nu):
            assert lq.loop_count(i) == (g - 1) * vi * vi + 1
            for j in range(i + 1, len(nu)):
                assert lq.edge_count(i, j) == (2 * g - 2) * vi * nu[j][1]


def test_verdicts():
    assert resolution_verdict_char(SurfaceVariety(2, 2, SL)) == {
        "resolvable": True,
        "method": "blowup",
    }
    assert resolution_verdict_char(SurfaceVariety(2, 3, SL))["resolvable"] is False
    assert resolution_verdict_char(SurfaceVariety(3, 1, GL)) == {
        "resolvable": True,
        "method": "hilbert-scheme",
    }
    assert resolution_verdict_char(SurfaceVariety(1, 5, SL))["resolvable"] is True


def test_char_as_quiver_examples():
    v = char_as_quiver(2, 2)
    assert v.quiver == builtin("jordan2") and v.alpha == (2,)
    assert char_as_quiver(3, 1).dimension() == 6
    assert char_as_quiver(1, 4).dimension() == 8


def test_tangent_cone_consistency():
    # GL dimension equals the one-vertex quiver dimension, and stratum dims
    # agree part-for-part with the quiver stratification
    for n in range(1, 5):
        for g in range(2, 4):
            s = SurfaceVariety(n, g, GL)
            v = char_as_quiver(n, g)
            assert dimension_char(s) == v.dimension()
            char_rows = {
                tuple(sorted((l, vv) for l, vv in nu)): dim
                for nu, dim, _ in strata_char(s)
            }
            quiver_rows = {
                tuple(sorted((e, r.vector[0]) for e, r in st.parts)): st.dim
                for st in v.strata
            }
            assert char_rows == quiver_rows, (n, g)


def test_verdict_consistency_with_quiver_model():
    for n in range(1, 6):
        for g in range(1, 6):
            char = resolution_verdict_char(SurfaceVariety(n, g, GL))
            quiver = char_as_quiver(n, g).resolution_verdict()
            assert char["resolvable"] == quiver.resolvable, (n, g)


def test_p_transport_via_local_quiver():
    # stratum dims of the character variety equal 2p of the local data
    for n in range(1, 4):
        for g in (2, 3):
            s = SurfaceVariety(n, g, GL)
            for nu, dim, _ in strata_char(s):
                lq, e = local_quiver_char(g, nu)
                assert p_value(lq, e) == dimension_char(s) // 2


def test_invalid_inputs():
    with pytest.raises(ValueError):
        SurfaceVariety(0, 2)
    with pytest.raises(ValueError):
        SurfaceVariety(2, 2, "PGL")
    with pytest.raises(ValueError):
        local_quiver_char(2, ())
