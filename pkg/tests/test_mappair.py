"""Map pairs: pairing polynomials, orthogonality verdicts, projections."""

import pytest
from hypothesis import given, settings, strategies as st

from helpers import (
    identity_pair,
    linear_quadratic_pair,
    null_pair,
    quadric_mixed_pair,
    scaled_identity_pair,
    truncated_quadric_pair,
    v,
    zero,
)
from orthopair.hermspace import (
    Signature,
    Subspace,
    nondegenerate_part,
    orthogonal_complement,
)
from orthopair.mappair import (
    MapPair,
    drop_null_target_coordinates,
    is_orthogonal,
    null_form_points,
    pairing_polynomial,
    project_pair,
    projection_pairing,
    source_form,
)
from orthopair.poly import MPoly, divides, reduce_mod
from orthopair.scalar import gr


def e(i, n):
    out = [0] * n
    out[i] = 1
    return out


# --- pairing polynomial ---------------------------------------------------


def test_pairing_identity_pair():
    g = pairing_polynomial(identity_pair(1, 1)).g
    expect = MPoly(4, {(1, 0, 1, 0): gr(1), (0, 1, 0, 1): gr(-1)})
    assert g == expect


def test_pairing_null_pair():
    assert pairing_polynomial(null_pair()).is_zero()


def test_pairing_quadric_pair_factors():
    g = pairing_polynomial(quadric_mixed_pair()).g
    z = [MPoly.variable(8, i) for i in range(4)]
    xi = [MPoly.variable(8, i) for i in range(4, 8)]
    x = z[0] * xi[0] + z[1] * xi[1]
    y = z[2] * xi[2] + z[3] * xi[3]
    assert g == x * x - y * y


def test_pairing_bidegree():
    p = pairing_polynomial(linear_quadratic_pair())
    assert p.bidegree == (1, 2)


def test_pairing_conjugates_second_map():
    sig = Signature(1, 0, 0)
    f = [v(1, 0).scale(gr(0, 1))]  # i z
    pair = MapPair(sig, sig, f, f)
    g = pairing_polynomial(pair).g
    # i * conj(i) = 1
    assert g == MPoly(2, {(1, 1): gr(1)})


@settings(max_examples=30)
@given(
    st.builds(
        gr,
        st.fractions(min_value=-4, max_value=4, max_denominator=3),
        st.fractions(min_value=-4, max_value=4, max_denominator=3),
    )
)
def test_pairing_scales_linearly_in_first_map(c):
    if c.is_zero():
        return
    base = pairing_polynomial(scaled_identity_pair(1, 1)).g
    scaled = pairing_polynomial(
        MapPair(
            Signature(1, 1, 0),
            Signature(1, 1, 0),
            [v(2, 0).scale(c), v(2, 1).scale(c)],
            [v(2, 0), v(2, 1)],
        )
    ).g
    assert scaled == base.scale(c)


def test_pairing_conjugate_linear_in_second_map():
    c = gr(2, 3)
    base = pairing_polynomial(scaled_identity_pair(1, 1)).g
    scaled = pairing_polynomial(
        MapPair(
            Signature(1, 1, 0),
            Signature(1, 1, 0),
            [v(2, 0), v(2, 1)],
            [v(2, 0).scale(c), v(2, 1).scale(c)],
        )
    ).g
    assert scaled == base.scale(c.conj())


# --- source form ----------------------------------------------------------


def test_source_form_balanced():
    b = source_form(identity_pair(1, 1))
    assert b == MPoly(4, {(1, 0, 1, 0): gr(1), (0, 1, 0, 1): gr(-1)})


def test_source_form_wide():
    b = source_form(Signature(2, 2, 0))
    assert b == MPoly(
        8,
        {
            (1, 0, 0, 0, 1, 0, 0, 0): gr(1),
            (0, 1, 0, 0, 0, 1, 0, 0): gr(1),
            (0, 0, 1, 0, 0, 0, 1, 0): gr(-1),
            (0, 0, 0, 1, 0, 0, 0, 1): gr(-1),
        },
    )


def test_source_form_degenerate_source():
    b = source_form(Signature(1, 0, 1))
    assert b == MPoly(4, {(1, 0, 1, 0): gr(1)})


def test_source_form_vacuous():
    with pytest.raises(ValueError, match="vacuous source form"):
        source_form(Signature(0, 0, 2))


# --- validation -----------------------------------------------------------


def test_mappair_rejects_wrong_component_count():
    with pytest.raises(ValueError, match="components"):
        MapPair(Signature(1, 1, 0), Signature(1, 1, 0), [v(2, 0)], [v(2, 0), v(2, 1)])


def test_mappair_rejects_mixed_degrees():
    with pytest.raises(ValueError, match="mix degrees"):
        MapPair(
            Signature(1, 1, 0),
            Signature(1, 1, 0),
            [v(2, 0), v(2, 0) * v(2, 1)],
            [v(2, 0), v(2, 1)],
        )


def test_mappair_rejects_all_zero_tuple():
    with pytest.raises(ValueError, match="no nonzero component"):
        MapPair(
            Signature(1, 1, 0), Signature(1, 1, 0), [zero(2), zero(2)], [v(2, 0), v(2, 1)]
        )


def test_mappair_rejects_inhomogeneous_component():
    with pytest.raises(ValueError, match="non-homogeneous"):
        MapPair(
            Signature(1, 1, 0),
            Signature(1, 1, 0),
            [v(2, 0) + MPoly.constant(2, 1), v(2, 1)],
            [v(2, 0), v(2, 1)],
        )


def test_mappair_rejects_wrong_arity():
    with pytest.raises(ValueError, match="variables"):
        MapPair(
            Signature(1, 1, 0), Signature(1, 1, 0), [v(3, 0), v(3, 1)], [v(2, 0), v(2, 1)]
        )


def test_mappair_allows_different_degrees():
    pair = linear_quadratic_pair()
    assert pair.degree1 == 1
    assert pair.degree2 == 2


# --- orthogonality --------------------------------------------------------


def test_quadric_pair_is_orthogonal_with_linear_quotient():
    pair = quadric_mixed_pair()
    verdict = is_orthogonal(pair)
    assert verdict.orthogonal
    b = source_form(pair)
    g = pairing_polynomial(pair).g
    q, r = reduce_mod(g, b)
    assert r.is_zero()
    z = [MPoly.variable(8, i) for i in range(4)]
    xi = [MPoly.variable(8, i) for i in range(4, 8)]
    assert q == z[0] * xi[0] + z[1] * xi[1] + z[2] * xi[2] + z[3] * xi[3]


def test_linear_quadratic_pair_is_orthogonal():
    verdict = is_orthogonal(linear_quadratic_pair())
    assert verdict.orthogonal


def test_identity_pairs_are_orthogonal():
    for r, s in ((1, 1), (2, 1), (2, 2)):
        assert is_orthogonal(identity_pair(r, s)).orthogonal


def test_truncated_quadric_pair_is_not_orthogonal():
    pair = truncated_quadric_pair()
    verdict = is_orthogonal(pair)
    assert not verdict.orthogonal
    z, xi = verdict.witness
    b = source_form(pair)
    g = pairing_polynomial(pair).g
    point = list(z) + list(xi)
    assert b.evaluate(point).is_zero()
    assert not g.evaluate(point).is_zero()


def test_truncated_quadric_named_witness_point():
    # the hand-checked witness: source form zero, pairing equal to two
    pair = truncated_quadric_pair()
    g = pairing_polynomial(pair).g
    b = source_form(pair)
    point = [gr(1), gr(1), gr(0), gr(0), gr(1), gr(-1), gr(0), gr(0)]
    assert b.evaluate(point).is_zero()
    assert g.evaluate(point) == gr(2)


def test_definite_source_is_flagged():
    sig = Signature(2, 0, 0)
    pair = MapPair(sig, sig, [v(2, 0), v(2, 1)], [v(2, 0), v(2, 1)])
    verdict = is_orthogonal(pair)
    assert verdict.orthogonal
    assert verdict.note is not None and "definite" in verdict.note


def test_indefinite_source_is_not_flagged():
    assert is_orthogonal(identity_pair(1, 1)).note is None


def test_null_form_points_cover_both_branches_for_rank_one():
    source = Signature(1, 0, 1)
    pts = null_form_points(source, 10, seed=3)
    b = source_form(source)
    saw_z_zero = saw_xi_zero = False
    for z, xi in pts:
        assert b.evaluate(list(z) + list(xi)).is_zero()
        if z[0].is_zero():
            saw_z_zero = True
        if xi[0].is_zero():
            saw_xi_zero = True
    assert saw_z_zero and saw_xi_zero


def test_orthogonality_agrees_with_sampling():
    for pair, expected in (
        (quadric_mixed_pair(), True),
        (truncated_quadric_pair(), False),
    ):
        g = pairing_polynomial(pair).g
        verdict = is_orthogonal(pair)
        assert verdict.orthogonal is expected
        vanishing = []
        for z, xi in null_form_points(pair.source, 100, seed=17):
            vanishing.append(g.evaluate(list(z) + list(xi)).is_zero())
        if expected:
            assert all(vanishing)
        else:
            assert not all(vanishing)


# --- projections ----------------------------------------------------------


def test_project_linear_quadratic_pair_onto_positive_negative_plane():
    pair = linear_quadratic_pair()
    plane = Subspace(pair.target, [e(0, 4), e(2, 4)])
    projected = project_pair(pair, plane)
    assert projected.target == Signature(1, 1, 0)
    assert projected.f1 == (v(2, 0), v(2, 1))
    assert projected.f2 == (v(2, 0), v(2, 1))


def test_project_onto_whole_target_is_normalization_only():
    pair = quadric_mixed_pair()
    whole = Subspace.whole(pair.target)
    projected = project_pair(pair, whole)
    assert projected.f1 == pair.f1
    assert projected.f2 == pair.f2
    assert projected.target == pair.target


def test_project_drops_null_directions_of_mixed_span():
    pair = quadric_mixed_pair()
    span = Subspace(
        pair.target,
        [e(0, 7), e(1, 7), [0, 0, 1, 0, 0, 0, 1], e(3, 7), e(4, 7), e(5, 7)],
    )
    core = nondegenerate_part(span)
    projected = project_pair(pair, core)
    truncated = truncated_quadric_pair()
    assert projected.target == truncated.target
    assert projected.f1 == truncated.f1
    assert projected.f2 == truncated.f2


def test_project_rejects_degenerate_subspace():
    pair = identity_pair(1, 1)
    null_line = Subspace(pair.target, [[1, 1]])
    with pytest.raises(ValueError, match="degenerate"):
        project_pair(pair, null_line)


def test_project_rejects_indeterminacy_locus():
    pair = linear_quadratic_pair()
    other_plane = Subspace(pair.target, [e(1, 4), e(3, 4)])
    with pytest.raises(ValueError, match="f1 projects to zero"):
        project_pair(pair, other_plane)


def test_project_rejects_foreign_subspace():
    pair = identity_pair(1, 1)
    s = Subspace(Signature(2, 1, 0), [e(0, 3)])
    with pytest.raises(ValueError, match="different space"):
        project_pair(pair, s)


def test_projection_presentation_preserves_pairing():
    # across an orthogonal decomposition of the target the two projected
    # pairings must add up to the original pairing exactly; this pins the
    # asymmetric rescaling in the projected presentation
    pair = identity_pair(2, 2)
    a = Subspace(pair.target, [[1, 0, 2, 0], [0, 1, 0, 0]])
    b = orthogonal_complement(a)
    g = pairing_polynomial(pair).g
    g_a = pairing_polynomial(project_pair(pair, a)).g
    g_b = pairing_polynomial(project_pair(pair, b)).g
    assert g_a + g_b == g


def test_projection_pairing_matches_projected_pair():
    pair = identity_pair(2, 2)
    a = Subspace(pair.target, [[1, 0, 2, 0], [0, 1, 0, 0]])
    raw = project_pair(pair, a, normalize=False)
    assert projection_pairing(pair, a) == pairing_polynomial(raw).g


def test_projection_pairing_additivity():
    for pair in (quadric_mixed_pair(), linear_quadratic_pair()):
        a = Subspace(pair.target, [[1 if j == 0 else 0 for j in range(pair.target.n)]])
        b = orthogonal_complement(a)
        g = pairing_polynomial(pair).g
        assert projection_pairing(pair, a) + projection_pairing(pair, b) == g


def test_projection_pairing_accepts_one_sided_zero_image():
    # null pair supported on complementary blocks: project_pair rejects
    # the indeterminate side but the pairing of the projection is still
    # well defined and zero
    pair = null_pair()
    a = Subspace(pair.target, [[1, 0, 0, 0], [0, 1, 0, 0]])
    with pytest.raises(ValueError, match="indeterminacy"):
        project_pair(pair, a)
    assert projection_pairing(pair, a).is_zero()


def test_unnormalized_projection_keeps_common_factors():
    pair = linear_quadratic_pair()
    a = Subspace(pair.target, [[1, 0, 0, 0], [0, 0, 1, 0]])
    raw = project_pair(pair, a, normalize=False)
    z1, z2 = v(2, 0), v(2, 1)
    assert raw.f2 == (z1 * z1, z1 * z2)
    normalized = project_pair(pair, a)
    assert normalized.f2 == (z1, z2)


def test_complementary_projections_of_orthogonal_pair():
    # an orthogonal pair stays orthogonal after projecting onto one side
    # of an orthogonal decomposition exactly when it does on the other
    pair = identity_pair(2, 2)
    a = Subspace(pair.target, [[1, 0, 2, 0]])
    b = orthogonal_complement(a)
    pa = project_pair(pair, a)
    pb = project_pair(pair, b)
    assert is_orthogonal(pair).orthogonal
    assert is_orthogonal(pa).orthogonal == is_orthogonal(pb).orthogonal


def test_drop_null_target_coordinates_preserves_verdict():
    base = linear_quadratic_pair()
    padded = MapPair(
        base.source,
        Signature(2, 2, 1),
        list(base.f1) + [v(2, 0)],
        list(base.f2) + [v(2, 0) * v(2, 1)],
    )
    dropped = drop_null_target_coordinates(padded)
    assert dropped.target == base.target
    assert is_orthogonal(padded).orthogonal == is_orthogonal(dropped).orthogonal


def test_drop_null_target_coordinates_identity_when_absent():
    pair = identity_pair(1, 1)
    assert drop_null_target_coordinates(pair) is pair
