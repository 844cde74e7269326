"""Generator and falsification-search behavior."""

import pytest

from helpers import quadric_mixed_pair

from orthopair.classify import (
    NULL,
    QUASI_STANDARD,
    STANDARD,
    UNRESOLVED,
    check_standard,
    classify,
    verify_quasi_standard,
)
from orthopair.hermspace import Signature, orthogonal_complement
from orthopair.linalg import identity, inverse, mat_mul
from orthopair.mappair import is_orthogonal, pairing_polynomial, project_pair, source_form
from orthopair.poly import MPoly, exact_div
from orthopair.scalar import ONE, gr
from orthopair.spanlab import image_span
from orthopair.hermspace import nondegenerate_part
from orthopair.workbench import (
    CANCELLING,
    NULL_BLOCK,
    NULL_CONSTRUCTION,
    ONE_SIDED,
    QUASI_STANDARD_CONSTRUCTION,
    SPAN_GAP_CONSTRUCTION,
    SPLIT,
    STANDARD_CONSTRUCTION,
    GeneratorSpec,
    falsify,
    generate,
    span_gap_pair,
    within_reduction_bound,
)


# --- exact matrix inverse -------------------------------------------------


def test_inverse_roundtrip():
    m = [[gr(2), gr(1), gr(0)], [gr(0, 1), gr(1), gr(3)], [gr(1), gr(0), gr(1, 1)]]
    assert mat_mul(m, inverse(m)) == identity(3)
    assert mat_mul(inverse(m), m) == identity(3)


def test_inverse_rejects_singular():
    with pytest.raises(ValueError, match="singular"):
        inverse([[gr(1), gr(2)], [gr(2), gr(4)]])


# --- spec validation ------------------------------------------------------


def test_spec_rejects_unknown_construction():
    with pytest.raises(ValueError, match="unknown construction"):
        GeneratorSpec(Signature(1, 1), Signature(1, 1), "bogus")


def test_spec_standard_needs_matching_signature():
    with pytest.raises(ValueError, match="incompatible"):
        GeneratorSpec(Signature(1, 1), Signature(1, 2), STANDARD_CONSTRUCTION)


def test_spec_quasi_needs_containment():
    with pytest.raises(ValueError, match="incompatible"):
        GeneratorSpec(Signature(2, 2), Signature(1, 2, 3), QUASI_STANDARD_CONSTRUCTION)


def test_spec_quasi_needs_room_outside_core():
    with pytest.raises(ValueError, match="room outside"):
        GeneratorSpec(Signature(1, 2), Signature(1, 2), QUASI_STANDARD_CONSTRUCTION)


def test_spec_split_needs_two_extra_coordinates():
    with pytest.raises(ValueError, match="split"):
        GeneratorSpec(
            Signature(1, 1),
            Signature(1, 2),
            QUASI_STANDARD_CONSTRUCTION,
            variant=SPLIT,
        )


def test_spec_null_variant_requirements():
    with pytest.raises(ValueError, match="cancelling"):
        GeneratorSpec(
            Signature(1, 1), Signature(0, 0, 2), NULL_CONSTRUCTION, variant=CANCELLING
        )
    with pytest.raises(ValueError, match="null-block"):
        GeneratorSpec(
            Signature(1, 1), Signature(1, 1), NULL_CONSTRUCTION, variant=NULL_BLOCK
        )


def test_spec_span_gap_signature_is_fixed():
    with pytest.raises(ValueError, match="incompatible"):
        GeneratorSpec(Signature(1, 1), Signature(1, 1), SPAN_GAP_CONSTRUCTION)


def test_spec_rejects_bad_phi_degree():
    with pytest.raises(ValueError, match="phi_degree"):
        GeneratorSpec(
            Signature(1, 1), Signature(2, 2), QUASI_STANDARD_CONSTRUCTION, phi_degree=0
        )


def test_spec_is_immutable():
    spec = GeneratorSpec(Signature(1, 1), Signature(1, 1), STANDARD_CONSTRUCTION)
    with pytest.raises(AttributeError):
        spec.seed = 3


# --- standard construction ------------------------------------------------


def test_generate_standard_has_exact_factor():
    spec = GeneratorSpec(Signature(2, 1), Signature(2, 1), STANDARD_CONSTRUCTION, seed=3)
    inst = generate(spec)
    assert inst.expected_tag == STANDARD
    outcome = classify(inst.pair)
    assert outcome.tag == STANDARD
    assert outcome.witness.factor == inst.witness.factor


def test_generate_standard_with_null_block_junk():
    spec = GeneratorSpec(Signature(1, 2), Signature(1, 2, 2), STANDARD_CONSTRUCTION, seed=9)
    inst = generate(spec)
    assert classify(inst.pair).tag == STANDARD
    assert is_orthogonal(inst.pair).orthogonal


def test_generate_is_deterministic():
    spec = lambda seed: GeneratorSpec(
        Signature(1, 2), Signature(1, 2, 1), QUASI_STANDARD_CONSTRUCTION, seed=seed
    )
    a, b, c = generate(spec(5)), generate(spec(5)), generate(spec(6))
    assert a.pair.f1 == b.pair.f1 and a.pair.f2 == b.pair.f2
    assert a.pair.f1 != c.pair.f1 or a.pair.f2 != c.pair.f2


# --- quasi-standard construction ------------------------------------------


def test_generate_quasi_one_sided():
    spec = GeneratorSpec(
        Signature(1, 1), Signature(2, 2), QUASI_STANDARD_CONSTRUCTION, seed=7
    )
    inst = generate(spec)
    assert inst.expected_tag == QUASI_STANDARD
    w = inst.witness
    assert w.scenario in (1, 2)
    assert verify_quasi_standard(inst.pair, w)
    assert classify(inst.pair).tag == QUASI_STANDARD


def test_generate_quasi_one_sided_keeps_second_map_in_core():
    spec = GeneratorSpec(
        Signature(1, 2),
        Signature(1, 2, 2),
        QUASI_STANDARD_CONSTRUCTION,
        seed=4,
        phi_degree=2,
        variant=ONE_SIDED,
    )
    inst = generate(spec)
    w = inst.witness
    assert w.scenario == 1 and w.contained_map == 2
    assert verify_quasi_standard(inst.pair, w)
    assert classify(inst.pair).tag == QUASI_STANDARD


def test_generate_quasi_split_is_scenario_two():
    spec = GeneratorSpec(
        Signature(1, 2),
        Signature(2, 3),
        QUASI_STANDARD_CONSTRUCTION,
        seed=11,
        variant=SPLIT,
    )
    inst = generate(spec)
    w = inst.witness
    assert w.scenario == 2
    assert w.b.same_span_as(orthogonal_complement(w.a))
    assert verify_quasi_standard(inst.pair, w)
    assert classify(inst.pair).tag == QUASI_STANDARD


def test_generate_quasi_extracts_the_requested_degree():
    spec = GeneratorSpec(
        Signature(1, 1), Signature(1, 1, 1), QUASI_STANDARD_CONSTRUCTION,
        seed=2, phi_degree=3,
    )
    inst = generate(spec)
    assert inst.witness.extracted[0].total_degree() == 3
    assert classify(inst.pair).tag == QUASI_STANDARD


# --- null construction ----------------------------------------------------


@pytest.mark.parametrize(
    "target,variant",
    [
        (Signature(1, 2), ONE_SIDED),
        (Signature(2, 2, 1), CANCELLING),
        (Signature(1, 1, 2), NULL_BLOCK),
    ],
)
def test_generate_null_pairing_is_exactly_zero(target, variant):
    spec = GeneratorSpec(Signature(1, 2), target, NULL_CONSTRUCTION, seed=1, variant=variant)
    inst = generate(spec)
    assert inst.expected_tag == NULL
    assert pairing_polynomial(inst.pair).is_zero()


# --- the span-gap example -------------------------------------------------


def test_span_gap_pair_matches_fixture():
    pair = span_gap_pair()
    fixture = quadric_mixed_pair()
    assert pair.f1 == fixture.f1 and pair.f2 == fixture.f2


def test_span_gap_pair_is_orthogonal_with_linear_quotient():
    pair = span_gap_pair()
    assert is_orthogonal(pair).orthogonal
    quotient = exact_div(pairing_polynomial(pair).g, source_form(pair))
    expected = MPoly(
        8, {tuple(1 if k in (i, 4 + i) else 0 for k in range(8)): ONE for i in range(4)}
    )
    assert quotient == expected


def test_span_gap_image_span_is_degenerate():
    pair = span_gap_pair()
    span = image_span(pair.f1, pair.target)
    assert span.dim == 6
    assert span.restricted_signature == Signature(2, 3, 1)


def test_span_gap_nondegenerate_projection_loses_orthogonality():
    pair = span_gap_pair()
    core = nondegenerate_part(image_span(pair.f1, pair.target))
    assert core.dim == 5
    projected = project_pair(pair, core)
    assert not is_orthogonal(projected).orthogonal


def test_span_gap_classifies_unresolved():
    inst = generate(
        GeneratorSpec(Signature(2, 2), Signature(3, 4), SPAN_GAP_CONSTRUCTION)
    )
    outcome = classify(inst.pair)
    assert outcome.tag == UNRESOLVED
    assert outcome.tag not in (STANDARD, QUASI_STANDARD, NULL)


# --- falsification search -------------------------------------------------


def test_within_reduction_bound_values():
    assert within_reduction_bound(Signature(1, 2), Signature(1, 2))
    assert within_reduction_bound(Signature(2, 2), Signature(2, 3))
    assert not within_reduction_bound(Signature(1, 1), Signature(1, 1))
    assert not within_reduction_bound(Signature(2, 2), Signature(3, 4))


def test_falsify_small_region_is_clean():
    report = falsify(Signature(1, 1), Signature(1, 1), 1, 10**6)
    assert not report.exhausted
    assert report.orthogonal_count > 0
    assert report.null_count > 0
    assert report.candidates_tested > 0
    assert report.violations == ()
    for pair, tag in report.findings:
        assert is_orthogonal(pair).orthogonal
        assert tag == classify(pair).tag


def test_falsify_budget_exhaustion_is_reported():
    report = falsify(Signature(1, 1), Signature(1, 1), 1, 10)
    assert report.exhausted
    assert report.candidates_tested == 10


def test_falsify_empty_region_returns_empty_report():
    report = falsify(Signature(1, 2), Signature(1, 2), 0, 1000)
    assert report.candidates_tested == 0
    assert report.orthogonal_count == 0
    assert report.findings == () and report.violations == ()
    assert not report.exhausted


def test_falsify_is_deterministic():
    a = falsify(Signature(1, 1), Signature(1, 1), 1, 10**6)
    b = falsify(Signature(1, 1), Signature(1, 1), 1, 10**6)
    assert a.candidates_tested == b.candidates_tested
    assert a.orthogonal_count == b.orthogonal_count
    assert a.null_count == b.null_count
    assert a.tag_counts == b.tag_counts
    assert [(p.f1, p.f2, t) for p, t in a.findings] == [
        (p.f1, p.f2, t) for p, t in b.findings
    ]


def test_falsify_rational_fills_stay_clean():
    plain = falsify(Signature(1, 1), Signature(1, 1), 1, 10**6)
    filled = falsify(Signature(1, 1), Signature(1, 1), 1, 10**6, rational_fills=1)
    assert filled.candidates_tested > plain.candidates_tested
    assert filled.violations == ()


def test_falsify_fixed_supports_kernel_path():
    supports = (((1, 0, 0), (0, 1, 0), (0, 0, 1)),) * 2
    report = falsify(Signature(1, 2), Signature(1, 2), 1, 10**6, supports=supports)
    assert report.in_hypothesis
    assert report.orthogonal_count > 0
    assert report.violations == ()
    assert STANDARD in report.tag_counts
    for pair, tag in report.findings:
        assert is_orthogonal(pair).orthogonal


def test_falsify_rejects_degenerate_source():
    with pytest.raises(ValueError, match="non-degenerate"):
        falsify(Signature(1, 1, 1), Signature(1, 1), 1, 100)


def test_falsify_rejects_zero_coefficients():
    with pytest.raises(ValueError, match="nonzero"):
        falsify(Signature(1, 1), Signature(1, 1), 1, 100, coefficients=(gr(0), gr(1)))


def test_falsify_report_documents_family():
    report = falsify(Signature(1, 1), Signature(1, 1), 1, 100)
    assert "monomial" in report.family
    assert report.seed == 0
    assert report.degree_bound == 1
