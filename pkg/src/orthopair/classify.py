"""Classification of orthogonal map pairs.

The possible verdicts: not orthogonal (with a witness point pair), null
(pairing polynomial identically zero), standard (both maps linear up to
a common polynomial factor, conformal, and jointly filling the target
modulo its weight-zero block), quasi-standard (conformal on a
non-degenerate subspace of the target, null on its complement), or an
honest "unresolved" carrying the hypothesis that failed.

The search walks down a chain of projections driven by the coefficient
spans of the two maps; the witness it assembles is then re-verified from
scratch against the original pair, so a returned classification never
depends on the search being right.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from orthopair.hermspace import (
    Signature,
    Subspace,
    congruence_diagonalize,
    orthogonal_complement,
)
from orthopair.linalg import rank, rref
from orthopair.mappair import (
    MapPair,
    drop_null_target_coordinates,
    is_orthogonal,
    pairing_polynomial,
    project_pair,
    projection_pairing,
    source_form,
)
from orthopair.poly import MPoly, divides, tuple_gcd
from orthopair.scalar import GaussianRational, ONE, ZERO, gr
from orthopair.spanlab import coefficient_vectors

NOT_ORTHOGONAL = "not-orthogonal"
NULL = "null"
STANDARD = "standard"
QUASI_STANDARD = "quasi-standard"
UNRESOLVED = "unresolved"

_TAGS = (NOT_ORTHOGONAL, NULL, STANDARD, QUASI_STANDARD, UNRESOLVED)


class MalformedWitnessError(ValueError):
    """A witness whose shape prevents verification from even starting,
    as opposed to one that verifies to false."""


class ConformalWitness:
    """Coefficient matrices of a linear map pair together with the factor
    by which the target form pulls back to the source form.

    Rows of each matrix list the linear coefficients of one component;
    the certified identity is conj-transpose(a1) * target form * a2 =
    factor * source form, with a nonzero factor.
    """

    __slots__ = ("source", "target", "a1", "a2", "factor")

    def __init__(self, source: Signature, target: Signature, a1, a2, factor):
        a1 = tuple(tuple(row) for row in a1)
        a2 = tuple(tuple(row) for row in a2)
        for name, m in (("a1", a1), ("a2", a2)):
            if len(m) != target.n or any(len(row) != source.n for row in m):
                raise MalformedWitnessError(
                    f"{name} must have one row per target coordinate and one"
                    " column per source coordinate"
                )
        if not isinstance(factor, GaussianRational):
            raise MalformedWitnessError("the conformal factor must be a scalar")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "factor", factor)

    def __setattr__(self, name, value):
        raise AttributeError("ConformalWitness is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConformalWitness):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.a1 == other.a1
            and self.a2 == other.a2
            and self.factor == other.factor
        )

    def __repr__(self) -> str:
        return (
            f"ConformalWitness(source={self.source!r}, target={self.target!r},"
            f" factor={self.factor!r})"
        )


class QuasiStandardWitness:
    """A non-degenerate subspace of the target carrying the conformal
    part of the pair, plus the data tying the pair to it.

    scenario 1: one map's coefficient vectors lie inside the subspace
    (its complement coordinates vanish identically); contained_map names
    the side.  scenario 2: the complement (stored in b) receives both
    maps but contributes nothing to the pairing.  In both scenarios the
    projection onto the subspace factors as a common polynomial times a
    linear tuple per side (the factors are stored in extracted) and the
    linear tuples form a conformal pair.
    """

    __slots__ = ("scenario", "a", "b", "conformal", "extracted", "contained_map")

    def __init__(
        self,
        scenario: int,
        a: Subspace,
        conformal: ConformalWitness,
        extracted: Tuple[MPoly, MPoly],
        b: Optional[Subspace] = None,
        contained_map: Optional[int] = None,
    ):
        if scenario not in (1, 2):
            raise MalformedWitnessError("scenario must be 1 or 2")
        if contained_map not in (None, 1, 2):
            raise MalformedWitnessError("contained_map must be 1 or 2 when given")
        extracted = tuple(extracted)
        if len(extracted) != 2 or not all(isinstance(p, MPoly) for p in extracted):
            raise MalformedWitnessError(
                "extracted must hold one polynomial factor per map"
            )
        object.__setattr__(self, "scenario", scenario)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "conformal", conformal)
        object.__setattr__(self, "extracted", extracted)
        object.__setattr__(self, "contained_map", contained_map)

    def __setattr__(self, name, value):
        raise AttributeError("QuasiStandardWitness is immutable")

    def __repr__(self) -> str:
        return (
            f"QuasiStandardWitness(scenario={self.scenario},"
            f" a_dim={self.a.dim}, factor={self.conformal.factor!r})"
        )


class Classification:
    """Verdict tag plus the witness backing it.

    witness: a point pair for not-orthogonal, a ConformalWitness for
    standard, a QuasiStandardWitness for quasi-standard; reason: the
    failed hypothesis for unresolved; note: sampling context carried
    over from the orthogonality check.
    """

    __slots__ = ("tag", "witness", "reason", "note")

    def __init__(self, tag: str, witness=None, reason=None, note=None):
        if tag not in _TAGS:
            raise ValueError(f"unknown classification tag: {tag}")
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "witness", witness)
        object.__setattr__(self, "reason", reason)
        object.__setattr__(self, "note", note)

    def __setattr__(self, name, value):
        raise AttributeError("Classification is immutable")

    def __repr__(self) -> str:
        extra = f", reason={self.reason!r}" if self.reason else ""
        return f"Classification(tag={self.tag!r}{extra})"


# --- linear-part helpers --------------------------------------------------


def _tuple_degree(tup: Sequence[MPoly]) -> Optional[int]:
    degrees = {comp.total_degree() for comp in tup if not comp.is_zero()}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def _unit_exponent(arity: int, j: int):
    return tuple(1 if k == j else 0 for k in range(arity))


def _linear_matrix(tup: Sequence[MPoly], arity: int):
    return [
        [comp.terms.get(_unit_exponent(arity, j), ZERO) for j in range(arity)]
        for comp in tup
    ]


def _linear_tuple(matrix, arity: int):
    tup = []
    for row in matrix:
        terms = {
            _unit_exponent(arity, j): c for j, c in enumerate(row) if not c.is_zero()
        }
        tup.append(MPoly(arity, terms))
    return tup


def _conformal_factor(a1, a2, source: Signature, target: Signature):
    """The factor relating the pulled-back target form to the source
    form, or None when the two are not proportional (or the factor would
    be zero)."""
    n = source.n
    m = [[ZERO] * n for _ in range(n)]
    for i in range(target.n):
        w = target.weight(i)
        if w == 0:
            continue
        ws = gr(w)
        row1 = a1[i]
        row2 = a2[i]
        for j in range(n):
            cj = row1[j].conj() * ws
            if cj.is_zero():
                continue
            mj = m[j]
            for k in range(n):
                mj[k] = mj[k] + cj * row2[k]
    factor = None
    for j in range(n):
        e = source.weight(j)
        if e != 0:
            factor = m[j][j] / gr(e)
            break
    if factor is None:
        raise ValueError("the source form is identically zero")
    if factor.is_zero():
        return None
    for j in range(n):
        for k in range(n):
            expected = factor * gr(source.weight(j)) if j == k else ZERO
            if m[j][k] != expected:
                return None
    return factor


# --- the public operations ------------------------------------------------


def is_null(pair: MapPair) -> bool:
    """True exactly when the pairing polynomial vanishes identically."""
    return pairing_polynomial(pair).is_zero()


def check_standard(pair: MapPair) -> Optional[ConformalWitness]:
    """Conformal-pair test for linear maps.

    Both tuples are reduced to primitive form first; if either is not
    linear after that, the input is rejected.  Returns the witness when
    the pulled-back target form is a nonzero multiple of the source
    form, and None otherwise.
    """
    _, p1 = tuple_gcd(pair.f1)
    _, p2 = tuple_gcd(pair.f2)
    for name, tup in (("f1", p1), ("f2", p2)):
        if _tuple_degree(tup) != 1:
            raise ValueError(
                f"{name} is not linear after removing the common factor"
            )
    a1 = _linear_matrix(p1, pair.source.n)
    a2 = _linear_matrix(p2, pair.source.n)
    factor = _conformal_factor(a1, a2, pair.source, pair.target)
    if factor is None:
        return None
    return ConformalWitness(pair.source, pair.target, a1, a2, factor)


def _image_spans_nonnull_target(pair: MapPair) -> bool:
    """True when the coefficient vectors of the two maps together span
    the whole target modulo its weight-zero block."""
    truncated = drop_null_target_coordinates(pair)
    vecs = coefficient_vectors(truncated.f1) + coefficient_vectors(truncated.f2)
    return rank(vecs) == truncated.target.n


def _check_witness_shape(pair: MapPair, w: QuasiStandardWitness) -> None:
    if not isinstance(w, QuasiStandardWitness):
        raise MalformedWitnessError("expected a QuasiStandardWitness")
    if w.a.ambient != pair.target:
        raise MalformedWitnessError(
            "the witness subspace lives in a different space than the target"
        )
    if w.a.dim == 0:
        raise MalformedWitnessError("the witness subspace is zero")
    sig = w.a.restricted_signature
    if sig is None or sig.t > 0:
        raise MalformedWitnessError(
            "the witness subspace carries a degenerate restricted form"
        )
    if w.scenario == 2:
        if w.b is None:
            raise MalformedWitnessError("scenario 2 needs the complement subspace")
        if w.b.ambient != pair.target:
            raise MalformedWitnessError(
                "the complement subspace lives in a different space than the target"
            )
    conf = w.conformal
    if conf.source != pair.source:
        raise MalformedWitnessError(
            "the conformal witness source does not match the pair"
        )
    if conf.target.n != w.a.dim:
        raise MalformedWitnessError(
            "the conformal witness target does not match the witness subspace"
        )
    for p in w.extracted:
        if p.n != pair.source.n:
            raise MalformedWitnessError(
                "extracted factors must use the source variables"
            )


def verify_quasi_standard(pair: MapPair, w: QuasiStandardWitness) -> bool:
    """Re-derive every claim of a quasi-standard witness from scratch.

    Malformed witnesses (shape problems that make verification
    impossible) raise MalformedWitnessError; any failed claim returns
    False.
    """
    _check_witness_shape(pair, w)
    try:
        raw = project_pair(pair, w.a, normalize=False)
    except ValueError:
        return False
    if raw.target != w.conformal.target:
        return False
    phi1, phi2 = w.extracted
    lin1 = _linear_tuple(w.conformal.a1, pair.source.n)
    lin2 = _linear_tuple(w.conformal.a2, pair.source.n)
    for derived, factor, linear in ((raw.f1, phi1, lin1), (raw.f2, phi2, lin2)):
        if _tuple_degree(linear) != 1:
            return False
        for comp, lin in zip(derived, linear):
            if comp != factor * lin:
                return False
    refactor = _conformal_factor(
        w.conformal.a1, w.conformal.a2, pair.source, raw.target
    )
    if refactor is None or refactor != w.conformal.factor:
        return False
    if w.scenario == 1:
        contains = w.a.contains
        in_a = {
            side: all(contains(vec) for vec in coefficient_vectors(tup))
            for side, tup in ((1, pair.f1), (2, pair.f2))
        }
        if w.contained_map is not None:
            return in_a[w.contained_map]
        return in_a[1] or in_a[2]
    complement = orthogonal_complement(w.a)
    if not w.b.same_span_as(complement):
        return False
    if w.b.dim == 0:
        return False
    return pairing_polynomial(pair).g == projection_pairing(pair, w.a)


# --- the reduction search -------------------------------------------------


def _level_pairing(x1, x2, d, arity: int) -> MPoly:
    acc = MPoly.zero(2 * arity)
    for left, right, weight in zip(x1, x2, d):
        if left.is_zero() or right.is_zero():
            continue
        term = left.embed(2 * arity, 0) * right.conj_coefficients().embed(
            2 * arity, arity
        )
        acc = acc + term.scale(weight)
    return acc


def _reduction_step(pair: MapPair, x1, x2, u, d, b: MPoly, reasons):
    """One span-driven projection, or None when neither map's span gives
    a legal reduction; blocking hypotheses are appended to reasons."""
    m = len(d)
    ambient_dim = pair.target.n
    for driver in (x1, x2):
        vecs = coefficient_vectors(driver)
        echelon, pivots = rref(vecs)
        k = len(pivots)
        if k == 0 or k == m:
            continue
        basis = echelon[:k]
        gram = [
            [
                sum(
                    (d[t] * bi[t] * bj[t].conj() for t in range(m)),
                    ZERO,
                )
                for bj in basis
            ]
            for bi in basis
        ]
        combos, diag = congruence_diagonalize(gram)
        diagonalized = [
            [
                sum((combos[i][j] * basis[j][t] for j in range(k)), ZERO)
                for t in range(m)
            ]
            for i in range(k)
        ]
        kept = [
            (diagonalized[i], diag[i])
            for i in sorted(
                range(k),
                key=lambda i: 0 if diag[i].re > 0 else 1,
            )
            if not diag[i].is_zero()
        ]
        if not kept:
            reasons.append("the image span is totally null")
            continue
        null_count = k - len(kept)
        if null_count > 0:
            span_projective_dim = k - 1
            bound = 2 * (pair.source.r + pair.source.s - 1) - 2
            if span_projective_dim > bound:
                reasons.append(
                    "the image span dimension exceeds the reduction bound"
                )
                continue
        rows = [
            [(ONE / weight) * vec[t].conj() * d[t] for t in range(m)]
            for vec, weight in kept
        ]
        new_x1 = [_combine(row, x1, pair.source.n) for row in rows]
        new_x2 = [_combine(row, x2, pair.source.n) for row in rows]
        new_d = [weight for _, weight in kept]
        new_u = [
            [
                sum((vec[t] * u[t][j] for t in range(m)), ZERO)
                for j in range(ambient_dim)
            ]
            for vec, _ in kept
        ]
        if null_count > 0:
            level_pairing = _level_pairing(new_x1, new_x2, new_d, pair.source.n)
            if level_pairing.is_zero():
                reasons.append("the projection annihilated the pairing")
                continue
            if not divides(b, level_pairing):
                reasons.append("the projection lost orthogonality")
                continue
        return new_x1, new_x2, new_u, new_d
    return None


def _combine(row, comps, arity: int) -> MPoly:
    acc = MPoly.zero(arity)
    for c, comp in zip(row, comps):
        if not c.is_zero() and not comp.is_zero():
            acc = acc + comp.scale(c)
    return acc


def _assemble_witness(pair: MapPair, u):
    a = Subspace(pair.target, u)
    try:
        raw = project_pair(pair, a, normalize=False)
    except ValueError as exc:
        return None, str(exc)
    phi1, p1 = tuple_gcd(raw.f1)
    phi2, p2 = tuple_gcd(raw.f2)
    if _tuple_degree(p1) != 1 or _tuple_degree(p2) != 1:
        return None, (
            "the reduced maps are not linear after removing common factors"
        )
    a1 = _linear_matrix(p1, pair.source.n)
    a2 = _linear_matrix(p2, pair.source.n)
    factor = _conformal_factor(a1, a2, pair.source, raw.target)
    if factor is None:
        return None, "the reduced pair is not conformal"
    conformal = ConformalWitness(pair.source, raw.target, a1, a2, factor)
    extracted = (phi1, phi2)
    for side, tup in ((1, pair.f1), (2, pair.f2)):
        if all(a.contains(vec) for vec in coefficient_vectors(tup)):
            witness = QuasiStandardWitness(
                1, a, conformal, extracted, contained_map=side
            )
            return witness, None
    complement = orthogonal_complement(a)
    if complement.dim == 0:
        return None, (
            "neither map stays inside the conformal subspace and it has"
            " no complement"
        )
    witness = QuasiStandardWitness(2, a, conformal, extracted, b=complement)
    return witness, None


def _search_quasi_standard(pair: MapPair):
    target = pair.target
    m = target.r + target.s
    u = [
        [ONE if j == i else ZERO for j in range(target.n)] for i in range(m)
    ]
    d = [gr(target.weight(i)) for i in range(m)]
    x1 = list(pair.f1[:m])
    x2 = list(pair.f2[:m])
    b = source_form(pair)
    reasons = []
    while True:
        step = _reduction_step(pair, x1, x2, u, d, b, reasons)
        if step is None:
            break
        x1, x2, u, d = step
    witness, failure = _assemble_witness(pair, u)
    if witness is not None:
        return witness, None
    reasons.append(failure)
    return None, "; ".join(dict.fromkeys(reasons))


def classify(pair: MapPair, seed: int = 0) -> Classification:
    """Full classification pipeline with verified witnesses.

    The source form must be non-degenerate and not identically zero.
    The outcome is sound by construction: standard and quasi-standard
    witnesses are re-verified against the original pair before being
    returned, a null verdict means the pairing polynomial is exactly
    zero, and a not-orthogonal verdict carries a checked witness point
    pair.  Unresolved is an honest "the reduction's hypotheses failed",
    with the failed hypothesis spelled out.
    """
    if pair.source.r + pair.source.s == 0:
        raise ValueError("the source form is identically zero")
    if pair.source.t != 0:
        raise ValueError("classification needs a non-degenerate source form")
    verdict = is_orthogonal(pair, seed=seed)
    if not verdict.orthogonal:
        return Classification(
            NOT_ORTHOGONAL, witness=verdict.witness, note=verdict.note
        )
    if is_null(pair):
        return Classification(NULL, note=verdict.note)
    try:
        witness = check_standard(pair)
    except ValueError:
        witness = None
    if witness is not None and _image_spans_nonnull_target(pair):
        return Classification(STANDARD, witness=witness, note=verdict.note)
    witness, reason = _search_quasi_standard(pair)
    if witness is not None:
        try:
            verified = verify_quasi_standard(pair, witness)
        except MalformedWitnessError:
            verified = False
        if verified:
            return Classification(
                QUASI_STANDARD, witness=witness, note=verdict.note
            )
        reason = "the assembled witness failed verification"
    return Classification(UNRESOLVED, reason=reason, note=verdict.note)
