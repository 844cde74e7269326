"""Example factories and a falsification search for the pairing dichotomy.

The generator half manufactures map pairs with a classification that is
known by construction: conformal linear pairs (standard, with the exact
conformal factor), pairs that decompose into a conformal core on a
coordinate subspace plus pairing-free leftovers (quasi-standard, with a
verified witness), pairs whose pairing polynomial is identically zero
(null), and a fixed quadratic pair whose image span is degenerate
against the target form, which defeats the span-driven reduction
(unresolved).  Every generated pair is re-checked against its promise
before it is handed out.

The search half enumerates a documented family of sparse-support
candidate pairs, filters them down to the orthogonal ones by exact
reduction modulo the source pairing, classifies every orthogonal pair
that is not identically null, and records any pair inside the reduction
bound that the classifier leaves unresolved.  The dichotomy predicts
that list stays empty; the search exists to look for exceptions, and a
clean sweep is only claimed when the whole family was covered within
budget.
"""

from __future__ import annotations

import itertools
import math
import time
from typing import Dict, List, Optional, Sequence, Tuple

from orthopair.classify import (
    NULL,
    QUASI_STANDARD,
    STANDARD,
    UNRESOLVED,
    QuasiStandardWitness,
    check_standard,
    classify,
    is_null,
    verify_quasi_standard,
)
from orthopair.hermspace import Signature, Subspace, orthogonal_complement
from orthopair.linalg import conj_transpose, inverse, mat_mul, rank, rref
from orthopair.mappair import (
    MapPair,
    is_orthogonal,
    pairing_polynomial,
    project_pair,
    source_form,
)
from orthopair.poly import MPoly, gcd, reduce_mod, tuple_gcd
from orthopair.rng import SeededScalars
from orthopair.scalar import GaussianRational, ONE, ZERO, gr

STANDARD_CONSTRUCTION = "standard"
QUASI_STANDARD_CONSTRUCTION = "quasi-standard"
NULL_CONSTRUCTION = "null"
SPAN_GAP_CONSTRUCTION = "span-gap"

_CONSTRUCTIONS = (
    STANDARD_CONSTRUCTION,
    QUASI_STANDARD_CONSTRUCTION,
    NULL_CONSTRUCTION,
    SPAN_GAP_CONSTRUCTION,
)

ONE_SIDED = "one-sided"
SPLIT = "split"
CANCELLING = "cancelling"
NULL_BLOCK = "null-block"

_QUASI_VARIANTS = (ONE_SIDED, SPLIT)
_NULL_VARIANTS = (ONE_SIDED, CANCELLING, NULL_BLOCK)

#: Default coefficient alphabet of the falsification search.
UNIT_COEFFICIENTS = (gr(1), gr(-1), gr(0, 1), gr(0, -1))


def within_reduction_bound(source: Signature, target: Signature) -> bool:
    """Hypothesis of the dichotomy: the count of nonzero-weight target
    coordinates is at most 2*(r+s) - 3 for a source of signature (r;s)."""
    return target.r + target.s <= 2 * (source.r + source.s) - 3


# --- generator specs ------------------------------------------------------


class GeneratorSpec:
    """What to manufacture: the two spaces, the construction family, the
    deterministic seed, and per-family options.

    phi_degree is the degree of the common polynomial factors in the
    quasi-standard construction.  variant picks a sub-family: for
    quasi-standard, "one-sided" keeps the second map inside the
    conformal coordinate subspace while the first map carries all the
    leftover content, and "split" spreads the leftovers over disjoint
    coordinate sets of the two maps; for null, "one-sided" blanks each
    coordinate on one of the two sides, "cancelling" repeats one product
    on a positive and a negative coordinate, and "null-block" puts all
    content into weight-zero coordinates.
    """

    __slots__ = ("source", "target", "construction", "seed", "phi_degree", "variant")

    def __init__(
        self,
        source: Signature,
        target: Signature,
        construction: str,
        seed: int = 0,
        phi_degree: int = 1,
        variant: Optional[str] = None,
    ):
        if not isinstance(source, Signature) or not isinstance(target, Signature):
            raise TypeError("source and target must be signatures")
        if construction not in _CONSTRUCTIONS:
            raise ValueError(f"unknown construction {construction!r}")
        if not isinstance(seed, int):
            raise TypeError("seed must be an integer")
        if not isinstance(phi_degree, int) or phi_degree < 1:
            raise ValueError("phi_degree must be a positive integer")
        variant = _validate_spec(source, target, construction, variant)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "construction", construction)
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "phi_degree", phi_degree)
        object.__setattr__(self, "variant", variant)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorSpec is immutable")

    def __repr__(self) -> str:
        return (
            f"GeneratorSpec({self.source!r} -> {self.target!r},"
            f" {self.construction!r}, seed={self.seed},"
            f" phi_degree={self.phi_degree}, variant={self.variant!r})"
        )


def _incompatible(why: str) -> ValueError:
    return ValueError(f"incompatible generator spec: {why}")


def _validate_spec(
    source: Signature,
    target: Signature,
    construction: str,
    variant: Optional[str],
) -> Optional[str]:
    """Check construction-specific compatibility; returns the resolved
    variant (defaults filled in)."""
    if source.n < 1:
        raise _incompatible("the source space is empty")
    if construction == STANDARD_CONSTRUCTION:
        if variant is not None:
            raise _incompatible("the standard construction has no variants")
        if source.t != 0:
            raise _incompatible("a conformal pair needs a non-degenerate source")
        if (target.r, target.s) != (source.r, source.s):
            raise _incompatible(
                "the standard construction needs matching nonzero-weight"
                " signatures on both sides"
            )
        return None
    if construction == QUASI_STANDARD_CONSTRUCTION:
        if source.t != 0:
            raise _incompatible("a conformal core needs a non-degenerate source")
        if target.r < source.r or target.s < source.s:
            raise _incompatible(
                "the quasi-standard construction needs the target to contain"
                " the source signature"
            )
        if (target.r, target.s, target.t) == (source.r, source.s, 0):
            raise _incompatible(
                "the quasi-standard construction needs room outside the"
                " conformal subspace"
            )
        extra = (target.r - source.r) + (target.s - source.s)
        if variant is None:
            variant = SPLIT if extra >= 2 else ONE_SIDED
        if variant not in _QUASI_VARIANTS:
            raise _incompatible(f"unknown quasi-standard variant {variant!r}")
        if variant == SPLIT and extra < 2:
            raise _incompatible(
                "the split variant needs at least two nonzero-weight"
                " coordinates outside the conformal subspace"
            )
        return variant
    if construction == NULL_CONSTRUCTION:
        if variant is None:
            variant = ONE_SIDED if target.n >= 2 else NULL_BLOCK
        if variant not in _NULL_VARIANTS:
            raise _incompatible(f"unknown null variant {variant!r}")
        if variant == ONE_SIDED and target.n < 2:
            raise _incompatible("the one-sided variant needs two target coordinates")
        if variant == CANCELLING and (target.r < 1 or target.s < 1):
            raise _incompatible(
                "the cancelling variant needs a positive and a negative coordinate"
            )
        if variant == NULL_BLOCK and target.t < 1:
            raise _incompatible("the null-block variant needs weight-zero coordinates")
        return variant
    # span gap
    if variant is not None:
        raise _incompatible("the span-gap construction has no variants")
    if (source.r, source.s, source.t) != (2, 2, 0) or (
        target.r,
        target.s,
        target.t,
    ) != (3, 4, 0):
        raise _incompatible(
            "the span-gap example maps a (2;2) source into a (3;4) target"
        )
    return None


class GeneratedInstance:
    """A manufactured pair with its promised classification.

    expected_tag is the tag the construction guarantees; witness carries
    the matching certificate — a ConformalWitness for standard, a
    verified QuasiStandardWitness for quasi-standard, and None for null
    (the certificate is the identically zero pairing polynomial) and for
    the span-gap example (which no reduction resolves).
    """

    __slots__ = ("spec", "pair", "expected_tag", "witness")

    def __init__(self, spec: GeneratorSpec, pair: MapPair, expected_tag: str, witness):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "pair", pair)
        object.__setattr__(self, "expected_tag", expected_tag)
        object.__setattr__(self, "witness", witness)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratedInstance is immutable")

    def __repr__(self) -> str:
        return (
            f"GeneratedInstance({self.spec.construction!r},"
            f" expected_tag={self.expected_tag!r})"
        )


# --- generation -----------------------------------------------------------


def _random_invertible(rand: SeededScalars, n: int):
    for _ in range(64):
        rows = [rand.vector(n) for _ in range(n)]
        if rank(rows) == n:
            return rows
    raise RuntimeError("could not sample an invertible matrix")


def _weight_diag(sig: Signature):
    return [
        [gr(sig.weight(i)) if i == j else ZERO for j in range(sig.n)]
        for i in range(sig.n)
    ]


def _conformal_core(rand: SeededScalars, source: Signature):
    """An invertible matrix, its conformal partner, and the factor tying
    them: conj-transpose(r1) * H * r2 == factor * H for the source form H."""
    r1 = _random_invertible(rand, source.n)
    factor = rand.nonzero_scalar()
    h = _weight_diag(source)
    r2 = mat_mul(mat_mul(h, inverse(conj_transpose(r1))), h)
    r2 = [[factor * x for x in row] for row in r2]
    return r1, r2, factor


def _linear_tuple_from_rows(rows, arity: int):
    out = []
    for row in rows:
        p = MPoly.zero(arity)
        for j, c in enumerate(row):
            if not c.is_zero():
                p = p + MPoly.variable(arity, j).scale(c)
        out.append(p)
    return tuple(out)


def _homogeneous_monomials(n: int, d: int) -> List[tuple]:
    """All exponent tuples of total degree d in n variables, fixed order."""
    if n == 1:
        return [(d,)]
    out = []
    for head in range(d, -1, -1):
        for tail in _homogeneous_monomials(n - 1, d - head):
            out.append((head,) + tail)
    return out


def _random_homogeneous(rand: SeededScalars, n: int, degree: int, terms: int = 2) -> MPoly:
    monos = _homogeneous_monomials(n, degree)
    chosen = rand.sample(monos, min(terms, len(monos)))
    return MPoly(n, {e: rand.nonzero_scalar() for e in chosen})


def _content_free_homogeneous(rand: SeededScalars, n: int, degree: int) -> MPoly:
    """A random homogeneous polynomial that no variable divides: its
    terms include pure powers of the first and the last variable, so
    every monomial is coprime to it."""
    if n == 1:
        return MPoly(1, {(degree,): rand.nonzero_scalar()})
    first = (degree,) + (0,) * (n - 1)
    last = (0,) * (n - 1) + (degree,)
    terms = {first: rand.nonzero_scalar(), last: rand.nonzero_scalar()}
    extra = rand.choice(_homogeneous_monomials(n, degree))
    terms[extra] = rand.nonzero_scalar()
    return MPoly(n, terms)


def _coordinate_subspace(sig: Signature, coords: Sequence[int]) -> Subspace:
    basis = []
    for c in coords:
        v = [ZERO] * sig.n
        v[c] = ONE
        basis.append(v)
    return Subspace(sig, basis)


def _coprime_monomials(pool, phi: MPoly, count: int, arity: int) -> List[tuple]:
    """The first `count` pool exponents whose monomials share no factor
    with phi; these keep the full tuple primitive of higher degree."""
    picked = []
    for e in pool:
        if gcd(MPoly(arity, {e: ONE}), phi).is_constant():
            picked.append(e)
            if len(picked) == count:
                return picked
    raise _incompatible(
        "not enough leftover monomials coprime to the common factor;"
        " raise phi_degree or shrink the target"
    )


def _certified_quasi_witness(
    pair: MapPair,
    a: Subspace,
    scenario: int,
    contained_map: Optional[int] = None,
    b: Optional[Subspace] = None,
) -> QuasiStandardWitness:
    """Derive the conformal core of the projection onto `a` and package
    it as a witness, re-verifying before returning."""
    raw = project_pair(pair, a, normalize=False)
    g1, p1 = tuple_gcd(raw.f1)
    g2, p2 = tuple_gcd(raw.f2)
    core = MapPair(pair.source, raw.target, p1, p2)
    conformal = check_standard(core)
    if conformal is None:
        raise RuntimeError("projection onto the chosen subspace is not conformal")
    witness = QuasiStandardWitness(
        scenario, a, conformal, (g1, g2), b=b, contained_map=contained_map
    )
    if not verify_quasi_standard(pair, witness):
        raise RuntimeError("constructed quasi-standard witness failed verification")
    return witness


def _generate_standard(spec: GeneratorSpec) -> GeneratedInstance:
    rand = SeededScalars(spec.seed)
    src, tgt = spec.source, spec.target
    r1, r2, factor = _conformal_core(rand, src)
    a1 = [list(row) for row in r1] + [rand.vector(src.n) for _ in range(tgt.t)]
    a2 = [list(row) for row in r2] + [rand.vector(src.n) for _ in range(tgt.t)]
    pair = MapPair(
        src,
        tgt,
        _linear_tuple_from_rows(a1, src.n),
        _linear_tuple_from_rows(a2, src.n),
    )
    witness = check_standard(pair)
    if witness is None or witness.factor != factor:
        raise RuntimeError("standard construction lost its conformal factor")
    return GeneratedInstance(spec, pair, STANDARD, witness)


def _generate_quasi_standard(spec: GeneratorSpec) -> GeneratedInstance:
    rand = SeededScalars(spec.seed)
    src, tgt = spec.source, spec.target
    n, d = src.n, spec.phi_degree
    r1, r2, _ = _conformal_core(rand, src)
    sigma = _linear_tuple_from_rows(r1, n)
    tau = _linear_tuple_from_rows(r2, n)
    phi1 = _content_free_homogeneous(rand, n, d)
    phi2 = _content_free_homogeneous(rand, n, d)
    a_coords = list(range(src.r)) + list(range(tgt.r, tgt.r + src.s))
    extra = list(range(src.r, tgt.r)) + list(range(tgt.r + src.s, tgt.r + tgt.s))
    null_coords = list(range(tgt.r + tgt.s, tgt.n))
    zero = MPoly.zero(n)
    f1 = [zero] * tgt.n
    f2 = [zero] * tgt.n
    for k, c in enumerate(a_coords):
        f1[c] = phi1 * sigma[k]
        f2[c] = phi2 * tau[k]
    pool = _homogeneous_monomials(n, d + 1)
    if spec.variant == SPLIT:
        first_coords = extra[0::2] + null_coords
        second_coords = extra[1::2]
    else:
        first_coords = extra + null_coords
        second_coords = []
    # leftover content on the first map is kept coprime to its common
    # factor so the full tuple stays primitive of degree d+1
    for c, e in zip(first_coords, _coprime_monomials(pool, phi1, len(first_coords), n)):
        f1[c] = MPoly(n, {e: rand.nonzero_scalar()})
    for c, e in zip(second_coords, pool):
        f2[c] = MPoly(n, {e: rand.nonzero_scalar()})
    pair = MapPair(src, tgt, f1, f2)
    a = _coordinate_subspace(tgt, a_coords)
    if spec.variant == SPLIT:
        witness = _certified_quasi_witness(pair, a, 2, b=orthogonal_complement(a))
    else:
        witness = _certified_quasi_witness(pair, a, 1, contained_map=2)
    return GeneratedInstance(spec, pair, QUASI_STANDARD, witness)


def _generate_null(spec: GeneratorSpec) -> GeneratedInstance:
    rand = SeededScalars(spec.seed)
    src, tgt = spec.source, spec.target
    n, m = src.n, tgt.n
    zero = MPoly.zero(n)
    f1 = [zero] * m
    f2 = [zero] * m
    d1 = rand.choice((1, 2))
    d2 = rand.choice((1, 2))
    if spec.variant == ONE_SIDED:
        sides = [rand.choice((1, 2)) for _ in range(m)]
        sides[0], sides[-1] = 1, 2
        for i, side in enumerate(sides):
            if side == 1:
                f1[i] = _random_homogeneous(rand, n, d1)
            else:
                f2[i] = _random_homogeneous(rand, n, d2)
    elif spec.variant == CANCELLING:
        a = _random_homogeneous(rand, n, d1)
        c = _random_homogeneous(rand, n, d2)
        pos, neg = 0, tgt.r
        f1[pos] = a
        f1[neg] = a
        f2[pos] = c
        f2[neg] = c
    else:  # null block
        for i in range(tgt.r + tgt.s, m):
            f1[i] = _random_homogeneous(rand, n, d1)
            f2[i] = _random_homogeneous(rand, n, d2)
    pair = MapPair(src, tgt, f1, f2)
    if not is_null(pair):
        raise RuntimeError("null construction produced a nonzero pairing")
    return GeneratedInstance(spec, pair, NULL, None)


def span_gap_pair() -> MapPair:
    """A fixed orthogonal quadratic pair from a (2;2) source into a
    (3;4) target whose image span is six-dimensional and carries a
    degenerate restricted form.

    The pairing polynomial factors through the source pairing with
    quotient z1*w1 + z2*w2 + z3*w3 + z4*w4, so the pair is orthogonal
    and not null; but projecting onto the non-degenerate part of the
    image span destroys orthogonality, so no span-driven reduction can
    resolve it and the classifier reports it unresolved.
    """
    src = Signature(2, 2)
    tgt = Signature(3, 4)
    z = [MPoly.variable(4, j) for j in range(4)]
    sq = [p * p for p in z]
    z12 = z[0] * z[1]
    z34 = z[2] * z[3]
    f1 = (sq[0], sq[1], z12, sq[2], sq[3], z34.scale(gr(2)), z12)
    f2 = (sq[0], sq[1], z12, sq[2], sq[3], z34, z12.scale(gr(-1)))
    return MapPair(src, tgt, f1, f2)


def _generate_span_gap(spec: GeneratorSpec) -> GeneratedInstance:
    pair = span_gap_pair()
    if is_null(pair):
        raise RuntimeError("the span-gap example lost its pairing")
    return GeneratedInstance(spec, pair, UNRESOLVED, None)


_BUILDERS = {
    STANDARD_CONSTRUCTION: _generate_standard,
    QUASI_STANDARD_CONSTRUCTION: _generate_quasi_standard,
    NULL_CONSTRUCTION: _generate_null,
    SPAN_GAP_CONSTRUCTION: _generate_span_gap,
}


def generate(spec: GeneratorSpec) -> GeneratedInstance:
    """Build the pair a spec describes, re-checking every promise.

    The same spec always produces the same instance.  The pair is
    verified orthogonal before it is returned, and the ground-truth
    witness (when the construction carries one) is re-verified.
    """
    instance = _BUILDERS[spec.construction](spec)
    if not is_orthogonal(instance.pair).orthogonal:
        raise RuntimeError("generated pair failed its orthogonality check")
    return instance


# --- falsification search -------------------------------------------------


class SearchReport:
    """Outcome of one falsification sweep.

    family documents exactly which candidates were enumerated.
    candidates_tested counts ordered (first, second) map pairs checked
    for orthogonality; orthogonal_count of those were orthogonal and
    null_count of the orthogonal ones had an identically zero pairing.
    tag_counts histograms the classification of the orthogonal non-null
    pairs, findings keeps up to max_findings of them, and violations
    holds every orthogonal pair inside the reduction bound left
    unresolved, with the classifier's reason — the dichotomy predicts
    this stays empty.  exhausted reports that the budget ran out before
    the family was finished, so a clean sweep is claimed only when it is
    False.
    """

    __slots__ = (
        "source",
        "target",
        "degree_bound",
        "budget",
        "seed",
        "family",
        "supports_enumerated",
        "candidates_tested",
        "orthogonal_count",
        "null_count",
        "tag_counts",
        "findings",
        "violations",
        "exhausted",
        "in_hypothesis",
        "elapsed_seconds",
    )

    def __init__(self, **fields):
        for name in SearchReport.__slots__:
            setattr(self, name, fields.pop(name))
        if fields:
            raise TypeError(f"unknown report fields {sorted(fields)}")

    def __repr__(self) -> str:
        state = "exhausted" if self.exhausted else "complete"
        return (
            f"SearchReport({self.source!r} -> {self.target!r},"
            f" degree<={self.degree_bound}, {self.candidates_tested} tested"
            f" ({state}), {self.orthogonal_count} orthogonal,"
            f" {self.null_count} null, {len(self.violations)} violations,"
            f" {self.elapsed_seconds:.2f}s)"
        )


class _SweepState:
    """Mutable tallies shared by the enumeration strategies."""

    def __init__(self, source, target, budget, max_findings, hypothesis):
        self.source = source
        self.target = target
        self.budget = budget
        self.max_findings = max_findings
        self.hypothesis = hypothesis
        self.tested = 0
        self.orthogonal = 0
        self.null = 0
        self.null_reverified = 0
        self.tag_counts: Dict[str, int] = {}
        self.findings: List[tuple] = []
        self.violations: List[tuple] = []
        self.exhausted = False

    def spend(self, amount: int = 1) -> bool:
        """Consume budget; False (and the exhausted flag) once it is gone."""
        if self.tested + amount > self.budget:
            self.exhausted = True
            return False
        self.tested += amount
        return True

    def record_null(self, materialize) -> None:
        self.orthogonal += 1
        self.null += 1
        # spot-check the bookkeeping against the full pairing polynomial
        if self.null_reverified < 25:
            self.null_reverified += 1
            if not is_null(materialize()):
                raise RuntimeError("null bookkeeping disagrees with the pairing")

    def record_orthogonal(self, pair: MapPair) -> None:
        self.orthogonal += 1
        if not is_orthogonal(pair).orthogonal:
            raise RuntimeError("search bookkeeping disagrees with the pairing")
        outcome = classify(pair)
        self.tag_counts[outcome.tag] = self.tag_counts.get(outcome.tag, 0) + 1
        if len(self.findings) < self.max_findings:
            self.findings.append((pair, outcome.tag))
        if outcome.tag == UNRESOLVED and self.hypothesis:
            self.violations.append((pair, outcome.reason or "unresolved"))


def _nf_table(b: MPoly):
    """Normal forms of products of one source monomial and one conjugated
    monomial, with integer coefficients, computed on demand."""
    cache: Dict[tuple, tuple] = {}
    arity = b.n

    def lookup(ze: tuple, xe: tuple) -> tuple:
        key = ze + xe
        hit = cache.get(key)
        if hit is not None:
            return hit
        _, r = reduce_mod(MPoly(arity, {key: ONE}), b)
        entries = []
        for exp, c in sorted(r.terms.items()):
            if c.re.denominator != 1 or c.im.denominator != 1:
                raise RuntimeError("monomial normal form is not integral")
            entries.append((exp, int(c.re), int(c.im)))
        if not entries:
            raise RuntimeError("the source pairing divided a single monomial")
        out = tuple(entries)
        cache[key] = out
        return out

    return lookup


def _scaled_int_coefficients(coeffs: Sequence[GaussianRational]):
    """Represent exact coefficients as Gaussian integers times a common
    denominator (orthogonality is scale-invariant, so tests can run on
    the integer parts alone)."""
    den = 1
    for c in coeffs:
        den = math.lcm(den, c.re.denominator, c.im.denominator)
    return [(int(c.re * den), int(c.im * den)) for c in coeffs], den


class _Candidate:
    __slots__ = ("entries", "percomp", "mask", "parts")

    def __init__(self, ncomp: int, picks: Sequence[tuple]):
        # picks: (component, exponent, exact coefficient)
        ints, _ = _scaled_int_coefficients([c for _, _, c in picks])
        entries = []
        percomp: list = [None] * ncomp
        mask = 0
        for (comp, exp, _), (re, im) in zip(picks, ints):
            entries.append((comp, exp, re, im))
            percomp[comp] = (exp, re, im)
            mask |= 1 << comp
        self.entries = tuple(entries)
        self.percomp = tuple(percomp)
        self.mask = mask
        self.parts = tuple(picks)


def _materialize(source: Signature, target: Signature, c1: _Candidate, c2: _Candidate) -> MapPair:
    zero = MPoly.zero(source.n)
    f1 = [zero] * target.n
    f2 = [zero] * target.n
    for comp, exp, c in c1.parts:
        f1[comp] = MPoly(source.n, {exp: c})
    for comp, exp, c in c2.parts:
        f2[comp] = MPoly(source.n, {exp: c})
    return MapPair(source, target, f1, f2)


def _side_candidates(
    ncomp: int,
    nsrc: int,
    degrees: Sequence[int],
    coefficients: Sequence[GaussianRational],
    rand: SeededScalars,
    rational_fills: int,
    cap: int,
):
    """Candidates with at most one monomial per component, grouped by
    degree; the first occupied component has coefficient one.  Returns
    (candidates by degree, support pattern count, truncated flag)."""
    by_degree: Dict[int, List[_Candidate]] = {}
    patterns = 0
    total = 0
    for d in degrees:
        monos = _homogeneous_monomials(nsrc, d)
        out: List[_Candidate] = []
        by_degree[d] = out
        options = [None] + list(range(len(monos)))
        for combo in itertools.product(options, repeat=ncomp):
            chosen = [(i, monos[m]) for i, m in enumerate(combo) if m is not None]
            if not chosen:
                continue
            patterns += 1
            tail = len(chosen) - 1
            for assignment in itertools.product(coefficients, repeat=tail):
                picks = [
                    (comp, exp, c)
                    for (comp, exp), c in zip(chosen, (ONE,) + assignment)
                ]
                out.append(_Candidate(ncomp, picks))
            for _ in range(rational_fills):
                picks = [
                    (comp, exp, ONE if k == 0 else rand.nonzero_scalar())
                    for k, (comp, exp) in enumerate(chosen)
                ]
                out.append(_Candidate(ncomp, picks))
            total += len(coefficients) ** tail + rational_fills
            if total > cap:
                return by_degree, patterns, True
    return by_degree, patterns, False


def _sweep_monomial_family(
    state: _SweepState,
    degree_bound: int,
    coefficients,
    seed: int,
    rational_fills: int,
) -> int:
    """Cross every candidate for the first map against every candidate
    for the second and keep the orthogonal pairs.  Returns the support
    pattern count."""
    source, target = state.source, state.target
    nf = _nf_table(source_form(source))
    weights = [target.weight(i) for i in range(target.n)]
    degrees = range(1, degree_bound + 1)
    rand = SeededScalars(seed)
    side1, patterns1, trunc1 = _side_candidates(
        target.n, source.n, degrees, coefficients, rand, rational_fills, state.budget
    )
    side2, patterns2, trunc2 = _side_candidates(
        target.n, source.n, degrees, coefficients, rand, rational_fills, state.budget
    )
    if trunc1 or trunc2:
        state.exhausted = True
    for d1 in sorted(side1):
        for d2 in sorted(side2):
            for c1 in side1[d1]:
                entries1 = c1.entries
                mask1 = c1.mask
                for c2 in side2[d2]:
                    if not state.spend():
                        return patterns1 + patterns2
                    overlap = mask1 & c2.mask
                    if overlap == 0:
                        # no component pairs up: the pairing is zero as written
                        state.record_null(
                            lambda c1=c1, c2=c2: _materialize(source, target, c1, c2)
                        )
                        continue
                    if overlap & (overlap - 1) == 0:
                        # a single product never reduces to zero
                        continue
                    acc: Dict[tuple, tuple] = {}
                    percomp = c2.percomp
                    for comp, ze, a, b_ in entries1:
                        other = percomp[comp]
                        if other is None:
                            continue
                        xe, c, d_ = other
                        w = weights[comp]
                        if w == 0:
                            continue
                        re = (a * c + b_ * d_) * w
                        im = (b_ * c - a * d_) * w
                        for key, tr, ti in nf(ze, xe):
                            rr = re * tr - im * ti
                            ii = re * ti + im * tr
                            prev = acc.get(key)
                            if prev is None:
                                acc[key] = (rr, ii)
                            else:
                                acc[key] = (prev[0] + rr, prev[1] + ii)
                    if any(v != (0, 0) for v in acc.values()):
                        continue
                    # orthogonal; split null from genuinely reduced pairs
                    raw: Dict[tuple, tuple] = {}
                    for comp, ze, a, b_ in entries1:
                        other = percomp[comp]
                        if other is None:
                            continue
                        xe, c, d_ = other
                        w = weights[comp]
                        re = (a * c + b_ * d_) * w
                        im = (b_ * c - a * d_) * w
                        prev = raw.get((ze, xe))
                        if prev is None:
                            raw[(ze, xe)] = (re, im)
                        else:
                            raw[(ze, xe)] = (prev[0] + re, prev[1] + im)
                    if all(v == (0, 0) for v in raw.values()):
                        state.record_null(
                            lambda c1=c1, c2=c2: _materialize(source, target, c1, c2)
                        )
                    else:
                        state.record_orthogonal(_materialize(source, target, c1, c2))
    return patterns1 + patterns2


def _validate_supports(supports, target: Signature, nsrc: int, degree_bound: int):
    """Check the fixed-support description and return both sides as
    tuples of (component, exponent)."""
    if len(supports) != 2:
        raise ValueError("supports must give one pattern per map")
    sides = []
    for pattern in supports:
        if len(pattern) != target.n:
            raise ValueError("each support pattern needs one entry per target coordinate")
        chosen = []
        degree = None
        for comp, exp in enumerate(pattern):
            if exp is None:
                continue
            exp = tuple(exp)
            if len(exp) != nsrc or any(not isinstance(e, int) or e < 0 for e in exp):
                raise ValueError("support monomials must be exponent tuples over the source")
            d = sum(exp)
            if degree is None:
                degree = d
            elif d != degree:
                raise ValueError("support monomials on one side must share a degree")
            chosen.append((comp, exp))
        if not chosen:
            raise ValueError("each support pattern needs at least one monomial")
        if degree < 1 or degree > degree_bound:
            raise ValueError("support degrees must lie between 1 and the degree bound")
        sides.append(tuple(chosen))
    return sides


def _sweep_fixed_supports(
    state: _SweepState,
    supports,
    degree_bound: int,
    coefficients,
) -> int:
    """Enumerate coefficient assignments on fixed per-component supports.

    For each first-map assignment the orthogonality condition is linear
    in the conjugated second-map coefficients, so the second side is
    enumerated inside the kernel of that linear map (falling back to a
    direct scan when the kernel is too free to parametrize cheaply)."""
    source, target = state.source, state.target
    nf = _nf_table(source_form(source))
    sup1, sup2 = _validate_supports(supports, target, source.n, degree_bound)
    k1, k2 = len(sup1), len(sup2)
    conj_values = tuple(c.conj() for c in coefficients)
    with_zero = (ZERO,) + conj_values

    def materialize(assign1, u):
        zero = MPoly.zero(source.n)
        f1 = [zero] * target.n
        f2 = [zero] * target.n
        for (comp, exp), c in zip(sup1, assign1):
            f1[comp] = MPoly(source.n, {exp: c})
        for (comp, exp), cu in zip(sup2, u):
            if not cu.is_zero():
                f2[comp] = MPoly(source.n, {exp: cu.conj()})
        return MapPair(source, target, f1, f2)

    def consider(assign1, u):
        if all(cu.is_zero() for cu in u):
            return
        for cu in u:
            if not cu.is_zero():
                if cu != ONE:
                    return  # leading coefficient normalization
                break
        if any(not cu.is_zero() and cu not in with_zero for cu in u):
            return
        pair = materialize(assign1, u)
        if is_null(pair):
            state.record_null(lambda pair=pair: pair)
        else:
            state.record_orthogonal(pair)

    for tail in itertools.product(coefficients, repeat=k1 - 1):
        if state.exhausted:
            break
        assign1 = (ONE,) + tail
        # columns of the orthogonality system, one per second-map component
        keyspace: Dict[tuple, int] = {}
        cols = []
        for (comp2, xe), _ in zip(sup2, range(k2)):
            col: Dict[int, GaussianRational] = {}
            w = target.weight(comp2)
            match = None
            for (comp1, ze), c1 in zip(sup1, assign1):
                if comp1 == comp2:
                    match = (ze, c1)
                    break
            if w != 0 and match is not None:
                ze, c1 = match
                for key, tr, ti in nf(ze, xe):
                    idx = keyspace.setdefault(key, len(keyspace))
                    col[idx] = c1 * gr(tr * w, ti * w)
            cols.append(col)
        rows = len(keyspace)
        matrix = [[ZERO] * k2 for _ in range(rows)]
        for j, col in enumerate(cols):
            for idx, val in col.items():
                matrix[idx][j] = val
        if rows:
            reduced, pivots = rref(matrix)
            free = [j for j in range(k2) if j not in pivots]
        else:
            reduced, pivots = [], []
            free = list(range(k2))
        combos = len(with_zero) ** len(free)
        direct = len(with_zero) ** max(k2 - 1, 0)
        if combos <= max(direct, 4096):
            if not state.spend(combos):
                break
            for t in itertools.product(with_zero, repeat=len(free)):
                u = [ZERO] * k2
                for f, val in zip(free, t):
                    u[f] = val
                for i, p in enumerate(pivots):
                    acc = ZERO
                    for f, val in zip(free, t):
                        if not val.is_zero():
                            acc = acc - reduced[i][f] * val
                    u[p] = acc
                consider(assign1, u)
        else:
            # kernel too free to parametrize: scan the family directly
            scan = len(with_zero) ** max(k2 - 1, 0)
            if not state.spend(scan):
                break
            for utail in itertools.product(with_zero, repeat=k2 - 1):
                u = (ONE,) + utail
                good = True
                for i in range(rows):
                    acc = ZERO
                    for j in range(k2):
                        if not u[j].is_zero() and not matrix[i][j].is_zero():
                            acc = acc + matrix[i][j] * u[j]
                    if not acc.is_zero():
                        good = False
                        break
                if good:
                    consider(assign1, u)
    return 2


def falsify(
    source: Signature,
    target: Signature,
    degree_bound: int,
    budget: int,
    seed: int = 0,
    coefficients: Sequence[GaussianRational] = UNIT_COEFFICIENTS,
    supports=None,
    rational_fills: int = 0,
    max_findings: int = 32,
) -> SearchReport:
    """Sweep a documented family of sparse candidate pairs for
    counterexamples to the orthogonality dichotomy.

    Without `supports`, candidates carry at most one monomial per
    component, of any degree from 1 to degree_bound independently on the
    two sides; the first occupied component of each map has coefficient
    one and the rest draw from `coefficients` (plus `rational_fills`
    seeded random rational assignments per support pattern).  With
    `supports` — one exponent tuple or None per target coordinate and
    per map — only coefficient assignments on those fixed monomials are
    enumerated, and components may also vanish.

    Every orthogonal candidate that is not identically null is
    classified; those inside the reduction bound that stay unresolved
    are reported as violations.  `budget` bounds the number of
    candidate pairs tested; running out is reported via `exhausted`,
    never silently.
    """
    if source.t != 0 or source.n < 1:
        raise ValueError("the search needs a non-degenerate, nonempty source form")
    if degree_bound < 0 or budget < 0:
        raise ValueError("degree_bound and budget must be non-negative")
    if not coefficients or any(c.is_zero() for c in coefficients):
        raise ValueError("coefficients must be nonzero scalars")
    start = time.perf_counter()
    state = _SweepState(
        source, target, budget, max_findings, within_reduction_bound(source, target)
    )
    coeff_names = "{" + ", ".join(str(c) for c in coefficients) + "}"
    if supports is None:
        patterns = _sweep_monomial_family(
            state, degree_bound, tuple(coefficients), seed, rational_fills
        )
        family = (
            f"one monomial per component, degrees 1..{degree_bound} per map,"
            f" leading coefficient 1, remaining coefficients from {coeff_names}"
            + (f", plus {rational_fills} seeded rational fills per support"
               if rational_fills else "")
        )
    else:
        patterns = _sweep_fixed_supports(
            state, supports, degree_bound, tuple(coefficients)
        )
        family = (
            "fixed per-component supports, leading nonzero coefficient 1,"
            f" remaining coefficients from {coeff_names} or zero"
        )
    return SearchReport(
        source=source,
        target=target,
        degree_bound=degree_bound,
        budget=budget,
        seed=seed,
        family=family,
        supports_enumerated=patterns,
        candidates_tested=state.tested,
        orthogonal_count=state.orthogonal,
        null_count=state.null,
        tag_counts=dict(state.tag_counts),
        findings=tuple(state.findings),
        violations=tuple(state.violations),
        exhausted=state.exhausted,
        in_hypothesis=state.hypothesis,
        elapsed_seconds=time.perf_counter() - start,
    )
