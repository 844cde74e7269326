"""Pairs of homogeneous polynomial maps and the orthogonal-pair test.

A pair is two polynomial maps into one target space, the first read in
the source variables z, the second in an independent copy w.  Their
interaction is captured by the pairing polynomial: couple the component
tuples through the target form, replacing the conjugated second map by a
conjugated-coefficient copy in a fresh variable block xi.  The pair is
orthogonal exactly when the complexified source form divides the pairing
polynomial — the source form is squarefree for every signature, so
divisibility is the same as vanishing wherever the source form vanishes.
"""

from __future__ import annotations

from typing import Optional, Sequence

from orthopair.hermspace import (
    Signature,
    Subspace,
    congruence_diagonalize,
    restrict_form,
)
from orthopair.poly import ANY_DEGREE, GRADED_LEX, MPoly, reduce_mod, tuple_gcd
from orthopair.rng import SeededScalars
from orthopair.scalar import GaussianRational, ONE, ZERO


class MapPair:
    """Two homogeneous polynomial maps into a common target space.

    Component tuples have the target's length, are read in the source's
    number of variables, may have different degrees, and each contains at
    least one nonzero component.
    """

    __slots__ = ("source", "target", "f1", "f2")

    def __init__(
        self,
        source: Signature,
        target: Signature,
        f1: Sequence[MPoly],
        f2: Sequence[MPoly],
    ):
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "f1", tuple(f1))
        object.__setattr__(self, "f2", tuple(f2))
        for name, tup in (("f1", self.f1), ("f2", self.f2)):
            if len(tup) != target.n:
                raise ValueError(
                    f"{name} has {len(tup)} components, target needs {target.n}"
                )
            for comp in tup:
                if not isinstance(comp, MPoly):
                    raise TypeError(f"{name} components must be polynomials")
                if comp.n != source.n:
                    raise ValueError(
                        f"{name} components must use {source.n} variables"
                    )
            self._common_degree(name, tup)

    def __setattr__(self, name, value):
        raise AttributeError("MapPair is immutable")

    @staticmethod
    def _common_degree(name: str, tup) -> int:
        degrees = set()
        for comp in tup:
            d = comp.homogeneous_degree()
            if d is None:
                raise ValueError(f"{name} has a non-homogeneous component")
            if d is not ANY_DEGREE:
                degrees.add(d)
        if not degrees:
            raise ValueError(f"{name} has no nonzero component")
        if len(degrees) > 1:
            raise ValueError(
                f"{name} components mix degrees {sorted(degrees)}"
            )
        return degrees.pop()

    @property
    def degree1(self) -> int:
        return self._common_degree("f1", self.f1)

    @property
    def degree2(self) -> int:
        return self._common_degree("f2", self.f2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MapPair):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.f1 == other.f1
            and self.f2 == other.f2
        )

    def __repr__(self) -> str:
        return (
            f"MapPair(source={self.source!r}, target={self.target!r}, "
            f"degrees=({self.degree1}, {self.degree2}))"
        )


class PairingPolynomial:
    """The coupled form of a pair: a polynomial in the doubled variable
    block (z variables first, then xi), homogeneous in each block."""

    __slots__ = ("g", "source_arity", "bidegree")

    def __init__(self, g: MPoly, source_arity: int):
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "source_arity", source_arity)
        object.__setattr__(self, "bidegree", self._check_bidegree())

    def __setattr__(self, name, value):
        raise AttributeError("PairingPolynomial is immutable")

    def _check_bidegree(self):
        n = self.source_arity
        if self.g.is_zero():
            return None
        z_degrees = {sum(exp[:n]) for exp in self.g.terms}
        xi_degrees = {sum(exp[n:]) for exp in self.g.terms}
        if len(z_degrees) > 1 or len(xi_degrees) > 1:
            raise AssertionError("pairing polynomial is not bihomogeneous")
        return (z_degrees.pop(), xi_degrees.pop())

    def is_zero(self) -> bool:
        return self.g.is_zero()


def pairing_polynomial(pair: MapPair) -> PairingPolynomial:
    """Couple the two maps through the target form.

    The second map contributes with conjugated coefficients and its
    variables moved to the xi block; target coordinates of weight zero do
    not contribute.
    """
    n = pair.source.n
    g = MPoly.zero(2 * n)
    for i, weight in enumerate(pair.target.weights()):
        if weight == 0:
            continue
        left = pair.f1[i].embed(2 * n, 0)
        right = pair.f2[i].conj_coefficients().embed(2 * n, n)
        term = left * right
        g = g + term if weight > 0 else g - term
    return PairingPolynomial(g, n)


def source_form(pair_or_sig) -> MPoly:
    """The complexified source form in the doubled variable block."""
    sig = pair_or_sig.source if isinstance(pair_or_sig, MapPair) else pair_or_sig
    if sig.r + sig.s == 0:
        raise ValueError("vacuous source form")
    n = sig.n
    terms = {}
    for i, weight in enumerate(sig.weights()):
        if weight == 0:
            continue
        exp = [0] * (2 * n)
        exp[i] = 1
        exp[n + i] = 1
        terms[tuple(exp)] = GaussianRational(weight)
    return MPoly(2 * n, terms)


class OrthogonalityVerdict:
    """Outcome of the orthogonality test.

    Either orthogonal, or not with an exact witness: a point pair where
    the source form vanishes but the pairing does not.  A note flags
    definite sources, where the vanishing locus has no projective points
    and the defining condition holds vacuously.
    """

    __slots__ = ("orthogonal", "witness", "note")

    def __init__(self, orthogonal: bool, witness=None, note: Optional[str] = None):
        object.__setattr__(self, "orthogonal", orthogonal)
        object.__setattr__(self, "witness", witness)
        object.__setattr__(self, "note", note)

    def __setattr__(self, name, value):
        raise AttributeError("OrthogonalityVerdict is immutable")

    def __bool__(self) -> bool:
        return self.orthogonal

    def __repr__(self) -> str:
        tag = "orthogonal" if self.orthogonal else f"not orthogonal, witness={self.witness!r}"
        if self.note:
            tag += f" ({self.note})"
        return f"OrthogonalityVerdict({tag})"


def _definiteness_note(sig: Signature) -> Optional[str]:
    if sig.t == 0 and (sig.r == 0 or sig.s == 0):
        return (
            "definite source: the form has no nonzero null vectors, so the "
            "defining condition is vacuous and the verdict is purely algebraic"
        )
    return None


def null_form_points(source: Signature, count: int, seed: int = 0) -> list:
    """Deterministic sample of point pairs where the source form vanishes.

    Each sample fixes one side, picks a coordinate with nonzero weight and
    nonzero value as pivot, draws the other side freely except at the
    pivot, and solves for the pivot value.  Sides alternate so that for a
    rank-one form both branches of the vanishing locus are covered.
    """
    if source.r + source.s == 0:
        raise ValueError("vacuous source form")
    rng = SeededScalars(seed)
    n = source.n
    weights = source.weights()
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * (count + 1):
            raise RuntimeError("failed to sample the vanishing locus")
        flip = len(out) % 2 == 1
        z = rng.vector(n)
        pivot = next(
            (i for i in range(source.r + source.s) if not z[i].is_zero()), None
        )
        if pivot is None:
            continue
        xi = rng.vector(n)
        acc = ZERO
        for i in range(source.r + source.s):
            if i != pivot:
                acc = acc + GaussianRational(weights[i]) * z[i] * xi[i]
        xi[pivot] = -acc / (GaussianRational(weights[pivot]) * z[pivot])
        out.append((xi, z) if flip else (z, xi))
    return out


def is_orthogonal(pair: MapPair, seed: int = 0) -> OrthogonalityVerdict:
    """Divisibility of the pairing polynomial by the source form.

    The source form is squarefree (irreducible for rank at least two, a
    product of two distinct linear factors for rank one), so divisibility
    is equivalent to the pairing vanishing wherever the source form does.
    On a negative verdict an exact witness point pair is attached.
    """
    b = source_form(pair)
    g = pairing_polynomial(pair).g
    note = _definiteness_note(pair.source)
    _, remainder = reduce_mod(g, b, GRADED_LEX)
    if remainder.is_zero():
        return OrthogonalityVerdict(True, note=note)
    witness = _find_witness(pair, b, g, seed)
    return OrthogonalityVerdict(False, witness=witness, note=note)


def _find_witness(pair: MapPair, b: MPoly, g: MPoly, seed: int):
    for z, xi in null_form_points(pair.source, 400, seed):
        point = list(z) + list(xi)
        if not b.evaluate(point).is_zero():
            raise AssertionError("sampled point misses the vanishing locus")
        if not g.evaluate(point).is_zero():
            return (z, xi)
    raise RuntimeError(
        "no witness found although the pairing is not divisible; "
        "retry with a different seed"
    )


def projection_matrix(s: Subspace):
    """Linear data of the projection onto a non-degenerate subspace.

    Returns (rows, weights, basis): basis lists diagonalizing vectors of
    s in the ambient space, the restricted form on them is diag(weights)
    with nonzero real entries sorted positive-first, and applying a row
    to an ambient vector (no conjugation — the projection is linear)
    yields the corresponding diagonal coordinate of its component in s.
    """
    sig = s.restricted_signature
    if sig is None or sig.t > 0:
        raise ValueError("cannot project onto a degenerate subspace")
    combos, diag = congruence_diagonalize(restrict_form(s))
    order = sorted(range(s.dim), key=lambda i: 0 if diag[i].re > 0 else 1)
    basis = [s.embed(combos[i]) for i in order]
    weights = [diag[i] for i in order]
    ambient_weights = s.ambient.weights()
    rows = []
    for u, d in zip(basis, weights):
        inv = ONE / d
        rows.append(
            [
                inv * GaussianRational(ambient_weights[j]) * u[j].conj()
                for j in range(s.ambient.n)
            ]
        )
    return rows, weights, basis


def _apply_row(row, comps, arity: int) -> MPoly:
    acc = MPoly.zero(arity)
    for c, comp in zip(row, comps):
        if not c.is_zero() and not comp.is_zero():
            acc = acc + comp.scale(c)
    return acc


def _projected_tuples(pair: MapPair, s: Subspace):
    """Both tuples composed with the projection onto s, in the standard
    presentation (f1 side rescaled by the weight sizes), plus the new
    target signature.  No zero-image checks."""
    if s.ambient != pair.target:
        raise ValueError("subspace lies in a different space than the target")
    if s.dim == 0:
        raise ValueError("cannot project onto the zero subspace")
    rows, weights, _ = projection_matrix(s)
    pos = sum(1 for d in weights if d.re > 0)
    new_target = Signature(pos, len(weights) - pos, 0)
    new_f1 = []
    new_f2 = []
    for row, d in zip(rows, weights):
        size = d if d.re > 0 else -d
        new_f1.append(_apply_row(row, pair.f1, pair.source.n).scale(size))
        new_f2.append(_apply_row(row, pair.f2, pair.source.n))
    return new_f1, new_f2, new_target


def project_pair(pair: MapPair, s: Subspace, normalize: bool = True) -> MapPair:
    """Compose both maps with the projection onto a non-degenerate
    subspace of the target, presented in standard-form coordinates.

    The subspace is diagonalized; because the diagonal weights need not
    be unit, the presentation rescales the first map's coordinates by the
    weight sizes, which preserves the pairing while keeping every entry
    exact.  With normalize=True both projected tuples are reduced to
    primitive form; a tuple projecting to zero has its image in the
    indeterminacy locus and is an error either way.
    """
    new_f1, new_f2, new_target = _projected_tuples(pair, s)
    for name, tup in (("f1", new_f1), ("f2", new_f2)):
        if all(comp.is_zero() for comp in tup):
            raise ValueError(f"image in indeterminacy locus: {name} projects to zero")
    if normalize:
        _, new_f1 = tuple_gcd(new_f1)
        _, new_f2 = tuple_gcd(new_f2)
    return MapPair(pair.source, new_target, new_f1, new_f2)


def projection_pairing(pair: MapPair, s: Subspace) -> MPoly:
    """Pairing polynomial of the pair's projection onto a non-degenerate
    subspace, as a bare polynomial in the doubled variable set.

    Unlike project_pair this never rejects zero images, so it applies to
    decompositions where one side of the pair has no component in s; for
    any orthogonal decomposition of the target into s and its complement
    the two projection pairings add up to the full pairing polynomial.
    """
    new_f1, new_f2, new_target = _projected_tuples(pair, s)
    n = pair.source.n
    acc = MPoly.zero(2 * n)
    for i in range(new_target.n):
        w = new_target.weight(i)
        if w == 0 or new_f1[i].is_zero() or new_f2[i].is_zero():
            continue
        left = new_f1[i].embed(2 * n, 0)
        right = new_f2[i].conj_coefficients().embed(2 * n, n)
        term = left * right
        acc = acc + term if w > 0 else acc - term
    return acc


def drop_null_target_coordinates(pair: MapPair) -> MapPair:
    """Forget the weight-zero target coordinates.

    The complementary component maps into the weight-zero block, where
    every pair pairs to zero, so this never changes the orthogonality
    verdict.
    """
    t = pair.target
    if t.t == 0:
        return pair
    if t.r + t.s == 0:
        raise ValueError("target form is identically zero")
    keep = t.r + t.s
    f1 = pair.f1[:keep]
    f2 = pair.f2[:keep]
    for name, tup in (("f1", f1), ("f2", f2)):
        if all(comp.is_zero() for comp in tup):
            raise ValueError(f"image in indeterminacy locus: {name} projects to zero")
    return MapPair(pair.source, Signature(t.r, t.s, 0), f1, f2)
