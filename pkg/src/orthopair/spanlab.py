"""Linear-span analysis of polynomial map images on linear subspaces.

How big is the linear span of the image of a linear subspace under a
polynomial map?  Composing the map with a parametrization of the subspace
and expanding in the parameters writes the restricted map as a matrix of
coefficient vectors against monomials in the parameters; since distinct
monomials are linearly independent functions, the span of the image is
the column span of that matrix, and its projective dimension is the
matrix rank minus one.  Generic values over all subspaces of a fixed
dimension are obtained as the maximum over a fixed number of seeded
random samples — the span dimension only drops on special subspaces.
"""

from __future__ import annotations

from typing import Optional, Sequence

from orthopair.hermspace import Signature, Subspace
from orthopair.linalg import rank
from orthopair.mappair import MapPair
from orthopair.poly import MPoly
from orthopair.rng import SeededScalars
from orthopair.scalar import ZERO

#: Samples drawn per genericity measurement.
SAMPLE_COUNT = 5


class SpanReport:
    """Measured span of the image of one linear subspace.

    Projective conventions: subspace_dim is the projective dimension of
    the input subspace, span_dim the projective dimension of the linear
    span of its image (-1 when the composed tuple vanishes identically),
    and coefficient_rank = span_dim + 1 the underlying matrix rank.
    """

    __slots__ = ("subspace_dim", "span_dim", "samples", "coefficient_rank", "warning")

    def __init__(self, subspace_dim, span_dim, samples, coefficient_rank, warning=None):
        object.__setattr__(self, "subspace_dim", subspace_dim)
        object.__setattr__(self, "span_dim", span_dim)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "coefficient_rank", coefficient_rank)
        object.__setattr__(self, "warning", warning)

    def __setattr__(self, name, value):
        raise AttributeError("SpanReport is immutable")

    def __repr__(self) -> str:
        return (
            f"SpanReport(subspace_dim={self.subspace_dim}, span_dim={self.span_dim}, "
            f"samples={self.samples}, coefficient_rank={self.coefficient_rank})"
        )


def coefficient_vectors(f: Sequence[MPoly]) -> list:
    """One vector per monomial appearing anywhere in the tuple, holding
    that monomial's coefficient in each component.  Distinct monomials
    are linearly independent functions, so these vectors span exactly the
    linear span of the tuple's image."""
    exponents = sorted({exp for comp in f for exp in comp.terms})
    return [[comp.terms.get(exp, ZERO) for comp in f] for exp in exponents]


def coefficient_span_rank(f: Sequence[MPoly]) -> int:
    """Dimension of the linear span of the tuple's image."""
    return rank(coefficient_vectors(f))


def image_span(f: Sequence[MPoly], target: Signature) -> Subspace:
    """The linear span of the tuple's image as a subspace of the target."""
    if len(f) != target.n:
        raise ValueError("tuple length does not match the target dimension")
    return Subspace.spanned_by(target, coefficient_vectors(f))


def image_span_dim(f: Sequence[MPoly], subspace: Subspace) -> SpanReport:
    """Span of the image of one subspace under the polynomial tuple.

    The subspace's basis parametrizes it linearly; the tuple is composed
    with that parametrization and the span is read off the coefficient
    matrix of the result.
    """
    if not f:
        raise ValueError("empty polynomial tuple")
    m = subspace.dim
    arity = f[0].n
    if subspace.ambient.n != arity:
        raise ValueError("subspace lives in a different space than the tuple's source")
    if m == 0:
        # only a constant component survives evaluation at the origin
        images = [
            MPoly(0, {(): comp.terms.get((0,) * arity, ZERO)}) for comp in f
        ]
    else:
        substitution = [
            sum(
                (MPoly.variable(m, j).scale(subspace.basis[j][i]) for j in range(m)),
                MPoly.zero(m),
            )
            for i in range(arity)
        ]
        images = [comp.compose(substitution) for comp in f]
    warning = None
    if all(comp.is_zero() for comp in images):
        warning = "composed tuple vanishes identically; span of the empty set"
        crank = 0
    else:
        crank = coefficient_span_rank(images)
    return SpanReport(
        subspace_dim=m - 1,
        span_dim=crank - 1,
        samples=1,
        coefficient_rank=crank,
        warning=warning,
    )


def random_subspace(sig: Signature, dim: int, rng: SeededScalars) -> Subspace:
    """A random subspace of the given dimension (exact, seeded)."""
    if not 0 <= dim <= sig.n:
        raise ValueError(f"subspace dimension {dim} out of range")
    while True:
        rows = [rng.vector(sig.n) for _ in range(dim)]
        try:
            return Subspace(sig, rows)
        except ValueError:
            continue


def generic_plane_map_degree(
    f: Sequence[MPoly],
    l: int,
    source: Optional[Signature] = None,
    seed: int = 0,
) -> int:
    """Projective span dimension of the image of a generic l-plane.

    Samples a fixed number of seeded random (l+1)-dimensional subspaces
    and takes the maximum measured span: the span dimension can only drop
    on special planes, so the maximum over independent samples is the
    generic value.
    """
    if not f:
        raise ValueError("empty polynomial tuple")
    arity = f[0].n
    if source is None:
        source = Signature(arity, 0, 0)
    if source.n != arity:
        raise ValueError("signature dimension does not match the tuple's variables")
    if not 0 <= l <= arity - 1:
        raise ValueError(f"plane dimension {l} out of range")
    rng = SeededScalars(seed)
    best = -1
    for _ in range(SAMPLE_COUNT):
        subspace = random_subspace(source, l + 1, rng)
        best = max(best, image_span_dim(f, subspace).span_dim)
    return best


class PropagationReport:
    """Table of measured generic spans for growing plane dimensions."""

    __slots__ = ("base_dim", "base_span", "rows", "passed")

    def __init__(self, base_dim, base_span, rows, passed):
        object.__setattr__(self, "base_dim", base_dim)
        object.__setattr__(self, "base_span", base_span)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "passed", passed)

    def __setattr__(self, name, value):
        raise AttributeError("PropagationReport is immutable")

    def __repr__(self) -> str:
        return (
            f"PropagationReport(base=({self.base_dim}, {self.base_span}), "
            f"rows={self.rows!r}, passed={self.passed})"
        )


def check_plane_propagation(
    f: Sequence[MPoly],
    l: int,
    source: Optional[Signature] = None,
    seed: int = 0,
) -> PropagationReport:
    """Verify that generic spans grow at most linearly with plane size.

    With l' the generic span of l-planes, requires l' <= 2l - 1 (the
    propagation hypothesis; maps whose small-plane spans are too big are
    rejected), then checks that (l+k)-planes generically span at most
    (l'+k)-planes for every k up to the whole space.
    """
    if not f:
        raise ValueError("empty polynomial tuple")
    arity = f[0].n
    base_span = generic_plane_map_degree(f, l, source, seed)
    if base_span > 2 * l - 1:
        raise ValueError(
            f"hypothesis violated: generic span {base_span} of {l}-planes "
            f"exceeds {2 * l - 1}"
        )
    rows = []
    passed = True
    for k in range(arity - l):
        measured = generic_plane_map_degree(f, l + k, source, seed)
        bound = base_span + k
        ok = measured <= bound
        passed = passed and ok
        rows.append((l + k, measured, bound, ok))
    return PropagationReport(l, base_span, rows, passed)


def is_degenerate_pair(pair: MapPair):
    """Per-component degeneracy: does the truncation to the nonzero-weight
    target block span less than the full source projective dimension?

    A component whose truncation vanishes identically is degenerate by
    convention (the span of the empty set is everything's subset).
    """
    keep = pair.target.r + pair.target.s
    source_dim = pair.source.r + pair.source.s - 1
    whole = Subspace.whole(pair.source)
    flags = []
    for tup in (pair.f1, pair.f2):
        truncated = list(tup[:keep])
        if all(comp.is_zero() for comp in truncated):
            flags.append(True)
            continue
        report = image_span_dim(truncated, whole)
        flags.append(report.span_dim < source_dim)
    return tuple(flags)
