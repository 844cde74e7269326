"""Bridge between an affine hyperquadric model and homogeneous pairs.

The model space carries affine coordinates (z_1, ..., z_{n-1}, zeta) and
embeds into the projectivization of a (1, n)-signature space by a fixed
rational-coefficient map.  Holomorphic polynomial maps written in the
affine coordinates translate into homogeneous map pairs, turning the
family-preservation property of such maps into the divisibility test of
the orthogonal-pair machinery.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from orthopair.hermspace import Signature
from orthopair.mappair import MapPair
from orthopair.poly import GRADED_LEX, MPoly
from orthopair.scalar import ONE, gr

_I = gr(0, 1)
_MINUS_I = gr(0, -1)


def chart_signature(n: int) -> Signature:
    """The homogeneous space the affine chart embeds into."""
    if n < 1:
        raise ValueError("the chart needs at least one affine coordinate")
    return Signature(1, n, 0)


def heisenberg_embedding(n: int) -> Tuple[MPoly, ...]:
    """Components of the embedding of the affine chart.

    (z, zeta) maps to [1 - i*zeta : 2*z_1 : ... : 2*z_{n-1} : 1 + i*zeta]
    in n+1 homogeneous coordinates; the chart lands exactly on null
    points of the (1, n) form when Im(zeta) equals the squared length of
    z, which is the model hypersurface.
    """
    if n < 1:
        raise ValueError("the chart needs at least one affine coordinate")
    one = MPoly(n, {(0,) * n: ONE})
    zeta = MPoly.variable(n, n - 1)
    first = one + zeta.scale(_MINUS_I)
    last = one + zeta.scale(_I)
    middle = [MPoly.variable(n, j).scale(gr(2)) for j in range(n - 1)]
    return tuple([first] + middle + [last])


def segre_pairing_identity(n: int):
    """Exact identity tying the embedded pairing to the model family.

    Returns (embedded, affine, difference): the bilinear pairing of the
    embedding against its conjugate-coefficient copy in fresh variables,
    the polynomial -2i*[(zeta - omega) - 2i*sum_j z_j*xi_j], and their
    difference, which must be identically zero.  Variables are ordered
    z_1..z_{n-1}, zeta, xi_1..xi_{n-1}, omega.
    """
    if n < 2:
        raise ValueError("the identity needs at least two affine coordinates")
    psi = heisenberg_embedding(n)
    sig = chart_signature(n)
    embedded = MPoly.zero(2 * n)
    for i, comp in enumerate(psi):
        left = comp.embed(2 * n, 0)
        right = comp.conj_coefficients().embed(2 * n, n)
        embedded = embedded + (left * right).scale(gr(sig.weight(i)))
    zeta = MPoly.variable(2 * n, n - 1)
    omega = MPoly.variable(2 * n, 2 * n - 1)
    cross = MPoly.zero(2 * n)
    for j in range(n - 1):
        zj = MPoly.variable(2 * n, j)
        xij = MPoly.variable(2 * n, n + j)
        cross = cross + zj * xij
    affine = (zeta - omega + cross.scale(gr(-2) * _I)).scale(gr(-2) * _I)
    return embedded, affine, embedded - affine


def _powers(base: MPoly, count: int):
    one = MPoly(base.n, {(0,) * base.n: ONE})
    out = [one]
    for _ in range(count):
        out.append(out[-1] * base)
    return out


def _homogenize(p: MPoly, n: int, degree: int) -> MPoly:
    """Degree-`degree` homogenization of an affine chart polynomial.

    Substitutes z_j = x_j/u and zeta = -i(x_n - x_0)/u with u = x_0 + x_n,
    then clears the denominator u^degree.
    """
    arity = n + 1
    u = MPoly.variable(arity, 0) + MPoly.variable(arity, n)
    t = (MPoly.variable(arity, n) - MPoly.variable(arity, 0)).scale(_MINUS_I)
    max_zeta = max((exps[n - 1] for exps in p.terms), default=0)
    t_pow = _powers(t, max_zeta)
    u_pow = _powers(u, degree)
    acc = MPoly.zero(arity)
    for exps, c in p.terms.items():
        total = sum(exps)
        if total > degree:
            raise ValueError("homogenization degree below a term's degree")
        mono_exps = [0] * arity
        for j in range(n - 1):
            mono_exps[j + 1] = exps[j]
        mono = MPoly(arity, {tuple(mono_exps): c})
        acc = acc + mono * t_pow[exps[n - 1]] * u_pow[degree - total]
    return acc


def _embed_map(f_affine: Sequence[MPoly], n: int):
    """Homogeneous components of the embedded composite of an affine map.

    The common homogenization degree is the maximum total degree over
    the affine components (constants give degree zero).
    """
    degrees = [
        comp.total_degree() for comp in f_affine if not comp.is_zero()
    ]
    degree = max(degrees, default=0)
    z_parts = [_homogenize(comp, n, degree) for comp in f_affine[:-1]]
    c_part = _homogenize(f_affine[-1], n, degree)
    u = MPoly.variable(n + 1, 0) + MPoly.variable(n + 1, n)
    u_top = _powers(u, degree)[degree]
    first = u_top + c_part.scale(_MINUS_I)
    last = u_top + c_part.scale(_I)
    middle = [comp.scale(gr(2)) for comp in z_parts]
    return [first] + middle + [last]


def _normalized(comps):
    for comp in comps:
        if not comp.is_zero():
            _, c = GRADED_LEX.leading(comp)
            return [p.scale(ONE / c) for p in comps]
    raise ValueError("embedded map has no nonzero component")


def segre_to_orthogonal(
    f1_affine: Sequence[MPoly],
    f2_affine: Sequence[MPoly],
    n: int,
    big_n: int,
) -> MapPair:
    """Translate an affine map pair on the chart into a homogeneous pair.

    Each input is a tuple of big_n polynomials in the n chart variables
    (the final component is the distinguished zeta-type coordinate of the
    image chart).  The first map is embedded directly; the second map is
    read in the conjugate chart, so its composite is embedded with
    conjugated coefficients throughout.  Both homogeneous tuples are
    scaled so their first nonzero component has leading coefficient one.
    """
    if n < 1 or big_n < 1:
        raise ValueError("chart dimensions must be at least one")
    for name, tup in (("f1", f1_affine), ("f2", f2_affine)):
        if len(tup) != big_n:
            raise ValueError(
                f"{name} has {len(tup)} components, the image chart"
                f" needs {big_n}"
            )
        for comp in tup:
            if not isinstance(comp, MPoly):
                raise TypeError(
                    f"{name} components must be polynomials in the chart"
                    " variables"
                )
            if comp.n != n:
                raise ValueError(
                    f"{name} components must use {n} chart variables"
                )
    first = _normalized(_embed_map(f1_affine, n))
    conjugated = [comp.conj_coefficients() for comp in f2_affine]
    second_raw = _embed_map(conjugated, n)
    second = _normalized([comp.conj_coefficients() for comp in second_raw])
    return MapPair(chart_signature(n), chart_signature(big_n), first, second)
