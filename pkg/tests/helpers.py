"""Shared fixture builders for the test suite."""

from orthopair.hermspace import Signature
from orthopair.mappair import MapPair
from orthopair.poly import MPoly
from orthopair.scalar import gr


def v(n, i):
    return MPoly.variable(n, i)


def zero(n):
    return MPoly.zero(n)


def identity_pair(r, s):
    """The identity map on both sides of a non-degenerate space."""
    sig = Signature(r, s, 0)
    f = [v(sig.n, i) for i in range(sig.n)]
    return MapPair(sig, sig, f, f)


def quadric_mixed_pair():
    """A degree-two pair into a seven-dimensional (3; 4) space whose
    pairing factors through the source form with a linear quotient; the
    two sides carry the irrational-weight direction as an asymmetric 2/1
    coefficient split."""
    n = 4
    z1, z2, z3, z4 = (v(n, i) for i in range(n))
    f1 = [z1 * z1, z2 * z2, z1 * z2, z3 * z3, z4 * z4, (z3 * z4).scale(2), z1 * z2]
    f2 = [z1 * z1, z2 * z2, z1 * z2, z3 * z3, z4 * z4, z3 * z4, (z1 * z2).scale(-1)]
    return MapPair(Signature(2, 2, 0), Signature(3, 4, 0), f1, f2)


def truncated_quadric_pair():
    """The same pair with the null-direction content dropped: no longer
    orthogonal."""
    n = 4
    z1, z2, z3, z4 = (v(n, i) for i in range(n))
    f1 = [z1 * z1, z2 * z2, z3 * z3, z4 * z4, (z3 * z4).scale(2)]
    f2 = [z1 * z1, z2 * z2, z3 * z3, z4 * z4, z3 * z4]
    return MapPair(Signature(2, 2, 0), Signature(2, 3, 0), f1, f2)


def linear_quadratic_pair():
    """A linear first map beside a quadratic second map, orthogonal with
    pairing equal to a coordinate times the source form."""
    f1 = [v(2, 0), zero(2), v(2, 1), zero(2)]
    w1, w2 = v(2, 0), v(2, 1)
    f2 = [w1 * w1, w2 * w2, w1 * w2, w1 * w2]
    return MapPair(Signature(1, 1, 0), Signature(2, 2, 0), f1, f2)


def null_pair():
    """Disjoint supports: the pairing polynomial vanishes identically."""
    f1 = [v(2, 0), v(2, 1), zero(2), zero(2)]
    f2 = [zero(2), zero(2), v(2, 0), v(2, 1)]
    return MapPair(Signature(1, 1, 0), Signature(2, 2, 0), f1, f2)


def scaled_identity_pair(c1, c2):
    """Identity components scaled by constants on each side."""
    sig = Signature(1, 1, 0)
    f1 = [v(2, i).scale(gr(c1)) for i in range(2)]
    f2 = [v(2, i).scale(gr(c2)) for i in range(2)]
    return MapPair(sig, sig, f1, f2)
