"""Hermitian coordinate spaces of mixed signature.

The standard form on a space with signature (r; s; t) weighs the first r
coordinates by +1, the next s by -1, and ignores the final t: the pairing
of z and w is

    z_1 conj(w_1) + ... + z_r conj(w_r) - z_{r+1} conj(w_{r+1}) - ...

Subspaces carry the signature of the restricted form, computed exactly by
congruence diagonalization, and the class invariantly bounds how that
restricted signature can sit inside the ambient one.  Projections are only
defined onto subspaces whose restricted form is non-degenerate; the
degenerate directions of a subspace can be split off first.
"""

from __future__ import annotations

from typing import Optional, Sequence

from orthopair.linalg import (
    Matrix,
    Vector,
    identity,
    in_row_span,
    kernel_basis,
    rank,
    rref,
    solve,
    vec,
)
from orthopair.scalar import GaussianRational, I, ONE, ZERO


class Signature:
    """Multiplicities (r; s; t) of the +1, -1, and 0 weights."""

    __slots__ = ("r", "s", "t")

    def __init__(self, r: int, s: int, t: int = 0):
        for name, value in (("r", r), ("s", s), ("t", t)):
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer")
        if r + s + t < 1:
            raise ValueError("dimension must be at least 1")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    def __setattr__(self, name, value):
        raise AttributeError("Signature is immutable")

    @property
    def n(self) -> int:
        return self.r + self.s + self.t

    def weight(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"coordinate {i} out of range for dimension {self.n}")
        if i < self.r:
            return 1
        if i < self.r + self.s:
            return -1
        return 0

    def weights(self) -> list:
        return [1] * self.r + [-1] * self.s + [0] * self.t

    def __eq__(self, other) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return (self.r, self.s, self.t) == (other.r, other.s, other.t)

    def __hash__(self) -> int:
        return hash((self.r, self.s, self.t))

    def __repr__(self) -> str:
        return f"Signature({self.r}, {self.s}, {self.t})"


def inner_product(z: Sequence, w: Sequence, sig: Signature) -> GaussianRational:
    """The standard pairing of two coordinate vectors."""
    z, w = vec(z), vec(w)
    if len(z) != sig.n or len(w) != sig.n:
        raise ValueError(
            f"vector length mismatch: expected {sig.n}, got {len(z)} and {len(w)}"
        )
    acc = ZERO
    for i in range(sig.r):
        acc = acc + z[i] * w[i].conj()
    for i in range(sig.r, sig.r + sig.s):
        acc = acc - z[i] * w[i].conj()
    return acc


def form_value(c: Sequence, d: Sequence, gram: Matrix) -> GaussianRational:
    """The sesquilinear form c^T gram conj(d) for an arbitrary Gram matrix."""
    acc = ZERO
    for i, ci in enumerate(c):
        if ci.is_zero():
            continue
        row = gram[i]
        for j, dj in enumerate(d):
            if not dj.is_zero():
                acc = acc + ci * row[j] * dj.conj()
    return acc


def gram_matrix(basis: Sequence[Sequence], sig: Signature) -> Matrix:
    """Pairwise inner products: entry (i, j) is the pairing of b_i with b_j."""
    rows = [vec(b) for b in basis]
    return [[inner_product(bi, bj, sig) for bj in rows] for bi in rows]


def is_hermitian(m: Matrix) -> bool:
    if any(len(row) != len(m) for row in m):
        return False
    return all(
        m[i][j] == m[j][i].conj() for i in range(len(m)) for j in range(i, len(m))
    )


def congruence_diagonalize(gram: Matrix):
    """Combination rows C and real weights d with the form diagonal on C.

    Returns (C, d) where C is a list of rows expressing new vectors as
    combinations of the original basis and d[i] is the self-pairing of
    C[i]; all cross pairings vanish.  The form is evaluated through the
    given Gram matrix, which must be Hermitian.
    """
    m = len(gram)
    c = identity(m)

    def form(u, v):
        return form_value(u, v, gram)

    for k in range(m):
        if form(c[k], c[k]).is_zero():
            swap = next(
                (
                    j
                    for j in range(k + 1, m)
                    if not form(c[j], c[j]).is_zero()
                ),
                None,
            )
            if swap is not None:
                c[k], c[swap] = c[swap], c[k]
            else:
                partner = next(
                    (
                        j
                        for j in range(k + 1, m)
                        if not form(c[k], c[j]).is_zero()
                    ),
                    None,
                )
                if partner is None:
                    continue  # c[k] pairs to zero with everything remaining
                f = form(c[k], c[partner])
                # adding the partner (times i if the real part vanishes)
                # makes the self-pairing 2 Re(f) or 2 Im(f), both nonzero
                if f.re != 0:
                    c[k] = [x + y for x, y in zip(c[k], c[partner])]
                else:
                    c[k] = [x + I * y for x, y in zip(c[k], c[partner])]
        delta = form(c[k], c[k])
        if delta.is_zero():
            continue
        for j in range(k + 1, m):
            lam = form(c[j], c[k]) / delta
            if not lam.is_zero():
                c[j] = [x - lam * y for x, y in zip(c[j], c[k])]
    d = []
    for row in c:
        val = form(row, row)
        if not val.is_real():
            raise AssertionError("self-pairing of a diagonalized vector is not real")
        d.append(val)
    for i in range(m):
        for j in range(i + 1, m):
            if not form(c[i], c[j]).is_zero():
                raise AssertionError("congruence diagonalization left a cross term")
    return c, d


def signature_of_hermitian(m: Matrix) -> Signature:
    """Counts of positive, negative, and zero weights after exact
    congruence diagonalization of a Hermitian matrix."""
    if not is_hermitian(m):
        raise ValueError("matrix is not Hermitian")
    if not m:
        raise ValueError("empty matrix has no signature")
    _, d = congruence_diagonalize(m)
    pos = sum(1 for x in d if x.re > 0)
    neg = sum(1 for x in d if x.re < 0)
    return Signature(pos, neg, len(d) - pos - neg)


class Subspace:
    """A linear subspace with the signature of the restricted form.

    The basis is stored as given (after scalar coercion); independence is
    checked exactly, and the restricted signature (a; b; c) is computed on
    construction and always satisfies a <= r, b <= s, and
    c <= min(r - a, s - b) + t inside an ambient (r; s; t).
    """

    __slots__ = ("ambient", "basis", "restricted_signature")

    def __init__(self, ambient: Signature, basis: Sequence[Sequence]):
        rows = [vec(b) for b in basis]
        for row in rows:
            if len(row) != ambient.n:
                raise ValueError(
                    f"basis vector length {len(row)} does not match dimension {ambient.n}"
                )
        if rank(rows) != len(rows):
            raise ValueError("basis vectors are not linearly independent")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", rows)
        if rows:
            sig = signature_of_hermitian(gram_matrix(rows, ambient))
        else:
            sig = None
        object.__setattr__(self, "restricted_signature", sig)
        if sig is not None:
            a, b, c = sig.r, sig.s, sig.t
            bound = min(ambient.r - a, ambient.s - b) + ambient.t
            if a > ambient.r or b > ambient.s or c > bound:
                raise AssertionError(
                    "restricted signature violates the ambient bounds"
                )

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def spanned_by(cls, ambient: Signature, vectors: Sequence[Sequence]):
        """The subspace spanned by possibly dependent vectors."""
        rows = [vec(v) for v in vectors]
        rows = [row for row in rows if any(not x.is_zero() for x in row)]
        if not rows:
            return cls(ambient, [])
        reduced, pivots = rref(rows)
        return cls(ambient, reduced[: len(pivots)])

    @classmethod
    def whole(cls, ambient: Signature):
        return cls(ambient, identity(ambient.n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return in_row_span(self.basis, vec(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def same_span_as(self, other: "Subspace") -> bool:
        return self.contains_subspace(other) and other.contains_subspace(self)

    def embed(self, coords: Sequence) -> Vector:
        """The ambient vector with the given coordinates in this basis."""
        coords = vec(coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate length does not match dimension")
        out = [ZERO] * self.ambient.n
        for x, b in zip(coords, self.basis):
            for i in range(len(out)):
                out[i] = out[i] + x * b[i]
        return out

    def coordinates_of(self, v: Sequence) -> Optional[Vector]:
        """Coordinates of v in this basis, or None if v lies outside."""
        columns = [[b[i] for b in self.basis] for i in range(self.ambient.n)]
        return solve(columns, vec(v))

    def __repr__(self) -> str:
        return (
            f"Subspace(dim={self.dim}, ambient={self.ambient!r}, "
            f"restricted={self.restricted_signature!r})"
        )


def restrict_form(s: Subspace) -> Matrix:
    """Gram matrix of the subspace basis under the ambient form."""
    return gram_matrix(s.basis, s.ambient)


def orthogonal_complement(s: Subspace) -> Subspace:
    """All vectors pairing to zero with every basis vector of s."""
    n = s.ambient.n
    weights = s.ambient.weights()
    system = [
        [GaussianRational(weights[i]) * b[i].conj() for i in range(n)]
        for b in s.basis
    ]
    return Subspace(s.ambient, kernel_basis(system, ncols=n))


def nondegenerate_part(s: Subspace) -> Subspace:
    """A maximal subspace of s on which the restricted form is
    non-degenerate, positive directions listed first."""
    sig = s.restricted_signature
    if sig is None or (sig.r, sig.s) == (0, 0):
        raise ValueError("totally null span")
    combos, d = congruence_diagonalize(restrict_form(s))
    kept = [
        (combo, weight)
        for combo, weight in zip(combos, d)
        if not weight.is_zero()
    ]
    kept.sort(key=lambda cw: 0 if cw[1].re > 0 else 1)
    return Subspace(s.ambient, [s.embed(combo) for combo, _ in kept])


def project(v: Sequence, s: Subspace) -> Vector:
    """Coordinates, in the basis of s, of the component of v along s in
    the splitting of the whole space as s plus its complement."""
    sig = s.restricted_signature
    if sig is not None and sig.t > 0:
        raise ValueError("cannot project onto a degenerate subspace")
    v = vec(v)
    if len(v) != s.ambient.n:
        raise ValueError("vector length does not match dimension")
    gram = restrict_form(s)
    system = [[gram[i][k] for i in range(s.dim)] for k in range(s.dim)]
    rhs = [inner_product(v, b, s.ambient) for b in s.basis]
    x = solve(system, rhs)
    if x is None:
        raise AssertionError("projection system is inconsistent")
    return x
