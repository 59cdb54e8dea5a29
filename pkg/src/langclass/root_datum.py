"""Based root data in fixed coordinates.

The character lattice and the cocharacter lattice are both identified with
``Z^rank``; the pairing between them is the dot product. Exponents and other
real parameters are exact :class:`fractions.Fraction` values throughout the
package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import lattice
from .errors import (
    CartanSignViolation,
    DependentRoots,
    DimensionMismatch,
    PairingViolation,
)

LatticeVector = tuple  # tuple[int, ...]
CartanMatrix = tuple  # l x l tuple of int rows


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """The pairing of a character ``x`` with a cocharacter ``y``."""
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True)
class BasedRootDatum:
    """Simple roots and coroots in ``Z^rank``.

    Construct through :func:`new_based_root_datum` (or :func:`gln_datum`),
    which validates the axioms. ``standard_basis`` records that the
    coordinates are an orthonormal ``e_i`` basis permuted by the Weyl group,
    as for ``GL_n``; it selects the default invariant form and the default
    lattice extension of diagram automorphisms.
    """

    rank: int
    simple_roots: tuple[LatticeVector, ...]
    simple_coroots: tuple[LatticeVector, ...]
    standard_basis: bool = False

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def cartan(self) -> CartanMatrix:
        return cartan_matrix(self)


def _as_int_vectors(vectors, rank: int, what: str) -> tuple[LatticeVector, ...]:
    out = []
    for v in vectors:
        v = tuple(v)
        if len(v) != rank:
            raise DimensionMismatch(f"{what} {list(v)} has length {len(v)}, expected rank {rank}")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            raise DimensionMismatch(f"{what} {list(v)} must have integer entries")
        out.append(v)
    return tuple(out)


def new_based_root_datum(
    rank: int,
    simple_roots: Sequence[Sequence[int]],
    simple_coroots: Sequence[Sequence[int]],
    standard_basis: bool = False,
) -> BasedRootDatum:
    """Validate and build a based root datum.

    Raises:
        DimensionMismatch: wrong vector lengths or misaligned root/coroot lists.
        PairingViolation: some ``<alpha_i, alpha_i^vee> != 2``.
        CartanSignViolation: positive off-diagonal Cartan entry, or
            ``C_ij = 0`` without ``C_ji = 0``.
        DependentRoots: roots or coroots are linearly dependent over Q.
    """
    if not isinstance(rank, int) or rank < 1:
        raise DimensionMismatch(f"rank must be a positive integer, got {rank!r}")
    roots = _as_int_vectors(simple_roots, rank, "simple root")
    coroots = _as_int_vectors(simple_coroots, rank, "simple coroot")
    if len(roots) != len(coroots):
        raise DimensionMismatch(f"{len(roots)} simple roots but {len(coroots)} simple coroots")
    for i, (a, c) in enumerate(zip(roots, coroots)):
        if pairing(a, c) != 2:
            raise PairingViolation(
                f"<alpha_{i}, alpha_{i}^vee> = {pairing(a, c)}, must be 2"
            )
    l = len(roots)
    for i in range(l):
        for j in range(l):
            if i == j:
                continue
            cij = pairing(roots[i], coroots[j])
            cji = pairing(roots[j], coroots[i])
            if cij > 0:
                raise CartanSignViolation(f"Cartan entry C[{i}][{j}] = {cij} > 0")
            if (cij == 0) != (cji == 0):
                raise CartanSignViolation(
                    f"C[{i}][{j}] = {cij} but C[{j}][{i}] = {cji}; zeros must be symmetric"
                )
    if lattice.rational_rank(roots) != l:
        raise DependentRoots("simple roots are linearly dependent")
    if lattice.rational_rank(coroots) != l:
        raise DependentRoots("simple coroots are linearly dependent")
    return BasedRootDatum(rank, roots, coroots, bool(standard_basis))


def gln_datum(n: int) -> BasedRootDatum:
    """Root datum of ``GL_n`` with simple roots ``e_i - e_{i+1}``."""
    if n < 1:
        raise DimensionMismatch(f"n must be >= 1, got {n}")
    roots = [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)]
    return new_based_root_datum(n, roots, roots, standard_basis=True)


def dual(datum: BasedRootDatum) -> BasedRootDatum:
    """Swap roots with coroots (and the character lattice with the cocharacter lattice)."""
    return BasedRootDatum(
        datum.rank, datum.simple_coroots, datum.simple_roots, datum.standard_basis
    )


def cartan_matrix(datum: BasedRootDatum) -> CartanMatrix:
    """``C[i][j] = <alpha_i, alpha_j^vee>``."""
    return tuple(
        tuple(pairing(a, c) for c in datum.simple_coroots) for a in datum.simple_roots
    )


def root_coordinates(datum: BasedRootDatum, v: Sequence[int]) -> tuple[Fraction, ...]:
    """Coordinates of ``v`` in the simple roots, via the coroot pairings.

    Only meaningful for ``v`` in the rational span of the simple roots, and
    needs an invertible Cartan matrix (finite type).
    """
    p = tuple(pairing(v, c) for c in datum.simple_coroots)
    cinv_t = _cartan_inverse_transpose(datum)
    return lattice.matvec(cinv_t, p)


@lru_cache(maxsize=256)
def _cartan_inverse_transpose(datum: BasedRootDatum):
    c = cartan_matrix(datum)
    return lattice.inverse(lattice.transpose(c)) if c else ()


@lru_cache(maxsize=256)
def root_coordinate_matrix(datum: BasedRootDatum) -> tuple[tuple[int, ...], ...]:
    """A positive integer multiple of the inverse transposed Cartan matrix."""
    cinv_t = _cartan_inverse_transpose(datum)
    k = math.lcm(*(x.denominator for row in cinv_t for x in row)) if cinv_t else 1
    return tuple(tuple(int(x * k) for x in row) for row in cinv_t)


def root_sign(datum: BasedRootDatum, v: Sequence[int]) -> int:
    """Sign of the first nonzero simple-root coordinate of ``v`` (0 for the zero vector).

    For a root this is +1 exactly when the root is positive.
    """
    p = [pairing(v, c) for c in datum.simple_coroots]
    for row in root_coordinate_matrix(datum):
        x = sum(a * b for a, b in zip(row, p) if a)
        if x:
            return 1 if x > 0 else -1
    return 0
