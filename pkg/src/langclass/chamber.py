"""Real parameter spaces of Levi subgroups, regularity and dominant chambers.

Points are rational vectors in the ambient coordinates of the character
lattice; the space attached to a standard Levi with simple roots ``I`` is the
rational span of the lattice fixed by ``W_I``. Hyperbolic central elements
are recorded only by their exponent vectors (powers of a symbolic ``q``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import lattice
from .errors import (
    DimensionMismatch,
    GramNotInvariant,
    NoDominantConjugate,
    NotDominant,
    NuOutsideSpace,
    PartialOrbit,
)
from .lattice import Matrix
from .root_datum import BasedRootDatum
from .weyl import (
    GaloisAction,
    InvariantLattice,
    RelativeWeylGroup,
    WeylElement,
    WeylGroup,
    generate_weyl,
    invariant_lattice,
    normalizes,
    parabolic_subset,
    reflect_left,
    simple_reflection,
)

NuVector = tuple  # tuple[Fraction, ...]


def as_nu(values: Iterable) -> NuVector:
    """Coerce ints, Fractions or strings like ``"3/2"`` into a rational vector."""
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class AStarSpace:
    datum: BasedRootDatum
    I: frozenset[int]
    lattice: InvariantLattice
    gram: Matrix

    @property
    def outside(self) -> tuple[int, ...]:
        """Simple-root indices not in ``I``, in increasing order."""
        return tuple(j for j in range(self.datum.semisimple_rank) if j not in self.I)

    @property
    def dim(self) -> int:
        return self.lattice.rank

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        return Fraction(lattice.bilinear(x, self.gram, y))

    def contains(self, nu: Sequence) -> bool:
        return len(nu) == self.datum.rank and self.lattice.spans(nu)


@dataclass(frozen=True)
class HyperbolicElement:
    """``q`` raised to a rational cocharacter, stored as its exponent vector."""

    exponents: tuple[Fraction, ...]
    levi: frozenset[int] | None = field(default=None, compare=False)

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def inverse(self) -> "HyperbolicElement":
        return HyperbolicElement(tuple(-e for e in self.exponents), self.levi)


def default_gram(datum: BasedRootDatum, W: WeylGroup | None = None) -> Matrix:
    """Identity for standard-basis data, otherwise the Weyl average of the identity form."""
    r = datum.rank
    if datum.standard_basis:
        return tuple(tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r))
    if W is None:
        W = generate_weyl(datum)
    total = [[0] * r for _ in range(r)]
    for w in W.elements:
        wtw = lattice.matmul(lattice.transpose(w.matrix), w.matrix)
        for i in range(r):
            for j in range(r):
                total[i][j] += wtw[i][j]
    n = len(W)
    return tuple(tuple(Fraction(x, n) for x in row) for row in total)


def _check_gram(datum: BasedRootDatum, gram: Matrix) -> Matrix:
    r = datum.rank
    g = tuple(tuple(Fraction(x) for x in row) for row in gram)
    if len(g) != r or any(len(row) != r for row in g):
        raise GramNotInvariant(f"gram must be {r}x{r}")
    if g != lattice.transpose(g):
        raise GramNotInvariant("gram is not symmetric")
    # positive definite iff all pivots of symmetric elimination are positive
    work = [list(row) for row in g]
    for k in range(r):
        if work[k][k] <= 0:
            raise GramNotInvariant("gram is not positive definite")
        for i in range(k + 1, r):
            f = work[i][k] / work[k][k]
            work[i] = [a - f * b for a, b in zip(work[i], work[k])]
    for i in range(datum.semisimple_rank):
        s = simple_reflection(datum, i).matrix
        if lattice.matmul(lattice.matmul(lattice.transpose(s), g), s) != g:
            raise GramNotInvariant("gram is not invariant under the simple reflections")
    return g


def a_star_space(
    datum: BasedRootDatum,
    I: Iterable[int] = (),
    gram: Matrix | None = None,
    W: WeylGroup | None = None,
) -> AStarSpace:
    """The space attached to the standard Levi with simple roots ``I``.

    Only the generators of ``W_I`` are needed for the invariant lattice; the
    full group ``W`` is enumerated (or taken from the argument) only to
    average the default form on data without a standard basis.
    """
    I = parabolic_subset(I, datum)
    if gram is None:
        return _default_space(datum, I, W)
    return AStarSpace(datum, I, _levi_lattice(datum, I), _check_gram(datum, gram))


def _levi_lattice(datum: BasedRootDatum, I: frozenset[int]) -> InvariantLattice:
    return invariant_lattice(datum, [simple_reflection(datum, i) for i in sorted(I)])


@lru_cache(maxsize=4096)
def _cached_default_space(datum: BasedRootDatum, I: frozenset[int]) -> AStarSpace:
    return AStarSpace(datum, I, _levi_lattice(datum, I), default_gram(datum))


def _default_space(datum, I, W) -> AStarSpace:
    if datum.standard_basis or W is None:
        return _cached_default_space(datum, I)
    return AStarSpace(datum, I, _levi_lattice(datum, I), default_gram(datum, W))


def _require_in(nu: Sequence, space: AStarSpace) -> NuVector:
    nu = as_nu(nu)
    if len(nu) != space.datum.rank:
        raise DimensionMismatch(f"vector has length {len(nu)}, expected {space.datum.rank}")
    if not space.lattice.spans(nu):
        raise NuOutsideSpace(
            f"{[str(x) for x in nu]} is not fixed by W_I for I = {sorted(space.I)}"
        )
    return nu


@lru_cache(maxsize=4096)
def _projector(space: AStarSpace):
    """Basis, form applied to the basis, and the inverse Gram matrix of the basis."""
    basis = space.lattice.basis
    gb = tuple(lattice.matvec(space.gram, b) for b in basis)
    m = tuple(tuple(Fraction(lattice.dot(a, g)) for g in gb) for a in basis)
    return basis, gb, lattice.inverse(m)


def project(space: AStarSpace, v: Sequence) -> tuple[Fraction, ...]:
    """Orthogonal projection of ``v`` onto the span of the invariant lattice."""
    basis, gb, m_inv = _projector(space)
    if not basis:
        return tuple(Fraction(0) for _ in range(space.datum.rank))
    coeffs = lattice.matvec(m_inv, [lattice.dot(g, v) for g in gb])
    r = space.datum.rank
    return tuple(sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(r))


@lru_cache(maxsize=4096)
def projected_simple_roots(space: AStarSpace) -> tuple[tuple[Fraction, ...], ...]:
    """Projections of the simple roots outside ``I``, in the order of ``space.outside``."""
    return tuple(project(space, space.datum.simple_roots[j]) for j in space.outside)


def pairings(nu: Sequence, roots: Sequence[Sequence], gram: Matrix) -> tuple[Fraction, ...]:
    return tuple(Fraction(lattice.bilinear(nu, gram, a)) for a in roots)


@lru_cache(maxsize=4096)
def _form_on_projected_roots(space: AStarSpace) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(lattice.matvec(space.gram, a) for a in projected_simple_roots(space))


def _projected_pairings(nu: NuVector, space: AStarSpace) -> tuple[Fraction, ...]:
    return tuple(Fraction(lattice.dot(nu, g)) for g in _form_on_projected_roots(space))


def is_regular(nu: Sequence, space: AStarSpace) -> bool:
    """Strictly positive pairing with every projected simple root outside ``I``."""
    nu = _require_in(nu, space)
    return all(p > 0 for p in _projected_pairings(nu, space))


def _common_denominator(values) -> int:
    return math.lcm(*(Fraction(x).denominator for x in values)) if values else 1


@lru_cache(maxsize=256)
def _scaled_gram_roots(datum: BasedRootDatum, gram: Matrix) -> tuple[tuple[int, ...], ...]:
    """Positive integer multiples of ``gram * alpha_j``; only their signs against points matter."""
    out = []
    for a in datum.simple_roots:
        ga = lattice.matvec(gram, a)
        k = _common_denominator(ga)
        out.append(tuple(int(x * k) for x in ga))
    return tuple(out)


def _descend(nu: NuVector, W: WeylGroup, gram: Matrix):
    """Reflect ``nu`` into the closed dominant chamber of W; returns (matrix, point).

    Runs on integer multiples of ``nu`` and of the form so that the loop
    stays in ``int`` arithmetic.
    """
    datum = W.datum
    gram_roots = _scaled_gram_roots(datum, gram)
    scale = _common_denominator(nu)
    point = [int(x * scale) for x in nu]
    u = W.identity.matrix
    while True:
        for j, ga in enumerate(gram_roots):
            if lattice.dot(point, ga) < 0:
                alpha, coroot = datum.simple_roots[j], datum.simple_coroots[j]
                c = lattice.dot(point, coroot)
                point = [x - c * a for x, a in zip(point, alpha)]
                u = reflect_left(datum, j, u)
                break
        else:
            return u, tuple(Fraction(x, scale) for x in point)


def dominant_conjugate(
    nu: Sequence, rel_weyl: RelativeWeylGroup, space0: AStarSpace
) -> tuple[WeylElement, NuVector]:
    """The dominant point of the relative Weyl orbit of ``nu``, with an element reaching it.

    Among all relative Weyl elements mapping ``nu`` to the dominant point the
    one of minimal length is returned.
    """
    if space0.I != rel_weyl.base_I0:
        raise DimensionMismatch("space and relative Weyl group have different base subsets")
    nu = _require_in(nu, space0)
    W = rel_weyl.group
    u, point = _descend(nu, W, space0.gram)
    if not space0.lattice.spans(point):
        raise NoDominantConjugate("the dominant point of the W-orbit is not in the base space")
    stab = [
        j for j, ga in enumerate(_scaled_gram_roots(W.datum, space0.gram))
        if lattice.dot(point, ga) == 0
    ]
    # minimal element of the coset Stab(point) u
    m = W.element(u)
    reduced = True
    while reduced:
        reduced = False
        for j in stab:
            cand = W.element(reflect_left(W.datum, j, m.matrix))
            if cand.length < m.length:
                m, reduced = cand, True
                break
    I0 = rel_weyl.base_I0
    if normalizes(m, W, I0, rel_weyl.base_roots) and rel_weyl.action.fixes(m):
        return m, point
    for r in rel_weyl.elements:
        if r.apply(nu) == point:
            return r, point
    raise NoDominantConjugate("no relative Weyl element reaches the dominant point")


def maximal_levi_of(
    nu_dominant: Sequence, space0: AStarSpace, action: GaloisAction | None = None
) -> frozenset[int]:
    """``I0`` together with the simple roots outside it that pair to zero with ``nu``."""
    nu = _require_in(nu_dominant, space0)
    outside = space0.outside
    values = _projected_pairings(nu, space0)
    if any(p < 0 for p in values):
        raise NotDominant("vector is not in the closed dominant chamber")
    I = space0.I | {j for j, p in zip(outside, values) if p == 0}
    if action is not None and not action.stabilizes(I):
        raise PartialOrbit(f"{sorted(I)} is not a union of orbits of the action")
    return frozenset(I)


def z_of_nu(nu: Sequence, space: AStarSpace) -> HyperbolicElement:
    """The hyperbolic central element attached to ``nu``.

    Under the coordinate identification of cocharacters of the dual centre
    with characters of the Levi, the exponent vector is ``nu`` itself.
    """
    nu = _require_in(nu, space)
    return HyperbolicElement(nu, space.I)
