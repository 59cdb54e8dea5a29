"""L-parameters of GL_n(F) and GL_m(D) as multisegments.

A parameter is a multiset of segments ``r_k (x) rho_0 (x) omega_s``: an
irreducible SL_2 representation of dimension ``k``, an opaque unitary
Weil-group label ``rho_0`` with a dimension, and the real part of ``s`` as an
exact rational. ``d`` is the index of the division algebra (1 for split
GL_n), so ``n = m d``.

The classification sends a parameter to a standard triple: blocks of
segments sharing an exponent, each untwisted to a tempered parameter, with
the exponents as strictly descending block coefficients. ``mode="quotient"``
twists by ``z(nu)``, ``mode="sub"`` by ``z(-nu)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .chamber import AStarSpace, HyperbolicElement, a_star_space
from .errors import (
    BetasNotDescending,
    BlockNotTempered,
    DimensionMismatch,
    EmptyParameter,
    GroupMismatch,
    InvalidSegment,
    NotRelevant,
)
from .root_datum import gln_datum

MODES = ("quotient", "sub")


@dataclass(frozen=True, order=True)
class GaloisTypeLabel:
    name: str
    dim: int = 1

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InvalidSegment(f"representation {self.name!r} needs dim >= 1, got {self.dim!r}")


@dataclass(frozen=True)
class Segment:
    sl2_dim: int
    rho: GaloisTypeLabel
    exponent: Fraction

    def __post_init__(self):
        if not isinstance(self.sl2_dim, int) or self.sl2_dim < 1:
            raise InvalidSegment(f"SL_2 dimension must be >= 1, got {self.sl2_dim!r}")
        object.__setattr__(self, "exponent", Fraction(self.exponent))

    @property
    def dim(self) -> int:
        return self.sl2_dim * self.rho.dim

    def shifted(self, beta) -> "Segment":
        return Segment(self.sl2_dim, self.rho, self.exponent + beta)

    def sort_key(self):
        return (-self.exponent, self.rho.name, self.rho.dim, self.sl2_dim)


def segment(sl2_dim: int, rho: str | GaloisTypeLabel = "triv", exponent=0, dim: int = 1) -> Segment:
    """Shorthand: ``segment(2, "chi", "1/2")``."""
    if not isinstance(rho, GaloisTypeLabel):
        rho = GaloisTypeLabel(rho, dim)
    return Segment(sl2_dim, rho, Fraction(exponent))


def canonical(segments: Iterable[Segment]) -> tuple[Segment, ...]:
    return tuple(sorted(segments, key=Segment.sort_key))


@dataclass(frozen=True)
class GLnLParameter:
    n: int
    d: int
    segments: tuple[Segment, ...]

    @property
    def m(self) -> int:
        return self.n // self.d


def new_lparameter(n: int, d: int, segments: Iterable[Segment]) -> GLnLParameter:
    """Validate a parameter and put its segments in canonical order.

    Relevance for ``d > 1`` is not checked here; see :func:`is_relevant`.
    """
    segs = canonical(segments)
    if not segs:
        raise EmptyParameter("a parameter needs at least one segment")
    if not isinstance(d, int) or d < 1:
        raise DimensionMismatch(f"d must be a positive integer, got {d!r}")
    total = sum(s.dim for s in segs)
    if total != n:
        raise DimensionMismatch(f"segment dimensions sum to {total}, expected n = {n}")
    if n % d:
        raise DimensionMismatch(f"d = {d} does not divide n = {n}")
    return GLnLParameter(n, d, segs)


@dataclass(frozen=True)
class Block:
    m: int
    tempered: tuple[Segment, ...]
    beta: Fraction


@dataclass(frozen=True)
class GLnStandardTriple:
    d: int
    blocks: tuple[Block, ...]

    @property
    def betas(self) -> tuple[Fraction, ...]:
        return tuple(b.beta for b in self.blocks)

    @property
    def n(self) -> int:
        return self.d * sum(b.m for b in self.blocks)


def new_triple(d: int, blocks: Iterable[tuple[int, Iterable[Segment], object]]) -> GLnStandardTriple:
    """Validate ``(m, tempered segments, beta)`` blocks into a standard triple.

    Raises:
        BetasNotDescending: betas are not strictly decreasing.
        BlockNotTempered: a block segment has a nonzero exponent.
        DimensionMismatch: a block's tempered part does not have dimension ``m d``.
        NotRelevant: for ``d > 1``, a block segment of dimension prime to ``d``.
    """
    if not isinstance(d, int) or d < 1:
        raise DimensionMismatch(f"d must be a positive integer, got {d!r}")
    out = []
    for m, temp, beta in blocks:
        temp = canonical(temp)
        beta = Fraction(beta)
        if not temp:
            raise EmptyParameter("every block needs a tempered part")
        if any(s.exponent != 0 for s in temp):
            raise BlockNotTempered(f"block with beta = {beta} has a non-tempered segment")
        if not isinstance(m, int) or m < 1 or sum(s.dim for s in temp) != m * d:
            raise DimensionMismatch(f"tempered part of the block with beta = {beta} is not of dimension m*d")
        if any(s.dim % d for s in temp):
            raise NotRelevant(f"block with beta = {beta} has a segment of dimension prime to d = {d}")
        out.append(Block(m, temp, beta))
    if not out:
        raise EmptyParameter("a triple needs at least one block")
    for a, b in zip(out, out[1:]):
        if not a.beta > b.beta:
            raise BetasNotDescending(f"betas must strictly descend, got {a.beta} then {b.beta}")
    return GLnStandardTriple(d, tuple(out))


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def is_tempered(phi: GLnLParameter) -> bool:
    return all(s.exponent == 0 for s in phi.segments)


def z_of(phi: GLnLParameter) -> HyperbolicElement:
    """Exponents of ``z(phi)``: each segment's exponent with multiplicity ``sl2_dim * dim(rho)``."""
    exps = [s.exponent for s in phi.segments for _ in range(s.dim)]
    return HyperbolicElement(tuple(sorted(exps, reverse=True)))


def z_star_of(phi: GLnLParameter) -> HyperbolicElement:
    """Exponents of ``z_*(phi)``: ``z(phi)`` times the SL_2 image of ``diag(q^1/2, q^-1/2)``."""
    exps = []
    for s in phi.segments:
        top = Fraction(s.sl2_dim - 1, 2)
        for j in range(s.sl2_dim):
            exps.extend([s.exponent + top - j] * s.rho.dim)
    return HyperbolicElement(tuple(sorted(exps, reverse=True)))


def twist(phi: GLnLParameter, beta) -> GLnLParameter:
    """Twist by the central hyperbolic element ``q^beta``: shift every exponent."""
    beta = Fraction(beta)
    return GLnLParameter(phi.n, phi.d, canonical(s.shifted(beta) for s in phi.segments))


def is_relevant(phi: GLnLParameter) -> bool:
    return all(s.dim % phi.d == 0 for s in phi.segments)


def classify(phi: GLnLParameter, mode: str = "quotient") -> GLnStandardTriple:
    """The standard triple of ``phi``.

    Raises NotRelevant when ``d > 1`` and some segment dimension is prime to ``d``.
    """
    _check_mode(mode)
    if not is_relevant(phi):
        raise NotRelevant(
            f"every segment dimension must be divisible by d = {phi.d} for a relevant parameter"
        )
    sign = 1 if mode == "quotient" else -1
    groups: dict[Fraction, list[Segment]] = {}
    for s in phi.segments:
        groups.setdefault(s.exponent, []).append(s.shifted(-s.exponent))
    blocks = [
        (sum(x.dim for x in segs) // phi.d, segs, sign * e) for e, segs in groups.items()
    ]
    blocks.sort(key=lambda b: b[2], reverse=True)
    return new_triple(phi.d, blocks)


def assemble(triple: GLnStandardTriple, mode: str = "quotient") -> GLnLParameter:
    """Inverse of :func:`classify`: twist each tempered block by ``+beta`` (quotient) or ``-beta`` (sub)."""
    _check_mode(mode)
    # re-validate: triples can be built directly from the dataclasses
    triple = new_triple(triple.d, ((b.m, b.tempered, b.beta) for b in triple.blocks))
    sign = 1 if mode == "quotient" else -1
    segs = [s.shifted(sign * b.beta) for b in triple.blocks for s in b.tempered]
    return new_lparameter(triple.n, triple.d, segs)


def equivalent(phi1: GLnLParameter, phi2: GLnLParameter) -> bool:
    """Conjugacy of parameters: equality of the segment multisets."""
    if (phi1.n, phi1.d) != (phi2.n, phi2.d):
        raise GroupMismatch(
            f"cannot compare parameters for (n, d) = {(phi1.n, phi1.d)} and {(phi2.n, phi2.d)}"
        )
    return canonical(phi1.segments) == canonical(phi2.segments)


@dataclass(frozen=True)
class CentralizerShape:
    """The centralizer of the image as a product of ``GL_k`` factors."""

    gl_factors: tuple[int, ...]
    component_group_order: int = 1


def centralizer_shape(phi: GLnLParameter) -> CentralizerShape:
    """Multiplicities of the pairwise distinct irreducible summands.

    By Schur's lemma the centralizer of a sum of irreducibles with
    multiplicities ``k_j`` is ``prod GL_{k_j}``, which is connected.
    """
    counts = Counter((s.sl2_dim, s.rho, s.exponent) for s in phi.segments)
    return CentralizerShape(tuple(sorted(counts.values(), reverse=True)), 1)


def component_groups_agree(phi: GLnLParameter) -> bool:
    """Compare the component group of ``phi`` in G with that of its tempered part in the Levi.

    The Levi side is the product over the blocks of :func:`classify`; besides
    the component-group orders, the ``GL`` factor multisets must coincide.
    """
    whole = centralizer_shape(phi)
    factors: list[int] = []
    order = 1
    for b in classify(phi).blocks:
        part = centralizer_shape(GLnLParameter(b.m * phi.d, phi.d, b.tempered))
        factors.extend(part.gl_factors)
        order *= part.component_group_order
    return whole.component_group_order == order and whole.gl_factors == tuple(
        sorted(factors, reverse=True)
    )


check_prop_7_1 = component_groups_agree


def block_levi(triple: GLnStandardTriple) -> frozenset[int]:
    """Simple-root indices (0-based) of the standard Levi ``prod GL_{m_k d}`` in ``GL_n``."""
    sizes = [b.m * triple.d for b in triple.blocks]
    cuts = set()
    pos = 0
    for size in sizes[:-1]:
        pos += size
        cuts.add(pos - 1)
    return frozenset(range(triple.n - 1)) - cuts


def levi_nu(triple: GLnStandardTriple) -> tuple[AStarSpace, tuple[Fraction, ...]]:
    """The Levi space on ``gln_datum(n)`` and ``nu = sum beta_k b_k`` for a triple.

    ``b_k`` is the block-sum character of the ``k``-th block, read off the
    invariant-lattice basis of the space.
    """
    space = a_star_space(gln_datum(triple.n), block_levi(triple))
    basis = space.lattice.basis
    assert len(basis) == len(triple.blocks)
    nu = tuple(
        sum((b.beta * v[k] for b, v in zip(triple.blocks, basis)), Fraction(0))
        for k in range(triple.n)
    )
    return space, nu

