"""Weyl groups of based root data and the parabolic machinery built on them.

Elements act on the character lattice by integer matrices on column vectors.
Each element also carries its ShortLex-minimal word in the (0-based) simple
reflection indices; equality and hashing use the matrix only.

Generation is breadth-first from the identity, multiplying on the right by
simple reflections. Processing each level in ShortLex order and generators in
increasing order means the first word found for an element is its ShortLex
normal form, so ``WeylGroup.elements`` comes out sorted by (length, word).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import lattice
from .errors import (
    ActionBasisUndefined,
    GroupTooLarge,
    I0NotStable,
    IndexOutOfRange,
    InvalidGaloisAction,
    NotInGroup,
    RelativeWeylDiscrepancy,
)
from .lattice import Matrix
from .root_datum import BasedRootDatum, root_coordinate_matrix, cartan_matrix, root_sign

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    word: tuple[int, ...] = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def sort_key(self):
        return (len(self.word), self.word)

    def apply(self, v: Sequence) -> tuple:
        return lattice.matvec(self.matrix, v)


def reflection_matrix(root: Sequence[int], coroot: Sequence[int]) -> Matrix:
    """Matrix of ``x -> x - <x, coroot> root``."""
    n = len(root)
    return tuple(
        tuple(int(r == c) - root[r] * coroot[c] for c in range(n)) for r in range(n)
    )


def reflect_left(datum: BasedRootDatum, i: int, matrix: Matrix) -> Matrix:
    """``s_i M`` by a rank-one update, without forming ``s_i``."""
    alpha, coroot = datum.simple_roots[i], datum.simple_coroots[i]
    ncols = len(matrix[0]) if matrix else 0
    c = [sum(coroot[k] * matrix[k][j] for k in range(len(matrix)) if coroot[k]) for j in range(ncols)]
    return tuple(
        tuple(x - a * y for x, y in zip(row, c)) if a else row
        for row, a in zip(matrix, alpha)
    )


def _check_index(datum: BasedRootDatum, i: int) -> None:
    if not 0 <= i < datum.semisimple_rank:
        raise IndexOutOfRange(
            f"simple root index {i} outside 0..{datum.semisimple_rank - 1}"
        )


def simple_reflection(datum: BasedRootDatum, i: int) -> WeylElement:
    _check_index(datum, i)
    return WeylElement(
        reflection_matrix(datum.simple_roots[i], datum.simple_coroots[i]), (i,)
    )


def _is_negative_root(datum: BasedRootDatum, v: Sequence[int]) -> bool:
    return root_sign(datum, v) < 0


def canonical_word(datum: BasedRootDatum, matrix: Matrix) -> tuple[int, ...]:
    """ShortLex-minimal word of a Weyl group element given by its matrix.

    Peels off the smallest left descent until the identity is reached.
    Raises NotInGroup when the matrix is not in the Weyl group.
    """
    try:
        inv = lattice.integer_inverse(matrix)
    except (ValueError, ZeroDivisionError):
        raise NotInGroup("matrix is not invertible over the integers") from None
    ident = lattice.identity(datum.rank)
    refl = [reflection_matrix(a, c) for a, c in zip(datum.simple_roots, datum.simple_coroots)]
    word = []
    current = lattice.as_matrix(matrix)
    while current != ident:
        for i, alpha in enumerate(datum.simple_roots):
            # s_i is a left descent of w iff w^{-1} alpha_i is negative
            if _is_negative_root(datum, lattice.matvec(inv, alpha)):
                word.append(i)
                current = lattice.matmul(refl[i], current)
                inv = lattice.matmul(inv, refl[i])
                break
        else:
            raise NotInGroup("matrix has no descent but is not the identity")
    return tuple(word)


def element_from_matrix(datum: BasedRootDatum, matrix: Matrix) -> WeylElement:
    m = lattice.as_matrix(matrix)
    return WeylElement(m, canonical_word(datum, m))


class WeylGroup:
    """The finite Weyl group of a datum, fully enumerated.

    Attributes:
        datum: the based root datum.
        elements: all elements, sorted by (length, ShortLex word).
        generators: the simple reflections in index order.
    """

    def __init__(self, datum: BasedRootDatum, elements: Sequence[WeylElement]):
        self.datum = datum
        self.elements = tuple(elements)
        self._index = {e.matrix: e for e in self.elements}
        self.generators = tuple(
            self._index[reflection_matrix(a, c)]
            for a, c in zip(datum.simple_roots, datum.simple_coroots)
        )
        self.identity = self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __contains__(self, item) -> bool:
        m = item.matrix if isinstance(item, WeylElement) else lattice.as_matrix(item)
        return m in self._index

    def element(self, matrix) -> WeylElement:
        """The canonical element with the given matrix."""
        try:
            return self._index[lattice.as_matrix(matrix)]
        except KeyError:
            raise NotInGroup("matrix is not an element of this Weyl group") from None

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self._index[lattice.matmul(a.matrix, b.matrix)]

    def inv(self, a: WeylElement) -> WeylElement:
        return self.element_from_word(tuple(reversed(a.word)))

    def element_from_word(self, word: Iterable[int]) -> WeylElement:
        m = self.identity.matrix
        for i in word:
            _check_index(self.datum, i)
            m = lattice.matmul(m, self.generators[i].matrix)
        return self._index[m]

    def longest(self) -> WeylElement:
        return self.elements[-1]

    @cached_property
    def stacked(self) -> np.ndarray:
        """All element matrices as one ``(|W|, rank, rank)`` integer array, in element order."""
        return np.array([e.matrix for e in self.elements], dtype=np.int64).reshape(
            len(self.elements), self.datum.rank, self.datum.rank
        )

    def simple_root_images(self, i: int) -> np.ndarray:
        """Scaled simple-root coordinates of ``w alpha_i`` for every ``w``, shape ``(|W|, l)``.

        Rows are positive multiples of the true coordinates, so signs and
        supports are exact.
        """
        d = self.datum
        images = self.stacked @ np.array(d.simple_roots[i], dtype=np.int64)
        pairings = images @ np.array(d.simple_coroots, dtype=np.int64).T
        return pairings @ np.array(root_coordinate_matrix(d), dtype=np.int64).T


def generate_weyl(datum: BasedRootDatum, cap: int = DEFAULT_CAP) -> WeylGroup:
    """Enumerate W(datum) by breadth-first closure; GroupTooLarge beyond ``cap`` elements."""
    gens = [
        np.array(reflection_matrix(a, c), dtype=np.int64)
        for a, c in zip(datum.simple_roots, datum.simple_coroots)
    ]
    ident = np.eye(datum.rank, dtype=np.int64)
    seen = {ident.tobytes()}
    level = [(ident, ())]
    found = [(ident, ())]
    while level:
        nxt = []
        for m, word in level:
            for i, g in enumerate(gens):
                p = m @ g
                key = p.tobytes()
                if key in seen:
                    continue
                if len(seen) >= cap:
                    raise GroupTooLarge(f"Weyl group has more than {cap} elements")
                if np.abs(p).max() > 2**40:
                    raise GroupTooLarge("matrix entries are growing; the group is infinite")
                seen.add(key)
                nxt.append((p, word + (i,)))
        found.extend(nxt)
        level = nxt
    elements = [WeylElement(lattice.as_matrix(m.tolist()), w) for m, w in found]
    return WeylGroup(datum, elements)


def weyl_dual_iso(w: WeylElement, datum: BasedRootDatum) -> WeylElement:
    """``w -> transpose(w)^{-1}``, an element of the Weyl group of the dual datum.

    The simple reflection ``s_i`` goes to the ``i``-th simple reflection of the
    dual, so the ShortLex word carries over unchanged.
    """
    inv = lattice.integer_inverse(w.matrix)
    return WeylElement(lattice.transpose(inv), w.word)


# --- parabolic subsets and cosets ---------------------------------------------


def parabolic_subset(indices: Iterable[int], datum: BasedRootDatum) -> frozenset[int]:
    out = frozenset(indices)
    for i in out:
        _check_index(datum, i)
    return out


def parabolic_subgroup(W: WeylGroup, I: Iterable[int]) -> tuple[WeylElement, ...]:
    """The subgroup generated by ``{s_i : i in I}``, sorted canonically.

    Every reduced word of an element of ``W_I`` uses only letters from ``I``,
    so the subgroup is read off the stored ShortLex words.
    """
    I = parabolic_subset(I, W.datum)
    return tuple(w for w in W.elements if I.issuperset(w.word))


@dataclass(frozen=True)
class WeylCoset:
    """The coset ``rep W_I`` with ``rep`` its unique minimal-length element."""

    rep: WeylElement
    I: frozenset[int]


def _is_right_descent(W: WeylGroup, w: WeylElement, i: int) -> bool:
    # l(w s_i) < l(w) iff w alpha_i is a negative root
    return _is_negative_root(W.datum, w.apply(W.datum.simple_roots[i]))


def coset_min_rep(w: WeylElement, I: Iterable[int], W: WeylGroup) -> WeylCoset:
    """Minimal-length representative of ``w W_I`` by repeated right-descent reduction."""
    I = parabolic_subset(I, W.datum)
    order = sorted(I)
    current = W.element(w.matrix)
    reduced = True
    while reduced:
        reduced = False
        for i in order:
            if _is_right_descent(W, current, i):
                current = W.mul(current, W.generators[i])
                reduced = True
                break
    return WeylCoset(current, I)


def levi_of_coset(coset: WeylCoset, W: WeylGroup) -> tuple[WeylElement, ...]:
    """``rep W_I rep^{-1}``: the Weyl group of the Levi of the parabolic labelled by the coset."""
    rep = coset.rep
    rep_inv = W.inv(rep)
    conj = {W.mul(W.mul(rep, x), rep_inv) for x in parabolic_subgroup(W, coset.I)}
    return tuple(sorted(conj, key=WeylElement.sort_key))


# --- Galois (diagram) actions ----------------------------------------------------


@dataclass(frozen=True)
class GaloisAction:
    """A finite group acting on the datum through diagram automorphisms.

    ``permutations[k][i]`` is the image of simple root ``i`` under generator
    ``k``; ``lattice_matrices[k]`` is the corresponding integer automorphism
    of the character lattice, mapping ``alpha_i`` to ``alpha_{perm[i]}``.
    """

    datum: BasedRootDatum
    permutations: tuple[tuple[int, ...], ...] = ()
    lattice_matrices: tuple[Matrix, ...] = ()

    @classmethod
    def trivial(cls, datum: BasedRootDatum) -> "GaloisAction":
        return cls(datum)

    def matrix_of(self, gamma_word: Sequence[int]) -> Matrix:
        m = lattice.identity(self.datum.rank)
        for k in gamma_word:
            if not 0 <= k < len(self.lattice_matrices):
                raise IndexOutOfRange(f"action generator index {k} out of range")
            m = lattice.matmul(m, self.lattice_matrices[k])
        return m

    def dual(self) -> "GaloisAction":
        """The transported action on the dual datum: ``g -> transpose(g)^{-1}``."""
        from .root_datum import dual

        mats = tuple(lattice.transpose(lattice.integer_inverse(g)) for g in self.lattice_matrices)
        return GaloisAction(dual(self.datum), self.permutations, mats)

    def stabilizes(self, I: Iterable[int]) -> bool:
        I = frozenset(I)
        return all(frozenset(p[i] for i in I) == I for p in self.permutations)

    def fixes(self, w: WeylElement) -> bool:
        return all(
            lattice.matmul(g, w.matrix) == lattice.matmul(w.matrix, g)
            for g in self.lattice_matrices
        )


def _check_lattice_matrix(datum: BasedRootDatum, perm, g: Matrix) -> None:
    r = datum.rank
    if len(g) != r or any(len(row) != r for row in g):
        raise InvalidGaloisAction(f"lattice matrix must be {r}x{r}")
    try:
        g_inv = lattice.integer_inverse(g)
    except (ValueError, ZeroDivisionError):
        raise InvalidGaloisAction("lattice matrix is not unimodular") from None
    g_dual = lattice.transpose(g_inv)
    for i, (a, c) in enumerate(zip(datum.simple_roots, datum.simple_coroots)):
        if lattice.matvec(g, a) != datum.simple_roots[perm[i]]:
            raise InvalidGaloisAction(f"lattice matrix does not send alpha_{i} to alpha_{perm[i]}")
        if lattice.matvec(g_dual, c) != datum.simple_coroots[perm[i]]:
            raise InvalidGaloisAction(
                f"lattice matrix does not send coroot {i} to coroot {perm[i]}"
            )


def _signed_coordinate_permutation(datum: BasedRootDatum, perm) -> Matrix | None:
    """Search ``g = sign * P`` with ``P`` a coordinate permutation realising ``perm``.

    The condition is coordinatewise: ``g e_k = sign e_c`` works iff column
    ``k`` of the root and coroot tables, times ``sign``, equals column ``c``
    of the permuted tables. Any perfect matching then gives a valid ``g``;
    candidates are tried with ``c == k`` first for determinism.
    """
    r, l = datum.rank, datum.semisimple_rank
    roots, coroots = datum.simple_roots, datum.simple_coroots
    for sign in (1, -1):
        cands = []
        for k in range(r):
            col = [(roots[i][k], coroots[i][k]) for i in range(l)]
            options = [
                c for c in [k] + [c for c in range(r) if c != k]
                if all(
                    sign * a == roots[perm[i]][c] and sign * b == coroots[perm[i]][c]
                    for i, (a, b) in enumerate(col)
                )
            ]
            if not options:
                break
            cands.append(options)
        else:
            image: list[int] = []
            used: set[int] = set()

            def extend(k: int) -> bool:
                if k == r:
                    return True
                for c in cands[k]:
                    if c not in used:
                        used.add(c)
                        image.append(c)
                        if extend(k + 1):
                            return True
                        used.discard(c)
                        image.pop()
                return False

            if extend(0):
                return tuple(
                    tuple(sign if image[k] == row else 0 for k in range(r)) for row in range(r)
                )
    return None


def _default_lattice_matrix(datum: BasedRootDatum, perm) -> Matrix:
    l, r = datum.semisimple_rank, datum.rank
    if tuple(perm) == tuple(range(l)):
        return lattice.identity(r)
    if l == r:
        # roots span the rational lattice: g is determined by g alpha_i = alpha_perm(i)
        a = lattice.transpose(datum.simple_roots)
        b = lattice.transpose(tuple(datum.simple_roots[perm[i]] for i in range(l)))
        g = lattice.matmul(b, lattice.inverse(a))
        if any(x.denominator != 1 for row in g for x in row):
            raise InvalidGaloisAction("diagram automorphism does not preserve the lattice")
        return tuple(tuple(int(x) for x in row) for row in g)
    if datum.standard_basis:
        g = _signed_coordinate_permutation(datum, perm)
        if g is not None:
            return g
    raise ActionBasisUndefined(
        "the permutation does not determine an action on the full lattice; "
        "supply galois_lattice_matrices"
    )


def galois_action(
    datum: BasedRootDatum,
    permutations: Sequence[Sequence[int]] = (),
    lattice_matrices: Sequence[Sequence[Sequence[int]]] | None = None,
) -> GaloisAction:
    """Validate a diagram action and extend it to the lattice where needed."""
    l = datum.semisimple_rank
    cartan = cartan_matrix(datum)
    perms = []
    for p in permutations:
        p = tuple(p)
        if sorted(p) != list(range(l)):
            raise InvalidGaloisAction(f"{list(p)} is not a permutation of 0..{l - 1}")
        if any(cartan[p[i]][p[j]] != cartan[i][j] for i in range(l) for j in range(l)):
            raise InvalidGaloisAction(f"permutation {list(p)} does not preserve the Cartan matrix")
        perms.append(p)
    if lattice_matrices is None:
        mats = [_default_lattice_matrix(datum, p) for p in perms]
    else:
        if len(lattice_matrices) != len(perms):
            raise InvalidGaloisAction("need exactly one lattice matrix per generator")
        mats = [lattice.as_matrix(m) for m in lattice_matrices]
    for p, g in zip(perms, mats):
        _check_lattice_matrix(datum, p, g)
    return GaloisAction(datum, tuple(perms), tuple(mats))


def galois_action_on_weyl(
    action: GaloisAction,
    gamma_word: Sequence[int],
    w: WeylElement,
    W: WeylGroup | None = None,
) -> WeylElement:
    """``mu(gamma) w mu(gamma)^{-1}`` for ``gamma`` the product of the named generators."""
    g = action.matrix_of(gamma_word)
    m = lattice.matmul(lattice.matmul(g, w.matrix), lattice.integer_inverse(g))
    if W is not None:
        return W.element(m)
    return element_from_matrix(action.datum, m)


def fixed_subgroup(W: WeylGroup, action: GaloisAction) -> tuple[WeylElement, ...]:
    return tuple(w for w in W.elements if action.fixes(w))


# --- normalizers, relative Weyl group, invariant lattices ---------------------


def parabolic_roots(W: WeylGroup, I: Iterable[int]) -> frozenset[tuple]:
    """All roots of the parabolic subsystem spanned by ``{alpha_i : i in I}``."""
    datum = W.datum
    I = sorted(parabolic_subset(I, datum))
    gens = [W.generators[i] for i in I]
    roots = {tuple(datum.simple_roots[i]) for i in I}
    frontier = list(roots)
    while frontier:
        nxt = []
        for r in frontier:
            for g in gens:
                x = g.apply(r)
                if x not in roots:
                    roots.add(x)
                    nxt.append(x)
        frontier = nxt
    return frozenset(roots)


def normalizes(w: WeylElement, W: WeylGroup, I: Iterable[int], roots_I=None) -> bool:
    """Whether ``w W_I w^{-1} = W_I``.

    Uses ``w s_alpha w^{-1} = s_{w alpha}`` and the fact that a reflection
    lies in ``W_I`` exactly when its root lies in the parabolic subsystem.
    """
    if roots_I is None:
        roots_I = parabolic_roots(W, I)
    return all(w.apply(W.datum.simple_roots[i]) in roots_I for i in I)


@dataclass(frozen=True)
class InvariantLattice:
    """Saturated sublattice of vectors fixed by a subgroup, in Hermite normal form."""

    ambient_rank: int
    basis: Matrix

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence[int]):
        return lattice.coordinates_in(v, self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        return self.coordinates(v) is not None

    def spans(self, v: Sequence) -> bool:
        """Whether a rational vector lies in the rational span of the basis."""
        if not self.basis:
            return not any(v)
        return lattice.rational_coordinates_in(v, self.basis) is not None


def invariant_lattice(datum: BasedRootDatum, subgroup: Iterable[WeylElement]) -> InvariantLattice:
    """The fixed sublattice ``{x : w x = x for all w}`` with a canonical basis."""
    r = datum.rank
    rows = set()
    for w in subgroup:
        for i, row in enumerate(w.matrix):
            d = tuple(x - int(i == j) for j, x in enumerate(row))
            if any(d):
                rows.add(d)
    basis = lattice.integer_kernel(sorted(rows), r)
    return InvariantLattice(r, basis)


@dataclass(frozen=True)
class RelativeWeylGroup:
    """Representatives of ``N_W(W_0)^mu / W_0^mu`` and their action on the invariant lattice."""

    base_I0: frozenset[int]
    elements: tuple[WeylElement, ...]
    lattice: InvariantLattice
    normalizer_fixed_order: int
    base_fixed_order: int
    group: WeylGroup = field(compare=False, repr=False)
    action: GaloisAction = field(compare=False, repr=False)
    base_roots: frozenset[tuple] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def restricted(self) -> tuple[Matrix, ...]:
        """Integer matrix of each representative on the lattice basis (columns are images)."""
        return tuple(restricted_matrix(r, self.lattice) for r in self.elements)


def relative_weyl(W: WeylGroup, I0: Iterable[int], action: GaloisAction | None = None) -> RelativeWeylGroup:
    """The relative Weyl group attached to the minimal Levi with simple roots ``I0``.

    Computed as ``N_W(W_0)^mu / W_0^mu``. The order of ``(N_W(W_0)/W_0)^mu``
    is computed independently (from stable cosets) and a mismatch raises
    RelativeWeylDiscrepancy.
    """
    I0 = parabolic_subset(I0, W.datum)
    if action is None:
        action = GaloisAction.trivial(W.datum)
    if not action.stabilizes(I0):
        raise I0NotStable(f"{sorted(I0)} is not stable under the action")
    W0 = parabolic_subgroup(W, I0)
    roots0 = parabolic_roots(W, I0)
    # w normalizes W_0 iff each w alpha_i (i in I0) has support inside I0;
    # w alpha_i < 0 marks a right descent
    outside = [j for j in range(W.datum.semisimple_rank) if j not in I0]
    in_N = np.ones(len(W), dtype=bool)
    no_descent = np.ones(len(W), dtype=bool)
    for i in I0:
        coords = W.simple_root_images(i)
        in_N &= ~coords[:, outside].any(axis=1)
        no_descent &= coords.sum(axis=1) > 0
    N = [W.elements[k] for k in np.flatnonzero(in_N)]
    N_mu = [w for w in N if action.fixes(w)]
    W0_mu = [w for w in W0 if action.fixes(w)]

    if len(W0_mu) == 1:
        reps = N_mu
    else:
        reps = []
        covered: set[bytes] = set()
        w0_stack = np.array([x.matrix for x in W0_mu], dtype=np.int64)
        for n in N_mu:  # canonical order, so each first hit is minimal in its coset
            m = np.array(n.matrix, dtype=np.int64)
            if m.tobytes() in covered:
                continue
            reps.append(n)
            covered.update(p.tobytes() for p in m @ w0_stack)

    # (N/W0)^mu counted from the minimal coset representatives of N/W0: the
    # elements of N without a right descent in I0
    coset_reps = [W.elements[k] for k in np.flatnonzero(in_N & no_descent)]
    stable = 0
    for rep in coset_reps:
        if all(
            coset_min_rep(galois_action_on_weyl(action, (k,), rep, W), I0, W).rep == rep
            for k in range(len(action.permutations))
        ):
            stable += 1
    if stable != len(reps):
        raise RelativeWeylDiscrepancy(
            f"|(N/W0)^mu| = {stable} but |N^mu/W0^mu| = {len(reps)}"
        )

    lat = invariant_lattice(W.datum, [W.generators[i] for i in sorted(I0)])
    return RelativeWeylGroup(I0, tuple(reps), lat, len(N_mu), len(W0_mu), W, action, roots0)


def restricted_matrix(w: WeylElement, lat: InvariantLattice) -> Matrix:
    cols = []
    for b in lat.basis:
        coords = lat.coordinates(w.apply(b))
        if coords is None:
            raise I0NotStable("element does not preserve the invariant lattice")
        cols.append(coords)
    return lattice.transpose(tuple(cols), lat.rank) if cols else ()


def is_relevant_coset(
    coset: WeylCoset, I0: Iterable[int], action: GaloisAction, W: WeylGroup
) -> bool:
    """Whether the parabolic labelled by ``coset`` is defined over the base field.

    Requires ``I >= I0``, ``I`` stable under the action, and a representative
    of the coset that normalizes ``W_0`` and is fixed by the action.
    """
    I0 = parabolic_subset(I0, W.datum)
    I = coset.I
    if not I >= I0 or not action.stabilizes(I):
        return False
    roots0 = parabolic_roots(W, I0)
    for x in parabolic_subgroup(W, I):
        y = W.mul(coset.rep, x)
        if normalizes(y, W, I0, roots0) and action.fixes(y):
            return True
    return False
