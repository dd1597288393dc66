"""Exact subspace arithmetic over prime fields and the triple-to-subspace maps.

The presented vector space has generators ``x_a, y_a, z_a`` subject to
``x_a + y_a + z_a = 0``, so the x and y generators form a basis of a
``2n``-dimensional space and ``z_a = -x_a - y_a``.  Triples of index sets
map to subspaces by spanning the corresponding generators; the adjoint map
reads a triple back off a subspace by membership tests.  The composite of
the two is exactly the median closure on triples, and the forward map
restricted to balanced triples is a bounded lattice embedding.  All of that
is checkable here, exhaustively at small sizes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .finlat import FiniteLattice
from .setalg import FcSet, Universe
from .triples import BalancedTriple, Triple, closure, is_balanced, m3_join, m3_meet


class SpaceMismatchError(ValueError):
    """Operation mixing vectors or subspaces of different presented spaces."""


@dataclass(frozen=True, slots=True)
class PrimeField:
    """The integers modulo a prime, with exact arithmetic."""

    p: int

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1)):
            raise ValueError(f"{self.p} is not prime")

    def inv(self, x: int) -> int:
        return pow(int(x) % self.p, -1, self.p)


def rref(matrix: np.ndarray, p: int) -> np.ndarray:
    """Reduced row-echelon form over GF(p); zero rows stripped, pivots equal 1."""
    mat = np.asarray(matrix, dtype=np.int64) % p
    if mat.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    rows, cols = mat.shape
    rank = 0
    for j in range(cols):
        pivot = None
        for i in range(rank, rows):
            if mat[i, j] % p:
                pivot = i
                break
        if pivot is None:
            continue
        mat[[rank, pivot]] = mat[[pivot, rank]]
        mat[rank] = mat[rank] * pow(int(mat[rank, j]), -1, p) % p
        for i in range(rows):
            if i != rank and mat[i, j]:
                mat[i] = (mat[i] - mat[i, j] * mat[rank]) % p
        rank += 1
        if rank == rows:
            break
    return mat[:rank]


@dataclass(frozen=True, slots=True)
class PresentedSpace:
    """The 2n-dimensional coordinate space carrying the x/y/z generators.

    Generator coordinates: ``x_a`` is unit vector ``2a``, ``y_a`` is unit
    vector ``2a+1``, and ``z_a = -x_a - y_a``.
    """

    n: int
    field: PrimeField

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("index count must be a natural")

    @property
    def dim(self) -> int:
        return 2 * self.n

    @property
    def universe(self) -> Universe:
        return Universe(self.n)

    def _unit(self, k: int) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.int64)
        vec[k] = 1
        return vec

    def x_vec(self, alpha: int) -> np.ndarray:
        return self._unit(2 * alpha)

    def y_vec(self, alpha: int) -> np.ndarray:
        return self._unit(2 * alpha + 1)

    def z_vec(self, alpha: int) -> np.ndarray:
        vec = np.zeros(self.dim, dtype=np.int64)
        vec[2 * alpha] = vec[2 * alpha + 1] = self.field.p - 1
        return vec


class Subspace:
    """A subspace in canonical reduced-echelon form; equality is structural."""

    __slots__ = ("space", "basis")

    def __init__(self, space: PresentedSpace, canonical_basis: np.ndarray):
        self.space = space
        basis = np.asarray(canonical_basis, dtype=np.int64)
        basis.flags.writeable = False
        self.basis = basis

    @classmethod
    def span(cls, space: PresentedSpace, vectors) -> Subspace:
        mat = np.array(list(vectors), dtype=np.int64).reshape(-1, space.dim)
        return cls(space, rref(mat, space.field.p))

    @classmethod
    def zero(cls, space: PresentedSpace) -> Subspace:
        return cls(space, np.zeros((0, space.dim), dtype=np.int64))

    @classmethod
    def full(cls, space: PresentedSpace) -> Subspace:
        return cls(space, np.eye(space.dim, dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _check(self, other: Subspace) -> None:
        if self.space != other.space:
            raise SpaceMismatchError(f"{self.space} vs {other.space}")

    def contains(self, vector) -> bool:
        """Exact membership by reducing the vector against the echelon basis."""
        p = self.space.field.p
        vec = np.asarray(vector, dtype=np.int64) % p
        if vec.shape != (self.space.dim,):
            raise ValueError(f"vector must have dimension {self.space.dim}")
        for row in self.basis:
            j = int(np.flatnonzero(row)[0])
            if vec[j]:
                vec = (vec - vec[j] * row) % p
        return not vec.any()

    def is_contained_in(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(row) for row in self.basis)

    def sum(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.space, np.vstack([self.basis, other.basis]))

    def intersect(self, other: Subspace) -> Subspace:
        """Zassenhaus block elimination: one pass yields the intersection."""
        self._check(other)
        d = self.space.dim
        p = self.space.field.p
        top = np.hstack([self.basis, self.basis])
        bot = np.hstack([other.basis, np.zeros_like(other.basis)])
        reduced = rref(np.vstack([top, bot]), p)
        inter_rows = [row[d:] for row in reduced if not row[:d].any()]
        mat = np.array(inter_rows, dtype=np.int64).reshape(-1, d)
        return Subspace(self.space, rref(mat, p))

    __add__ = sum
    __and__ = intersect

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.space == other.space
            and self.basis.shape == other.basis.shape
            and bool((self.basis == other.basis).all())
        )

    def __hash__(self) -> int:
        return hash((self.space, self.basis.tobytes()))

    def to_json(self) -> dict:
        return {"p": self.space.field.p, "n": self.space.n, "basis": self.basis.tolist()}

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} of {self.space.dim}, p={self.space.field.p})"


# -- the triple <-> subspace correspondence -----------------------------------


def _triple_members(space: PresentedSpace, t: Triple) -> tuple[frozenset, frozenset, frozenset]:
    if t.universe != space.universe:
        raise SpaceMismatchError(f"triple over {t.universe} vs space over {space.universe}")
    return t.a.members, t.b.members, t.c.members


def f_map(space: PresentedSpace, t: Triple) -> Subspace:
    """Span of the generators selected by the triple: ``X_A + Y_B + Z_C``."""
    aa, bb, cc = _triple_members(space, t)
    gens = [space.x_vec(i) for i in sorted(aa)]
    gens += [space.y_vec(i) for i in sorted(bb)]
    gens += [space.z_vec(i) for i in sorted(cc)]
    if not gens:
        return Subspace.zero(space)
    return Subspace.span(space, gens)


def g_map(w: Subspace) -> Triple:
    """Read a triple back off a subspace by generator-membership tests."""
    space = w.space
    universe = space.universe
    aa = [i for i in range(space.n) if w.contains(space.x_vec(i))]
    bb = [i for i in range(space.n) if w.contains(space.y_vec(i))]
    cc = [i for i in range(space.n) if w.contains(space.z_vec(i))]
    return Triple(
        FcSet.fin(universe, aa), FcSet.fin(universe, bb), FcSet.fin(universe, cc)
    )


def check_adjunction(space: PresentedSpace, t: Triple, w: Subspace) -> bool:
    """Whether ``F(t) <= W  iff  t <= G(W)`` holds for this pair."""
    forward = f_map(space, t).is_contained_in(w)
    backward = t <= g_map(w)
    return forward == backward


def check_gf_closure(space: PresentedSpace, t: Triple) -> bool:
    """Whether the round trip G(F(t)) equals the median closure of ``t``."""
    return g_map(f_map(space, t)) == closure(t).inner


def check_meet_preservation(space: PresentedSpace, s: BalancedTriple, t: BalancedTriple) -> bool:
    """Whether F sends the componentwise meet of balanced triples to the intersection."""
    return f_map(space, s.inner).intersect(f_map(space, t.inner)) == f_map(
        space, m3_meet(s, t).inner
    )


@dataclass(frozen=True)
class EmbeddingReport:
    """Outcome of the bounded-lattice-embedding verification."""

    passed: bool
    mode: str  # "exhaustive" or "sampled"
    pairs_checked: int
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.passed


def balanced_triples_over(universe: Universe) -> list[BalancedTriple]:
    """Every balanced triple over a finite universe, in enumeration order."""
    from .triples import all_triples

    return [BalancedTriple(t) for t in all_triples(universe) if is_balanced(t)]


def check_embedding(
    space: PresentedSpace,
    samples: int | None = None,
    seed: int = 0,
) -> EmbeddingReport:
    """Verify that F restricted to balanced triples is a bounded lattice embedding.

    Exhaustive over all balanced-triple pairs by default; pass ``samples``
    to check that many random pairs instead (needed once 25**n pairs is too
    many).  Checks meet preservation, join preservation, injectivity, and
    that the bounds map to the zero and full subspace.
    """
    universe = space.universe
    empty = FcSet.empty(universe)
    full = FcSet.full(universe)
    if f_map(space, Triple(empty, empty, empty)) != Subspace.zero(space):
        return EmbeddingReport(False, "exhaustive", 0, "bottom does not map to the zero space")
    if f_map(space, Triple(full, full, full)) != Subspace.full(space):
        return EmbeddingReport(False, "exhaustive", 0, "top does not map to the full space")

    if samples is None:
        elems = balanced_triples_over(universe)
        images = {}
        for t in elems:
            w = f_map(space, t.inner)
            key = (w.basis.shape, w.basis.tobytes())
            if key in images:
                return EmbeddingReport(
                    False, "exhaustive", 0, f"not injective: {images[key]!r} and {t!r}"
                )
            images[key] = t
        pairs = itertools.product(elems, elems)
        mode = "exhaustive"
        total = len(elems) ** 2
    else:
        rng = random.Random(seed)

        def sample_pairs():
            from .triples import random_triple

            for _ in range(samples):
                s = closure(random_triple(rng, universe, max_index=space.n))
                t = closure(random_triple(rng, universe, max_index=space.n))
                yield s, t

        pairs = sample_pairs()
        mode = "sampled"
        total = samples

    checked = 0
    for s, t in pairs:
        fs, ft = f_map(space, s.inner), f_map(space, t.inner)
        if fs == ft and s != t:
            return EmbeddingReport(False, mode, checked, f"not injective: {s!r} and {t!r}")
        if fs.intersect(ft) != f_map(space, m3_meet(s, t).inner):
            return EmbeddingReport(False, mode, checked, f"meet not preserved at {s!r}, {t!r}")
        if fs.sum(ft) != f_map(space, m3_join(s, t).inner):
            return EmbeddingReport(False, mode, checked, f"join not preserved at {s!r}, {t!r}")
        checked += 1
    return EmbeddingReport(True, mode, total)


# -- exhaustive subspace enumeration -------------------------------------------


def _reduce_against(basis: np.ndarray, vector: np.ndarray, p: int) -> np.ndarray:
    vec = vector % p
    for row in basis:
        j = int(np.flatnonzero(row)[0])
        if vec[j]:
            vec = (vec - vec[j] * row) % p
    return vec


def all_echelon_bases(field: PrimeField, dim: int) -> list[np.ndarray]:
    """Canonical bases of every subspace of GF(p)^dim, by BFS over extensions."""
    p = field.p
    vectors = [
        np.array(coords, dtype=np.int64)
        for coords in itertools.product(range(p), repeat=dim)
    ]
    zero = np.zeros((0, dim), dtype=np.int64)
    seen = {zero.tobytes(): zero}
    frontier = [zero]
    while frontier:
        next_frontier = []
        for basis in frontier:
            for vec in vectors:
                if _reduce_against(basis, vec, p).any():
                    bigger = rref(np.vstack([basis, vec[None, :]]), p)
                    key = bigger.tobytes()
                    if key not in seen:
                        seen[key] = bigger
                        next_frontier.append(bigger)
        frontier = next_frontier
    return sorted(seen.values(), key=lambda b: (b.shape[0], b.tobytes()))


def all_subspaces(space: PresentedSpace) -> list[Subspace]:
    """Every subspace of the presented space, in a fixed deterministic order."""
    return [Subspace(space, basis) for basis in all_echelon_bases(space.field, space.dim)]


def subspace_lattice(field: PrimeField, dim: int) -> tuple[FiniteLattice, list[np.ndarray]]:
    """The containment lattice of all subspaces of GF(p)^dim."""
    bases = all_echelon_bases(field, dim)
    n = len(bases)
    leq = np.zeros((n, n), dtype=bool)
    for i, u in enumerate(bases):
        for j, w in enumerate(bases):
            leq[i, j] = not any(_reduce_against(w, row, field.p).any() for row in u)
    return FiniteLattice(leq), bases
