"""Banaschewski functions on finite bounded lattices.

A Banaschewski function is an antitone self-map sending every element to a
complement of it.  This module verifies candidates, enumerates all such
functions by pruned backtracking, and analyzes their ranges: on a finite
complemented modular lattice every Boolean range should be isomorphic to
every other, and that is checked here by explicit search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .finlat import (
    FiniteLattice,
    SearchBudgetError,
    complement_matrix,
    is_boolean,
    is_isomorphic,
    is_sublattice,
    sublattice,
)


@dataclass(frozen=True)
class BanMap:
    """A total self-map on a finite lattice, given by its value table."""

    lattice: FiniteLattice
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.lattice.n:
            raise ValueError(f"table length {len(self.table)} != lattice size {self.lattice.n}")
        if any(not 0 <= v < self.lattice.n for v in self.table):
            raise ValueError("table values must be element indices")

    def to_json(self) -> dict:
        return {"table": list(self.table)}

    @classmethod
    def from_json(cls, lattice: FiniteLattice, data: dict) -> BanMap:
        return cls(lattice, tuple(data["table"]))


def is_banaschewski(lat: FiniteLattice, f: BanMap) -> bool:
    """Antitone on all comparable pairs, and f(x) is a complement of x for every x."""
    t = np.asarray(f.table)
    reversed_ok = lat.leq[np.ix_(t, t)].T | ~lat.leq
    idx = np.arange(lat.n)
    complements = (lat.meet[idx, t] == lat.bottom) & (lat.join[idx, t] == lat.top)
    return bool(reversed_ok.all() and complements.all())


def _linear_extension(lat: FiniteLattice) -> list[int]:
    """Bottom-up order: sorting by down-set size extends the lattice order."""
    down = lat.leq.sum(axis=0)
    return sorted(range(lat.n), key=lambda i: (int(down[i]), i))


def enumerate_banaschewski(lat: FiniteLattice) -> list[BanMap]:
    """All Banaschewski functions, by backtracking along a linear extension.

    Elements are assigned bottom-up; a candidate value must be a complement
    of its element and must sit below the values of all previously assigned
    smaller elements.  Candidate values are tried in ascending index order,
    which fixes the output order.
    """
    comp = complement_matrix(lat)
    if not comp.any(axis=1).all():
        return []  # not complemented: no total complement-valued map exists
    order = _linear_extension(lat)
    candidates = [[int(v) for v in np.flatnonzero(comp[i])] for i in range(lat.n)]
    leq = lat.leq
    table = [-1] * lat.n
    found: list[BanMap] = []

    def backtrack(pos: int) -> None:
        if pos == lat.n:
            found.append(BanMap(lat, tuple(table)))
            return
        x = order[pos]
        for value in candidates[x]:
            ok = True
            for prev in range(pos):
                y = order[prev]
                if leq[y, x] and not leq[value, table[y]]:
                    ok = False
                    break
            if ok:
                table[x] = value
                backtrack(pos + 1)
                table[x] = -1

    backtrack(0)
    return found


@dataclass(frozen=True)
class RangeInfo:
    """Image of a map, with a flag for closure under the ambient operations."""

    elements: frozenset[int]
    is_sublattice: bool


def range_of(f: BanMap) -> RangeInfo:
    image = frozenset(f.table)
    return RangeInfo(image, is_sublattice(f.lattice, image))


def is_range_of_some_banaschewski(lat: FiniteLattice, mask) -> BanMap | None:
    """Search for a Banaschewski function with image exactly ``mask``.

    Backtracking as in enumeration but with values restricted to the mask,
    plus a pigeonhole prune on the still-unhit mask elements.  Returns the
    first function found in the deterministic order, or None after the
    exhaustive search fails.
    """
    mask = frozenset(mask)
    if any(not 0 <= i < lat.n for i in mask):
        raise ValueError(f"mask contains invalid indices: {sorted(mask)}")
    comp = complement_matrix(lat)
    order = _linear_extension(lat)
    candidates = [[int(v) for v in np.flatnonzero(comp[i]) if v in mask] for i in range(lat.n)]
    leq = lat.leq
    table = [-1] * lat.n
    hits = {v: 0 for v in mask}

    def backtrack(pos: int) -> BanMap | None:
        if pos == lat.n:
            if all(hits[v] > 0 for v in mask):
                return BanMap(lat, tuple(table))
            return None
        missing = sum(1 for v in mask if hits[v] == 0)
        if missing > lat.n - pos:
            return None
        x = order[pos]
        for value in candidates[x]:
            ok = True
            for prev in range(pos):
                y = order[prev]
                if leq[y, x] and not leq[value, table[y]]:
                    ok = False
                    break
            if ok:
                table[x] = value
                hits[value] += 1
                result = backtrack(pos + 1)
                if result is not None:
                    return result
                hits[value] -= 1
                table[x] = -1
        return None

    return backtrack(0)


def boolean_ranges_isomorphic(lat: FiniteLattice) -> bool:
    """Whether all Boolean Banaschewski ranges on the lattice are isomorphic.

    Enumerates every Banaschewski function, keeps those whose image is a
    Boolean sublattice, and compares the induced lattices pairwise.
    Restricted to n <= 12 because the enumeration is exponential.
    """
    if lat.n > 12:
        raise SearchBudgetError(f"full enumeration is exponential; n={lat.n} exceeds 12")
    masks = []
    seen = set()
    for f in enumerate_banaschewski(lat):
        info = range_of(f)
        if info.elements in seen:
            continue
        seen.add(info.elements)
        if info.is_sublattice and is_boolean(sublattice(lat, info.elements)):
            masks.append(info.elements)
    if not masks:
        return True
    base = sublattice(lat, masks[0])
    return all(is_isomorphic(base, sublattice(lat, m)) for m in masks[1:])
