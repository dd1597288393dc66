"""Exact algebra of finite-or-cofinite index sets.

Over a countably infinite universe the subsets that are finite or have a
finite complement form a Boolean sublattice of the full power set.  Every
value here is an exactly represented member of that algebra, canonicalized
so that structural equality coincides with set equality.  Finite universes
are admitted too; there every subset qualifies and the algebra is the full
power set.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


class UniverseMismatchError(ValueError):
    """Binary operation applied to sets over different universes."""


@dataclass(frozen=True, slots=True)
class Universe:
    """Index universe: the naturals (``size is None``) or ``{0, ..., size-1}``."""

    size: int | None = None

    def __post_init__(self):
        if self.size is not None and (not isinstance(self.size, int) or self.size < 0):
            raise ValueError(f"finite universe size must be a natural, got {self.size!r}")

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    def __repr__(self) -> str:
        return "omega" if self.size is None else f"Finite({self.size})"

    def to_json(self):
        return "omega" if self.size is None else {"finite": self.size}

    @classmethod
    def from_json(cls, data) -> Universe:
        if data == "omega":
            return OMEGA
        if isinstance(data, dict) and set(data) == {"finite"}:
            return cls(data["finite"])
        raise ValueError(f"bad universe spec: {data!r}")


OMEGA = Universe()


def _raw(universe: Universe, cofinite: bool, support: frozenset[int]):
    """Construct an FcSet skipping validation; callers must keep canonical form."""
    obj = object.__new__(FcSet)
    object.__setattr__(obj, "universe", universe)
    object.__setattr__(obj, "cofinite", cofinite)
    object.__setattr__(obj, "support", support)
    return obj


@dataclass(frozen=True, slots=True, eq=False)
class FcSet:
    """A finite or cofinite subset of its universe, in canonical form.

    ``support`` lists the members when ``cofinite`` is false and the
    non-members when it is true.  Finite universes always store
    ``cofinite=False`` (the factories normalize), so equal sets have
    identical representations and ``==`` is set equality.
    """

    universe: Universe
    cofinite: bool
    support: frozenset[int]

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FcSet):
            return NotImplemented
        return (
            self.cofinite == other.cofinite
            and self.support == other.support
            and (self.universe is other.universe or self.universe == other.universe)
        )

    def __hash__(self) -> int:
        return hash((self.cofinite, self.support))

    def __post_init__(self):
        for i in self.support:
            if not isinstance(i, int) or i < 0:
                raise ValueError(f"indices must be naturals, got {i!r}")
            if self.universe.is_finite and i >= self.universe.size:
                raise ValueError(f"index {i} outside {self.universe}")
        if self.universe.is_finite and self.cofinite:
            raise ValueError("finite-universe sets must be built via FcSet.fin/FcSet.cofin")

    # -- construction ------------------------------------------------------

    @classmethod
    def fin(cls, universe: Universe, members=()) -> FcSet:
        """The finite set with the given members."""
        return cls(universe, False, frozenset(members))

    @classmethod
    def cofin(cls, universe: Universe, excluded=()) -> FcSet:
        """The set containing everything except the given indices."""
        excluded = frozenset(excluded)
        if universe.is_finite:
            return cls(universe, False, frozenset(range(universe.size)) - excluded)
        return cls(universe, True, excluded)

    @classmethod
    def empty(cls, universe: Universe) -> FcSet:
        return cls.fin(universe)

    @classmethod
    def full(cls, universe: Universe) -> FcSet:
        return cls.cofin(universe)

    # -- structure ---------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return not self.cofinite or self.universe.size is not None

    @property
    def is_cofinite(self) -> bool:
        return self.cofinite or self.universe.size is not None

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.support

    @property
    def is_full(self) -> bool:
        if self.universe.is_finite:
            return len(self.support) == self.universe.size
        return self.cofinite and not self.support

    @property
    def members(self) -> frozenset[int]:
        """Explicit member set; only available when the set is finite."""
        if not self.is_finite:
            raise ValueError("cofinite set over an infinite universe has no finite member list")
        return self.support

    def __contains__(self, index: int) -> bool:
        return (index in self.support) != self.cofinite

    def least(self) -> int:
        """Smallest member (the set must be nonempty)."""
        if not self.cofinite:
            if not self.support:
                raise ValueError("empty set has no least member")
            return min(self.support)
        k = 0
        while k in self.support:
            k += 1
        return k

    def _check(self, other: FcSet) -> None:
        if self.universe is not other.universe and self.universe != other.universe:
            raise UniverseMismatchError(f"{self.universe} vs {other.universe}")

    # -- Boolean operations (case analysis over the two tags) ---------------
    # Results of these use _raw: the case analysis cannot leave canonical form.
    # The universe check is inlined; these are the innermost hot paths of
    # every exhaustive lattice-law run.

    def union(self, other: FcSet) -> FcSet:
        u = self.universe
        if u is not other.universe and u != other.universe:
            raise UniverseMismatchError(f"{u} vs {other.universe}")
        sa, sb = self.support, other.support
        if not self.cofinite and not other.cofinite:
            return _raw(u, False, sa | sb)
        if not self.cofinite:
            return _raw(u, True, sb - sa)
        if not other.cofinite:
            return _raw(u, True, sa - sb)
        return _raw(u, True, sa & sb)

    def intersection(self, other: FcSet) -> FcSet:
        u = self.universe
        if u is not other.universe and u != other.universe:
            raise UniverseMismatchError(f"{u} vs {other.universe}")
        sa, sb = self.support, other.support
        if not self.cofinite and not other.cofinite:
            return _raw(u, False, sa & sb)
        if not self.cofinite:
            return _raw(u, False, sa - sb)
        if not other.cofinite:
            return _raw(u, False, sb - sa)
        return _raw(u, True, sa | sb)

    def complement(self) -> FcSet:
        if self.universe.size is not None:
            return _raw(self.universe, False, frozenset(range(self.universe.size)) - self.support)
        return _raw(self.universe, not self.cofinite, self.support)

    def difference(self, other: FcSet) -> FcSet:
        u = self.universe
        if u is not other.universe and u != other.universe:
            raise UniverseMismatchError(f"{u} vs {other.universe}")
        sa, sb = self.support, other.support
        if not self.cofinite and not other.cofinite:
            return _raw(u, False, sa - sb)
        if not self.cofinite:
            return _raw(u, False, sa & sb)
        if not other.cofinite:
            return _raw(u, True, sa | sb)
        return _raw(u, False, sb - sa)

    def symmetric_difference(self, other: FcSet) -> FcSet:
        return self.difference(other).union(other.difference(self))

    def is_subset(self, other: FcSet) -> bool:
        return self.intersection(other) == self

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __xor__ = symmetric_difference
    __le__ = is_subset

    def __invert__(self) -> FcSet:
        return self.complement()

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "universe": self.universe.to_json(),
            "tag": "cofin" if self.cofinite else "fin",
            "support": sorted(self.support),
        }

    @classmethod
    def from_json(cls, data: dict) -> FcSet:
        universe = Universe.from_json(data["universe"])
        tag = data["tag"]
        if tag not in ("fin", "cofin"):
            raise ValueError(f"bad tag: {tag!r}")
        support = data["support"]
        if len(set(support)) != len(support):
            raise ValueError("support has duplicates")
        if tag == "fin":
            return cls.fin(universe, support)
        return cls.cofin(universe, support)

    def __repr__(self) -> str:
        body = "{%s}" % ",".join(map(str, sorted(self.support)))
        return ("Cofin" if self.cofinite else "Fin") + body


def sim(a: FcSet, c: FcSet) -> bool:
    """Whether the pair is finite (both finite) or co-finite (both cofinite).

    Equivalent to the symmetric difference being finite; both routes are
    computed and cross-checked.
    """
    a._check(c)
    by_tags = (a.is_finite and c.is_finite) or (a.is_cofinite and c.is_cofinite)
    by_symdiff = a.symmetric_difference(c).is_finite
    assert by_tags == by_symdiff, (a, c)
    return by_tags


def random_fcset(rng: random.Random, universe: Universe = OMEGA, max_index: int = 16) -> FcSet:
    """Random set with support drawn from indices below ``max_index``, both tags."""
    if universe.is_finite:
        max_index = min(max_index, universe.size)
    support = [i for i in range(max_index) if rng.random() < 0.5]
    if not universe.is_finite and rng.random() < 0.5:
        return FcSet.cofin(universe, support)
    return FcSet.fin(universe, support)
