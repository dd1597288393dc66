"""Balanced triples of finite-or-cofinite sets and the lattices built on them.

A triple is *balanced* when its three pairwise meets agree.  The balanced
triples form a lattice: meet is componentwise, and join is the closure of
the componentwise join, where the closure joins every component with the
median polynomial ``(a&b)|(a&c)|(b&c)``.  On top of that sits the family of
triples whose third component exceeds the median only by a finite set; its
balanced members form the bounded modular lattice that everything else in
this package studies.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .setalg import OMEGA, FcSet, Universe, random_fcset


class NotBalancedError(ValueError):
    """Triple fails the balanced condition (equal pairwise meets)."""


def _raw_triple(a: FcSet, b: FcSet, c: FcSet):
    """Triple construction without the shared-universe check.

    Only for components produced by one binary FcSet operation, which has
    already enforced the invariant.
    """
    obj = object.__new__(Triple)
    object.__setattr__(obj, "a", a)
    object.__setattr__(obj, "b", b)
    object.__setattr__(obj, "c", c)
    return obj


@dataclass(frozen=True, slots=True)
class Triple:
    """An ordered triple of FcSets over one shared universe."""

    a: FcSet
    b: FcSet
    c: FcSet

    def __post_init__(self):
        ua, ub, uc = self.a.universe, self.b.universe, self.c.universe
        if (ua is not ub and ua != ub) or (ua is not uc and ua != uc):
            raise ValueError("triple components must share one universe")

    @property
    def universe(self) -> Universe:
        return self.a.universe

    def meet(self, other: Triple) -> Triple:
        """Componentwise intersection (the meet of the product lattice)."""
        return _raw_triple(
            self.a.intersection(other.a),
            self.b.intersection(other.b),
            self.c.intersection(other.c),
        )

    def join_raw(self, other: Triple) -> Triple:
        """Componentwise union; not balanced in general."""
        return _raw_triple(
            self.a.union(other.a), self.b.union(other.b), self.c.union(other.c)
        )

    def __le__(self, other: Triple) -> bool:
        return self.a <= other.a and self.b <= other.b and self.c <= other.c

    def to_json(self) -> list:
        return [self.a.to_json(), self.b.to_json(), self.c.to_json()]

    @classmethod
    def from_json(cls, data: list) -> Triple:
        if not isinstance(data, list) or len(data) != 3:
            raise ValueError("a triple is a 3-element array of set objects")
        return cls(*(FcSet.from_json(part) for part in data))

    def __repr__(self) -> str:
        return f"<{self.a!r},{self.b!r},{self.c!r}>"


def mu(t: Triple) -> FcSet:
    """Median polynomial ``(a&b) | (a&c) | (b&c)``."""
    return (t.a & t.b) | (t.a & t.c) | (t.b & t.c)


def is_balanced(t: Triple) -> bool:
    ab = t.a & t.b
    return ab == t.a & t.c and ab == t.b & t.c


@dataclass(frozen=True, slots=True)
class BalancedTriple:
    """A triple whose pairwise meets all agree, checked at construction."""

    inner: Triple

    def __post_init__(self):
        if not is_balanced(self.inner):
            raise NotBalancedError(f"not balanced: {self.inner!r}")

    @property
    def a(self) -> FcSet:
        return self.inner.a

    @property
    def b(self) -> FcSet:
        return self.inner.b

    @property
    def c(self) -> FcSet:
        return self.inner.c

    @property
    def universe(self) -> Universe:
        return self.inner.universe

    def __le__(self, other: BalancedTriple) -> bool:
        return self.inner <= other.inner

    def __repr__(self) -> str:
        return repr(self.inner)


def closure(t: Triple) -> BalancedTriple:
    """Least balanced triple above ``t``: join every component with the median.

    Distributivity collapses each component to a single binary join, e.g.
    ``a | (b & c)`` for the first; ``closure_simplified`` computes that
    route so the two can be cross-checked.
    """
    m = mu(t)
    return BalancedTriple(_raw_triple(t.a.union(m), t.b.union(m), t.c.union(m)))


def closure_simplified(t: Triple) -> Triple:
    """The closure via the three collapsed binary joins (independent route)."""
    return Triple(t.a | (t.b & t.c), t.b | (t.a & t.c), t.c | (t.a & t.b))


def m3_meet(s: BalancedTriple, t: BalancedTriple) -> BalancedTriple:
    """Meet of balanced triples: componentwise (balanced triples are meet-closed)."""
    return BalancedTriple(s.inner.meet(t.inner))


def m3_join(s: BalancedTriple, t: BalancedTriple) -> BalancedTriple:
    """Join of balanced triples: closure of the componentwise union."""
    return closure(s.inner.join_raw(t.inner))


def in_t(t: Triple) -> bool:
    """Whether the third component exceeds the median only by a finite set."""
    return (t.c - mu(t)).is_finite


def in_s(t: Triple) -> bool:
    """Balanced and in the finite-defect family: membership in the main lattice."""
    return in_t(t) and is_balanced(t)


def bottom(universe: Universe = OMEGA) -> Triple:
    e = FcSet.empty(universe)
    return Triple(e, e, e)


def top(universe: Universe = OMEGA) -> Triple:
    f = FcSet.full(universe)
    return Triple(f, f, f)


def diagonal(x: FcSet) -> Triple:
    """The embedding ``X -> <X,X,X>`` of the set algebra into balanced triples."""
    return Triple(x, x, x)


def all_triples(universe: Universe) -> list[Triple]:
    """Every triple over a finite universe, in a fixed enumeration order."""
    if not universe.is_finite:
        raise ValueError("exhaustive enumeration needs a finite universe")
    subsets = [
        FcSet.fin(universe, combo)
        for size in range(universe.size + 1)
        for combo in itertools.combinations(range(universe.size), size)
    ]
    return [Triple(a, b, c) for a in subsets for b in subsets for c in subsets]


def random_triple(rng: random.Random, universe: Universe = OMEGA, max_index: int = 16) -> Triple:
    return Triple(
        random_fcset(rng, universe, max_index),
        random_fcset(rng, universe, max_index),
        random_fcset(rng, universe, max_index),
    )
