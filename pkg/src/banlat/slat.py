"""The main lattice S, its Banaschewski function, and its two rival Boolean sublattices.

S consists of the balanced triples whose third component exceeds the median
only finitely.  The antitone complement map

    <A,B,C>  ->  <~A, ~(B|C), ~(A|B|C)>

is a Banaschewski function on S whose range E is exactly the triples of the
form <A,B,A&B>.  A second Boolean sublattice B arises as the image of the
pair embedding ``<A,C> -> <A, A&C, C>`` restricted to pairs with finite
symmetric difference.  The functions below make every structural claim
about E and B executable: complement searches, the non-distributivity
witness that certifies B's maximality, and the atom/coatom invariant that
separates B from E.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .setalg import OMEGA, FcSet, Universe, random_fcset, sim
from .triples import (
    BalancedTriple,
    Triple,
    closure,
    in_t,
    is_balanced,
    m3_join,
    m3_meet,
    random_triple,
)


class NotInLatticeError(ValueError):
    """Balanced triple falls outside the finite-defect family."""


@dataclass(frozen=True, slots=True)
class SElem:
    """An element of the main lattice: balanced with finite median defect."""

    triple: BalancedTriple

    def __post_init__(self):
        if not in_t(self.triple.inner):
            raise NotInLatticeError(f"median defect of {self.triple!r} is not finite")

    @classmethod
    def from_triple(cls, t: Triple) -> SElem:
        return cls(BalancedTriple(t))

    @classmethod
    def bottom(cls, universe: Universe = OMEGA) -> SElem:
        e = FcSet.empty(universe)
        return cls.from_triple(Triple(e, e, e))

    @classmethod
    def top(cls, universe: Universe = OMEGA) -> SElem:
        f = FcSet.full(universe)
        return cls.from_triple(Triple(f, f, f))

    @property
    def a(self) -> FcSet:
        return self.triple.a

    @property
    def b(self) -> FcSet:
        return self.triple.b

    @property
    def c(self) -> FcSet:
        return self.triple.c

    @property
    def universe(self) -> Universe:
        return self.triple.universe

    def meet(self, other: SElem) -> SElem:
        return SElem(m3_meet(self.triple, other.triple))

    def join(self, other: SElem) -> SElem:
        return SElem(m3_join(self.triple, other.triple))

    def __le__(self, other: SElem) -> bool:
        return self.triple <= other.triple

    def __repr__(self) -> str:
        return repr(self.triple)


@dataclass(frozen=True, slots=True)
class PairAC:
    """A pair of FcSets: an element of the square of the set algebra."""

    a: FcSet
    c: FcSet

    def __post_init__(self):
        if self.a.universe != self.c.universe:
            raise ValueError("pair components must share one universe")

    @property
    def universe(self) -> Universe:
        return self.a.universe

    def meet(self, other: PairAC) -> PairAC:
        return PairAC(self.a & other.a, self.c & other.c)

    def join(self, other: PairAC) -> PairAC:
        return PairAC(self.a | other.a, self.c | other.c)

    def complement(self) -> PairAC:
        return PairAC(~self.a, ~self.c)

    def __le__(self, other: PairAC) -> bool:
        return self.a <= other.a and self.c <= other.c

    @classmethod
    def bottom(cls, universe: Universe = OMEGA) -> PairAC:
        return cls(FcSet.empty(universe), FcSet.empty(universe))

    @classmethod
    def top(cls, universe: Universe = OMEGA) -> PairAC:
        return cls(FcSet.full(universe), FcSet.full(universe))

    def __repr__(self) -> str:
        return f"<{self.a!r},{self.c!r}>"


# -- the Banaschewski function and its range E -------------------------------


def banf(t: SElem) -> SElem:
    """Antitone complement map sending ``<A,B,C>`` to ``<~A, ~(B|C), ~(A|B|C)>``."""
    a, b, c = t.a, t.b, t.c
    return SElem.from_triple(Triple(~a, ~(b | c), ~(a | b | c)))


def in_e(t: SElem) -> bool:
    """Membership in the range of ``banf``: third component equals ``a & b``."""
    return t.c == t.a & t.b


def e_to_pair(t: SElem) -> PairAC:
    """Forget the redundant third component of a range element."""
    if not in_e(t):
        raise ValueError(f"{t!r} is not of the form <A,B,A&B>")
    return PairAC(t.a, t.b)


def e_from_pair(p: PairAC) -> SElem:
    return SElem.from_triple(Triple(p.a, p.c, p.a & p.c))


# -- the pair embedding g and the sublattices A, B ---------------------------


def g_embed(p: PairAC) -> BalancedTriple:
    """Bounded lattice embedding of pairs into balanced triples: ``<A, A&C, C>``."""
    return BalancedTriple(Triple(p.a, p.a & p.c, p.c))


def in_a(p: PairAC) -> bool:
    """Membership in the Boolean pair sublattice: finite symmetric difference."""
    return sim(p.a, p.c)


def g_elem(p: PairAC) -> SElem:
    """The g-image as a lattice element; requires the pair to be sim-related."""
    if not in_a(p):
        raise ValueError(f"{p!r} has infinite symmetric difference; image leaves the lattice")
    return SElem(g_embed(p))


def in_b(t: SElem) -> bool:
    """Membership in the g-image sublattice.

    Computed from the elementwise description (sim-related outer components
    with the middle one below the first) and cross-checked against being a
    g-image of a sim-related pair.
    """
    described = sim(t.a, t.c) and t.b <= t.a
    candidate = PairAC(t.a, t.c)
    witnessed = in_a(candidate) and g_embed(candidate) == t.triple
    assert described == witnessed, t
    return described


def is_complement_pair(s: SElem, t: SElem) -> bool:
    """Whether the two elements meet at bottom and join at top."""
    if s.universe != t.universe:
        raise ValueError("complement check needs one shared universe")
    return s.meet(t) == SElem.bottom(s.universe) and s.join(t) == SElem.top(s.universe)


def complement_obstruction(t: SElem, t_prime: SElem) -> bool:
    """Check ``b' <= a'`` on a complement of an outside element with ``b <= a``.

    The structural claim is that this always comes out false; the function
    exists so searches can try to falsify that claim empirically.
    """
    if in_b(t):
        raise ValueError("element must lie outside the g-image sublattice")
    if not t.b <= t.a:
        raise ValueError("element must have its middle component below the first")
    if not is_complement_pair(t, t_prime):
        raise ValueError("second argument must be a complement of the first")
    return t_prime.b <= t_prime.a


def _bounded_fcsets(universe: Universe, support_bound: int, cofinite: bool) -> list[FcSet]:
    """All sets of one tag with support inside ``[0, support_bound)``, mask order."""
    out = []
    for mask in range(1 << support_bound):
        support = [i for i in range(support_bound) if mask >> i & 1]
        out.append(FcSet.cofin(universe, support) if cofinite else FcSet.fin(universe, support))
    return out


def complements_in_b(t: SElem, support_bound: int) -> list[SElem]:
    """All complements of ``t`` in the g-image with support below the bound.

    Candidates are g-images of sim-related pairs, enumerated by tag
    (finite before cofinite) and then by increasing support bitmask of the
    first and second coordinate; the returned list preserves that order.
    """
    universe = t.universe
    found = []
    for cofinite in (False, True):
        sets = _bounded_fcsets(universe, support_bound, cofinite)
        for a, c in itertools.product(sets, sets):
            candidate = g_elem(PairAC(a, c))
            if is_complement_pair(t, candidate):
                found.append(candidate)
    return found


def complements_in_s_bounded(t: SElem, support_bound: int) -> list[SElem]:
    """All complements of ``t`` in the whole lattice with support below the bound.

    Candidates run over raw triples whose components each take both tags and
    any support inside ``[0, support_bound)``; enumeration is lexicographic in
    the three components with the tag ordering of the single-set enumerator.
    Cheap rejections (nonempty componentwise meet, unbalanced, infinite
    defect) happen before the join is evaluated.
    """
    universe = t.universe
    bottom_elem = SElem.bottom(universe)
    top_elem = SElem.top(universe)
    sets = _bounded_fcsets(universe, support_bound, False) + _bounded_fcsets(
        universe, support_bound, True
    )
    found = []
    for a in sets:
        if not (t.a & a).is_empty:
            continue
        for b in sets:
            if not (t.b & b).is_empty:
                continue
            for c in sets:
                if not (t.c & c).is_empty:
                    continue
                cand = Triple(a, b, c)
                if not is_balanced(cand) or not in_t(cand):
                    continue
                elem = SElem.from_triple(cand)
                if t.meet(elem) == bottom_elem and t.join(elem) == top_elem:
                    found.append(elem)
    return found


def find_complement_in_b(t: SElem, support_bound: int) -> SElem | None:
    """First complement of ``t`` inside the g-image, or None if the search is empty."""
    universe = t.universe
    for cofinite in (False, True):
        sets = _bounded_fcsets(universe, support_bound, cofinite)
        for a, c in itertools.product(sets, sets):
            candidate = g_elem(PairAC(a, c))
            if is_complement_pair(t, candidate):
                return candidate
    return None


def nondistrib_witness(t: SElem) -> tuple[FcSet, BalancedTriple, BalancedTriple]:
    """Distributivity failure for any sublattice containing ``t`` and the g-image.

    Picks a finite nonempty ``F`` inside ``b - a`` and returns
    ``(F, t & (gF0 | g0F), (t & gF0) | (t & g0F))``; the two lattice terms
    evaluate to ``<0,F,0>`` and ``<0,0,0>`` respectively, so they differ.
    """
    diff = t.b - t.a
    if diff.is_empty:
        raise ValueError("middle component must not be below the first")
    f = diff if diff.is_finite else FcSet.fin(t.universe, [diff.least()])
    empty = FcSet.empty(t.universe)
    g_f0 = SElem(g_embed(PairAC(f, empty)))
    g_0f = SElem(g_embed(PairAC(empty, f)))
    lhs = t.meet(g_f0.join(g_0f))
    rhs = t.meet(g_f0).join(t.meet(g_0f))
    return f, lhs.triple, rhs.triple


# -- the invariant separating B from E ---------------------------------------


def is_finite_join_of_atoms(p: PairAC) -> bool:
    """Whether the pair decomposes as a finite join of atoms of the pair algebra."""
    return p.a.is_finite and p.c.is_finite


def is_finite_meet_of_coatoms(p: PairAC) -> bool:
    """Whether the pair decomposes as a finite meet of coatoms of the pair algebra."""
    return p.a.is_cofinite and p.c.is_cofinite


def atom_decomposition(p: PairAC) -> list[PairAC]:
    """The atoms below a finite pair; their join recovers the pair."""
    if not is_finite_join_of_atoms(p):
        raise ValueError("pair is not a finite join of atoms")
    universe = p.universe
    empty = FcSet.empty(universe)
    atoms = [PairAC(FcSet.fin(universe, [i]), empty) for i in sorted(p.a.members)]
    atoms += [PairAC(empty, FcSet.fin(universe, [i])) for i in sorted(p.c.members)]
    return atoms


def coatom_decomposition(p: PairAC) -> list[PairAC]:
    """The coatoms above a cofinite pair; their meet recovers the pair."""
    if not is_finite_meet_of_coatoms(p):
        raise ValueError("pair is not a finite meet of coatoms")
    universe = p.universe
    full = FcSet.full(universe)
    coatoms = [PairAC(FcSet.cofin(universe, [i]), full) for i in sorted((~p.a).members)]
    coatoms += [PairAC(full, FcSet.cofin(universe, [i])) for i in sorted((~p.c).members)]
    return coatoms


# -- sampling helpers ---------------------------------------------------------


def random_s_elem(
    rng: random.Random,
    universe: Universe = OMEGA,
    max_index: int = 16,
    max_tries: int = 64,
) -> SElem:
    """Random lattice element: close a random triple, retry until the defect is finite."""
    for _ in range(max_tries):
        t = closure(random_triple(rng, universe, max_index))
        if in_t(t.inner):
            return SElem(t)
    raise RuntimeError("failed to sample a lattice element")


def random_comparable_pair(
    rng: random.Random, universe: Universe = OMEGA, max_index: int = 16
) -> tuple[SElem, SElem]:
    """A random pair ``s <= t``, built by meeting ``t`` with a second element."""
    t = random_s_elem(rng, universe, max_index)
    s = t.meet(random_s_elem(rng, universe, max_index))
    return s, t

def random_pair_ac(rng: random.Random, universe: Universe = OMEGA, max_index: int = 16) -> PairAC:
    return PairAC(random_fcset(rng, universe, max_index), random_fcset(rng, universe, max_index))


def random_sim_pair(rng: random.Random, universe: Universe = OMEGA, max_index: int = 16) -> PairAC:
    """Random sim-related pair: both components finite or both cofinite."""
    a = random_fcset(rng, universe, max_index)
    support = [i for i in range(max_index) if rng.random() < 0.5]
    if a.is_finite:
        return PairAC(a, FcSet.fin(universe, support))
    return PairAC(a, FcSet.cofin(universe, support))


def random_outside_b_with_b_below_a(
    rng: random.Random, universe: Universe = OMEGA, max_index: int = 16
) -> SElem:
    """Random element outside the g-image whose middle component sits below the first.

    Such elements are exactly the g-shaped triples ``<A, A&C, C>`` built from
    a cofinite ``A`` and a finite ``C`` (a non-sim pair), so sample those
    directly.
    """
    a = FcSet.cofin(universe, (i for i in range(max_index) if rng.random() < 0.5))
    c = FcSet.fin(universe, (i for i in range(max_index) if rng.random() < 0.5))
    return SElem.from_triple(Triple(a, a & c, c))


def random_outside_b_with_b_not_below_a(
    rng: random.Random, universe: Universe = OMEGA, max_index: int = 16, max_tries: int = 256
) -> SElem:
    """Random element whose middle component pokes outside the first."""
    for _ in range(max_tries):
        t = random_s_elem(rng, universe, max_index)
        if not t.b <= t.a:
            return t
    raise RuntimeError("failed to sample an element with b not below a")
