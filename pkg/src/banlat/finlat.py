"""Explicit finite bounded lattices with exhaustive property checks.

A lattice is given by its boolean order matrix; meet and join tables are
computed and validated at construction.  On top of that sit decision
procedures for distributivity, modularity, the Arguesian inequality,
complementation, Boolean-ness, the balanced-triple construction ``m3_of``,
sublattice machinery, and isomorphism testing.  Everything is exact and
deterministic; randomized Arguesian sampling records its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np


class NotAPosetError(ValueError):
    """Order matrix is not reflexive, antisymmetric and transitive."""


class NotALatticeError(ValueError):
    """Some pair of elements lacks a meet or a join."""


class SearchBudgetError(RuntimeError):
    """Exponential search exceeded its configured budget."""


class InternalCheckError(RuntimeError):
    """Two independent computations of the same table disagree."""


def _as_bool_matrix(leq) -> np.ndarray:
    mat = np.asarray(leq, dtype=bool)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise NotAPosetError(f"order matrix must be square, got shape {mat.shape}")
    return mat


class FiniteLattice:
    """A finite bounded lattice on elements ``0..n-1``.

    ``leq`` is the full order matrix, ``meet``/``join`` the element-index
    tables realizing greatest lower / least upper bounds.  Instances are
    immutable after construction.
    """

    __slots__ = ("n", "leq", "meet", "join", "bottom", "top")

    def __init__(self, leq):
        mat = _as_bool_matrix(leq)
        n = mat.shape[0]
        if n == 0:
            raise NotALatticeError("a bounded lattice needs at least one element")
        if not mat.diagonal().all():
            raise NotAPosetError("order not reflexive")
        if ((mat & mat.T).sum() > n):
            raise NotAPosetError("order not antisymmetric")
        closure = mat.astype(np.float32) @ mat.astype(np.float32) > 0
        if (closure & ~mat).any():
            raise NotAPosetError("order not transitive")

        self.n = n
        self.leq = mat.copy()
        self.leq.flags.writeable = False
        self.meet = self._bound_table(lower=True)
        self.join = self._bound_table(lower=False)
        self.bottom = int(np.flatnonzero(mat.all(axis=1))[0])
        self.top = int(np.flatnonzero(mat.all(axis=0))[0])
        self._spot_check_laws()

    def _bound_table(self, lower: bool) -> np.ndarray:
        """Greatest-lower or least-upper bound table via tensorized search."""
        leq = self.leq
        n = self.n
        if lower:
            # bounds[i,j,k]: k is a common lower bound of i and j
            bounds = leq.T[:, None, :] & leq.T[None, :, :]
            reach = ~leq  # defect[k',k]: k' not <= k
        else:
            bounds = leq[:, None, :] & leq[None, :, :]
            reach = ~leq.T  # defect[k',k]: k not <= k'
        # defects[i,j,k] counts bounds of (i,j) that k fails to dominate
        defects = bounds.astype(np.float32).reshape(n * n, n) @ reach.astype(np.float32)
        best = bounds & (defects.reshape(n, n, n) == 0)
        counts = best.sum(axis=2)
        if (counts == 0).any():
            i, j = np.argwhere(counts == 0)[0]
            kind = "meet" if lower else "join"
            raise NotALatticeError(f"elements {i} and {j} have no {kind}")
        table = best.argmax(axis=2).astype(np.int32)
        table.flags.writeable = False
        return table

    def _spot_check_laws(self) -> None:
        """Commutativity, absorption always; associativity exhaustively for n <= 64."""
        meet, join = self.meet, self.join
        idx = np.arange(self.n)
        if not (meet == meet.T).all() or not (join == join.T).all():
            raise InternalCheckError("bound tables not commutative")
        if not (meet[idx[:, None], join] == idx[:, None]).all():
            raise InternalCheckError("absorption x & (x | y) failed")
        if not (join[idx[:, None], meet] == idx[:, None]).all():
            raise InternalCheckError("absorption x | (x & y) failed")
        if self.n <= 64:
            x = idx[:, None, None]
            y = idx[None, :, None]
            z = idx[None, None, :]
            for table in (meet, join):
                if not (table[table[x, y], z] == table[x, table[y, z]]).all():
                    raise InternalCheckError("bound table not associative")
        else:
            rng = random.Random(0)
            for _ in range(2000):
                x, y, z = (rng.randrange(self.n) for _ in range(3))
                for table in (self.meet, self.join):
                    if table[table[x, y], z] != table[x, table[y, z]]:
                        raise InternalCheckError("bound table not associative")

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "leq": self.leq.astype(int).tolist()}

    @classmethod
    def from_json(cls, data: dict) -> FiniteLattice:
        if not isinstance(data, dict) or "n" not in data or "leq" not in data:
            raise ValueError('lattice JSON needs fields "n" and "leq"')
        n = data["n"]
        rows = data["leq"]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f'field "leq" must be an {n}x{n} 0/1 matrix')
        if any(cell not in (0, 1) for row in rows for cell in row):
            raise ValueError('field "leq" entries must be 0 or 1')
        return cls(rows)

    def __repr__(self) -> str:
        return f"FiniteLattice(n={self.n})"


def from_order(n: int, leq) -> FiniteLattice:
    """Build a lattice from an explicit n-by-n order matrix."""
    mat = _as_bool_matrix(leq)
    if mat.shape[0] != n:
        raise ValueError(f"declared n={n} but matrix is {mat.shape[0]}x{mat.shape[1]}")
    return FiniteLattice(mat)


# -- standard constructions ---------------------------------------------------


def chain(n: int) -> FiniteLattice:
    idx = np.arange(n)
    return FiniteLattice(idx[:, None] <= idx[None, :])


def boolean_lattice(k: int) -> FiniteLattice:
    """The powerset of a k-element set; element i is the bitmask of a subset."""
    idx = np.arange(1 << k)
    return FiniteLattice((idx[:, None] & ~idx[None, :]) == 0)


def m3() -> FiniteLattice:
    """The five-element diamond: bottom 0, atoms 1..3, top 4."""
    leq = np.eye(5, dtype=bool)
    leq[0, :] = True
    leq[:, 4] = True
    return FiniteLattice(leq)


def n5() -> FiniteLattice:
    """The five-element pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4."""
    leq = np.eye(5, dtype=bool)
    leq[0, :] = True
    leq[:, 4] = True
    leq[1, 2] = True
    return FiniteLattice(leq)


def add_top(lat: FiniteLattice) -> FiniteLattice:
    """Adjoin a new greatest element above everything."""
    n = lat.n
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = lat.leq
    leq[:, n] = True
    return FiniteLattice(leq)


def double_element(lat: FiniteLattice, i: int) -> FiniteLattice:
    """Split element ``i`` into a two-element interval (a clone directly above it)."""
    n = lat.n
    leq = np.zeros((n + 1, n + 1), dtype=bool)
    leq[:n, :n] = lat.leq
    leq[:n, n] = lat.leq[:, i]  # x <= clone  iff  x <= i
    leq[n, :n] = lat.leq[i, :] & (np.arange(n) != i)  # clone <= y  iff  i < y
    leq[n, n] = True
    return FiniteLattice(leq)


def product(lat1: FiniteLattice, lat2: FiniteLattice) -> FiniteLattice:
    """Direct product; element ``i*n2 + j`` is the pair ``(i, j)``."""
    leq = np.kron(lat1.leq, lat2.leq).astype(bool)
    return FiniteLattice(leq)


def curated_family() -> list[tuple[str, FiniteLattice]]:
    """The named small lattices used throughout the test batteries."""
    return [
        ("chain2", chain(2)),
        ("chain3", chain(3)),
        ("chain4", chain(4)),
        ("chain5", chain(5)),
        ("bool2", boolean_lattice(2)),
        ("bool3", boolean_lattice(3)),
        ("m3", m3()),
        ("n5", n5()),
        ("m3_top", add_top(m3())),
        ("n5_doubled", double_element(n5(), 1)),
    ]


# -- property checks ----------------------------------------------------------


def is_distributive(lat: FiniteLattice) -> bool:
    """Exhaustive check of x & (y | z) == (x & y) | (x & z)."""
    idx = np.arange(lat.n)
    lhs = lat.meet[idx[:, None, None], lat.join[None, :, :]]
    rhs = lat.join[lat.meet[:, :, None], lat.meet[:, None, :]]
    return bool((lhs == rhs).all())


def is_modular(lat: FiniteLattice) -> bool:
    """Exhaustive check of the modular law: x <= z implies x | (y & z) == (x | y) & z."""
    idx = np.arange(lat.n)
    x = idx[:, None, None]
    z = idx[None, None, :]
    lhs = lat.join[x, lat.meet[None, :, :]]
    rhs = lat.meet[lat.join[x, idx[None, :, None]], z]
    applicable = lat.leq[idx[:, None, None], z]
    return bool((~applicable | (lhs == rhs)).all())


def complement_matrix(lat: FiniteLattice) -> np.ndarray:
    """Boolean matrix: entry (x, y) iff y is a complement of x."""
    return (lat.meet == lat.bottom) & (lat.join == lat.top)


def complements_of(lat: FiniteLattice, x: int) -> list[int]:
    return [int(y) for y in np.flatnonzero(complement_matrix(lat)[x])]


def is_complemented(lat: FiniteLattice) -> bool:
    return bool(complement_matrix(lat).any(axis=1).all())


def is_uniquely_complemented(lat: FiniteLattice) -> bool:
    return bool((complement_matrix(lat).sum(axis=1) == 1).all())


def is_boolean(lat: FiniteLattice) -> bool:
    """Distributive and uniquely complemented."""
    return is_distributive(lat) and is_uniquely_complemented(lat)


# -- the Arguesian inequality --------------------------------------------------


@dataclass(frozen=True)
class ArguesianReport:
    """Outcome of an Arguesian-law check, recording the search mode used."""

    holds: bool
    mode: str  # "exhaustive" or "sampled"
    checked: int
    seed: int | None = None
    counterexample: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _arguesian_violation(lat: FiniteLattice, a0, a1, a2, b0, b1, b2) -> np.ndarray:
    """Vectorized violation mask for the six-variable Arguesian inequality."""
    meet, join = lat.meet, lat.join
    c0 = meet[join[a1, a2], join[b1, b2]]
    c1 = meet[join[a0, a2], join[b0, b2]]
    c2 = meet[join[a0, a1], join[b0, b1]]
    c = meet[c2, join[c0, c1]]
    lhs = meet[meet[join[a0, b0], join[a1, b1]], join[a2, b2]]
    rhs = join[meet[join[c, a1], a0], meet[join[c, b1], b0]]
    return ~lat.leq[lhs, rhs]


def is_arguesian(
    lat: FiniteLattice, sample_budget: int = 1_000_000, seed: int = 0, chunk: int = 1 << 18
) -> ArguesianReport:
    """Check the Arguesian inequality over 6-tuples.

    Exhaustive when ``n**6 <= sample_budget``, otherwise uniform random
    sampling of ``sample_budget`` tuples with the given seed.  Stops at the
    first violation.
    """
    n = lat.n
    total = n**6
    if total <= sample_budget:
        checked = 0
        for start in range(0, total, chunk):
            flat = np.arange(start, min(start + chunk, total), dtype=np.int64)
            vars6 = [(flat // n**k) % n for k in range(6)]
            bad = _arguesian_violation(lat, *vars6)
            checked += len(flat)
            if bad.any():
                at = int(np.flatnonzero(bad)[0])
                witness = tuple(int(v[at]) for v in vars6)
                return ArguesianReport(False, "exhaustive", checked, None, witness)
        return ArguesianReport(True, "exhaustive", total)

    rng = np.random.default_rng(seed)
    checked = 0
    while checked < sample_budget:
        size = min(chunk, sample_budget - checked)
        vars6 = [rng.integers(0, n, size) for _ in range(6)]
        bad = _arguesian_violation(lat, *vars6)
        checked += size
        if bad.any():
            at = int(np.flatnonzero(bad)[0])
            witness = tuple(int(v[at]) for v in vars6)
            return ArguesianReport(False, "sampled", checked, seed, witness)
    return ArguesianReport(True, "sampled", checked, seed)


# -- balanced triples over an arbitrary finite lattice ------------------------


def balanced_triples(lat: FiniteLattice) -> list[tuple[int, int, int]]:
    """All triples with equal pairwise meets, in lexicographic order."""
    m = lat.meet
    xy = m[:, :, None]
    xz = m[:, None, :]
    yz = m[None, :, :]
    cond = (xy == xz) & (xy == yz)
    return [tuple(map(int, t)) for t in np.argwhere(cond)]


def m3_of(lat: FiniteLattice) -> FiniteLattice:
    """The lattice of balanced triples, ordered componentwise.

    Meets come out componentwise; joins are least balanced upper bounds.
    Both facts are re-derived from the generic bound-table construction and
    cross-checked: meets against the componentwise formula always, joins
    against the median-closure formula whenever the base is distributive.
    """
    trips = balanced_triples(lat)
    arr = np.array(trips, dtype=np.int64)
    leq = (
        lat.leq[arr[:, None, 0], arr[None, :, 0]]
        & lat.leq[arr[:, None, 1], arr[None, :, 1]]
        & lat.leq[arr[:, None, 2], arr[None, :, 2]]
    )
    result = FiniteLattice(leq)

    index = {t: i for i, t in enumerate(trips)}
    meet, join = lat.meet, lat.join
    for i, s in enumerate(trips):
        for j, t in enumerate(trips):
            componentwise = (meet[s[0], t[0]], meet[s[1], t[1]], meet[s[2], t[2]])
            if result.meet[i, j] != index[tuple(map(int, componentwise))]:
                raise InternalCheckError(f"meet of {s} and {t} is not componentwise")

    if is_distributive(lat):
        for i, s in enumerate(trips):
            for j, t in enumerate(trips):
                ra, rb, rc = join[s[0], t[0]], join[s[1], t[1]], join[s[2], t[2]]
                med = join[join[meet[ra, rb], meet[ra, rc]], meet[rb, rc]]
                closed = (join[ra, med], join[rb, med], join[rc, med])
                if result.join[i, j] != index[tuple(map(int, closed))]:
                    raise InternalCheckError(
                        f"join of {s} and {t} disagrees with the closure formula"
                    )
    return result


# -- sublattices ---------------------------------------------------------------


def is_sublattice(lat: FiniteLattice, members) -> bool:
    """Bounded sublattice test: closed under meet and join, contains the bounds."""
    mem = sorted(set(members))
    if any(not 0 <= i < lat.n for i in mem):
        raise ValueError(f"mask contains invalid indices: {mem}")
    if lat.bottom not in mem or lat.top not in mem:
        return False
    idx = np.array(mem)
    inside = np.zeros(lat.n, dtype=bool)
    inside[idx] = True
    return bool(inside[lat.meet[np.ix_(idx, idx)]].all() and inside[lat.join[np.ix_(idx, idx)]].all())


def sublattice(lat: FiniteLattice, members) -> FiniteLattice:
    """The induced lattice on a closed member set (ascending index order)."""
    if not is_sublattice(lat, members):
        raise ValueError("member set is not a bounded sublattice")
    idx = sorted(set(members))
    return FiniteLattice(lat.leq[np.ix_(idx, idx)])


def maximal_boolean_extensions(lat: FiniteLattice, members) -> list[frozenset[int]]:
    """All Boolean sublattice masks strictly containing the given mask.

    An empty result certifies the mask is maximal among Boolean sublattices.
    Exponential in the number of outside elements; guarded to n <= 16.
    """
    if lat.n > 16:
        raise SearchBudgetError(f"extension search is exponential; n={lat.n} exceeds 16")
    base = frozenset(members)
    others = sorted(set(range(lat.n)) - base)
    found = []
    for mask in range(1, 1 << len(others)):
        extra = [others[k] for k in range(len(others)) if mask >> k & 1]
        cand = base | set(extra)
        if is_sublattice(lat, cand) and is_boolean(sublattice(lat, cand)):
            found.append(frozenset(cand))
    found.sort(key=lambda s: (len(s), sorted(s)))
    return found


# -- isomorphism ----------------------------------------------------------------


def _invariants(lat: FiniteLattice) -> list[tuple[int, int, int, int]]:
    cov = covers_matrix(lat)
    down = lat.leq.sum(axis=0)
    up = lat.leq.sum(axis=1)
    cov_down = cov.sum(axis=0)
    cov_up = cov.sum(axis=1)
    return [
        (int(down[i]), int(up[i]), int(cov_down[i]), int(cov_up[i]))
        for i in range(lat.n)
    ]


def is_isomorphic(lat1: FiniteLattice, lat2: FiniteLattice, node_budget: int = 1_000_000) -> bool:
    """Order-isomorphism by backtracking over invariant-compatible bijections.

    Complete for any size in principle; guaranteed cheap for n <= 12.  Above
    that, the search aborts with SearchBudgetError once the node budget is
    exhausted.
    """
    if lat1.n != lat2.n:
        return False
    n = lat1.n
    inv1 = _invariants(lat1)
    inv2 = _invariants(lat2)
    if sorted(inv1) != sorted(inv2):
        return False
    candidates = [[j for j in range(n) if inv2[j] == inv1[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
    leq1, leq2 = lat1.leq, lat2.leq
    mapping = [-1] * n
    used = [False] * n
    nodes = 0

    def backtrack(pos: int) -> bool:
        nonlocal nodes
        nodes += 1
        if n > 12 and nodes > node_budget:
            raise SearchBudgetError(f"isomorphism search exceeded {node_budget} nodes")
        if pos == n:
            return True
        i = order[pos]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for pos2 in range(pos):
                k = order[pos2]
                if leq1[i, k] != leq2[j, mapping[k]] or leq1[k, i] != leq2[mapping[k], j]:
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if backtrack(pos + 1):
                    return True
                used[j] = False
                mapping[i] = -1
        return False

    return backtrack(0)


# -- Hasse diagram / export ------------------------------------------------------


def covers_matrix(lat: FiniteLattice) -> np.ndarray:
    """Cover relation: entry (i, j) iff j covers i."""
    lt = lat.leq & ~np.eye(lat.n, dtype=bool)
    via = (lt.astype(np.float32) @ lt.astype(np.float32)) > 0
    return lt & ~via


def to_dot(lat: FiniteLattice, labels: list[str] | None = None) -> str:
    """Stable DOT rendering of the Hasse diagram (sorted nodes and edges)."""
    if labels is None:
        labels = [str(i) for i in range(lat.n)]
    cov = covers_matrix(lat)
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i in range(lat.n):
        lines.append(f'  {i} [label="{labels[i]}"];')
    for i, j in sorted(map(tuple, np.argwhere(cov))):
        lines.append(f"  {i} -> {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- distributive representation --------------------------------------------------


def join_irreducibles(lat: FiniteLattice) -> list[int]:
    """Elements with exactly one lower cover (excludes the bottom)."""
    cov = covers_matrix(lat)
    return [i for i in range(lat.n) if i != lat.bottom and cov[:, i].sum() == 1]


def birkhoff_set_embedding(lat: FiniteLattice) -> list[frozenset[int]]:
    """Map each element to its down-set of join-irreducibles.

    For a distributive lattice this is a bounds-preserving lattice embedding
    into the powerset of the join-irreducibles, realized as explicit sets.
    """
    if not is_distributive(lat):
        raise ValueError("set representation requires a distributive lattice")
    irr = join_irreducibles(lat)
    return [frozenset(k for k, j in enumerate(irr) if lat.leq[j, i]) for i in range(lat.n)]
