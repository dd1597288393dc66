"""Countable complemented modular lattices with two rival maximal Boolean
sublattices, the Banaschewski function separating them, and the exact
linear-algebra embedding of the whole construction into a subspace lattice.
"""

from .setalg import OMEGA, FcSet, Universe, UniverseMismatchError, sim
from .triples import (
    BalancedTriple,
    NotBalancedError,
    Triple,
    closure,
    in_s,
    in_t,
    is_balanced,
    m3_join,
    m3_meet,
    mu,
)
from .slat import (
    PairAC,
    SElem,
    banf,
    complement_obstruction,
    e_from_pair,
    e_to_pair,
    find_complement_in_b,
    g_embed,
    in_a,
    in_b,
    in_e,
    is_complement_pair,
    is_finite_join_of_atoms,
    is_finite_meet_of_coatoms,
    nondistrib_witness,
)
from .finlat import (
    FiniteLattice,
    NotALatticeError,
    NotAPosetError,
    SearchBudgetError,
    boolean_lattice,
    chain,
    curated_family,
    from_order,
    is_arguesian,
    is_boolean,
    is_complemented,
    is_distributive,
    is_isomorphic,
    is_modular,
    is_sublattice,
    m3,
    m3_of,
    maximal_boolean_extensions,
    n5,
    to_dot,
)
from .banfn import (
    BanMap,
    boolean_ranges_isomorphic,
    enumerate_banaschewski,
    is_banaschewski,
    is_range_of_some_banaschewski,
    range_of,
)
from .subspace import (
    PresentedSpace,
    PrimeField,
    Subspace,
    check_adjunction,
    check_embedding,
    check_gf_closure,
    check_meet_preservation,
    f_map,
    g_map,
    subspace_lattice,
)
from .verify import LEMMA_IDS, Params, VerificationReport, run_all, run_lemma

__version__ = "0.1.0"
