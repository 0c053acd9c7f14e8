"""Prime coprime graphs of cyclic, dihedral and dicyclic groups.

The graph of a finite group joins two distinct elements whenever the gcd of
their orders is 1 or a prime.  This package builds these graphs, evaluates
the known closed forms (clique number, vertex degrees, Hamiltonicity,
H-join decompositions), and checks every closed form against brute-force
oracles.
"""

from .closedforms import (
    DecompositionEntry,
    ExponentProfile,
    catalog_partition,
    clique_cyclic,
    clique_dicyclic,
    clique_dihedral,
    decomposition_catalog,
    degree_cyclic,
    degree_dicyclic,
    degree_dihedral,
    is_hamiltonian_cyclic,
    is_hamiltonian_dicyclic,
    is_hamiltonian_dihedral,
    theta_degree,
)
from .groups import (
    Family,
    GroupElement,
    GroupSpec,
    cyclic,
    dicyclic,
    dihedral,
    element_order,
    elements,
    is_epo,
    order_class_counts,
    parse_element,
    s_set,
    t_set,
)
from .numtheory import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    gcd,
    is_prime,
    phi_sum_expansion,
)
from .oracles import (
    BudgetExceededError,
    CliqueResult,
    HamiltonicityEvidence,
    Verdict,
    cut_witness_check,
    dirac_check,
    dominating_vertices,
    hamiltonian_search,
    is_epo_equiv_complete,
    kl_partition_check,
    max_clique,
)
from .pcgraph import (
    CapacityError,
    HJoinPart,
    HJoinSpec,
    PartKind,
    SimpleGraph,
    build_theta,
    complete,
    component_count,
    delete_vertices,
    empty_graph,
    from_edges,
    graph_to_dot,
    graph_to_json,
    h_join,
    induced_subgraph,
    is_complete,
    join,
    verify_hjoin_structure,
)

__version__ = "0.1.0"
