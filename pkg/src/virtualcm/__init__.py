"""Exact combinatorial commutative algebra for virtually Cohen-Macaulay simplicial complexes."""
from .complex import SimplicialComplex, SimplicialMap, VertexLabeling, closure
from .homology import (
    HomologyVector,
    IntegerGroup,
    IntegerHomologyVector,
    boundary_matrix,
    euler_characteristic,
    reduced_homology,
    relative_homology_Z,
)
from .io import (
    certificate_from_doc,
    certificate_to_doc,
    complex_from_doc,
    complex_to_doc,
    ideal_from_doc,
    ideal_to_doc,
    read_document,
    write_document,
)
from .linalg import QQ, Field, rank_mod_p, rank_q, smith_invariants
from .shelling import ShellingResult, find_shelling, is_shelling
from .sralgebra import (
    BettiTable,
    CMResult,
    MonomialIdeal,
    betti_hochster,
    codim,
    colon,
    complex_from_sr,
    intersect_ideals,
    is_cohen_macaulay,
    minimal_nonfaces,
    projective_dimension,
    saturate,
    sr_ideal,
)
from .suite import run_fixture_suite
from .toric import ToricContext
from .virtual import (
    CoverCertificate,
    Verdict,
    VirtualShellingCertificate,
    annihilation_witness,
    check_proposition,
    construct_cover,
    corollary_order,
    dual_graph,
    link_decomposition,
    verify_cover,
    verify_virtual_shelling,
    xi_sets,
)

__version__ = "0.1.0"
