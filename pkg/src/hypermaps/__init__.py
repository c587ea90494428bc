"""Finite hypermaps and the phi-constructions of bipartite hypermaps."""

from .construct import closure_cover, covering_core, double_cover, phi_construct, sigma_dual
from .errors import (
    BoundaryPresent,
    CapacityExceeded,
    HypermapError,
    NoKernelRelators,
    NotBipartite,
    NotBipartiteRegular,
    NotInvolution,
    NotTransitive,
    OddFlagCount,
    Unsatisfiable,
)
from .families import FamilySpec, k_klein, p2, pp2k, random_hypermap, sphere222k, t_torus
from .hypermap import BipartiteType, Hypermap, InvariantReport, validate
from .morphism import (
    FlagMap,
    automorphism_count,
    automorphisms,
    b_quotient_min_generators,
    find_covering,
    in_image_of,
    is_bipartite_regular,
    is_isomorphic,
    is_regular,
    is_theta_regular,
    recover_preimage,
)
from .presentation import (
    Presentation,
    bipartite_hypermap_from_b_relators,
    coset_enumerate,
    regular_hypermap_from_delta_relators,
)
from .words import (
    BUILTIN_SPECS,
    PHI1,
    PHI2,
    PHI3,
    PHI4,
    PHI5,
    BWord,
    DeltaWord,
    EpimorphismSpec,
    ThetaClass,
    apply_phi,
    apply_sigma,
    embed,
    parse_sigma,
    reduce,
    theta_parity,
)

__version__ = "0.1.0"
