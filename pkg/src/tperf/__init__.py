"""tperf: exact certificates for t-perfection.

A graph is t-perfect when its stable set polytope is cut out by
non-negativity, edge, and induced odd cycle inequalities alone. This
package provides the exact rational machinery to decide and certify that
at desk scale: polytope vertex enumeration and membership oracles,
t-minor operations, forbidden-subgraph recognizers for P5-free and
near-bipartite inputs, harmonious cutset verification, and colouring
procedures, plus a batch CLI with JSON reports.
"""

__version__ = "0.1.0"

from .errors import (
    CycleCapExceeded,
    DimensionGuard,
    InvalidParameter,
    NeighbourhoodNotBipartite,
    NeighbourhoodNotStable,
    NotNearBipartite,
    NotP5Free,
    ResourceExhausted,
    TheoremViolation,
    TperfError,
    UnboundedPolytope,
)
from .graphs import (
    AntiwebSpec,
    Graph,
    antiweb,
    enumerate_induced_odd_cycles,
    gen_antiweb,
    gen_cycle,
    gen_cycle_power,
    gen_complete,
    gen_path,
    gen_wheel,
    is_almost_bipartite,
    is_bipartite,
    is_near_bipartite,
    odd_girth,
)
from .isomorphism import Embedding, are_isomorphic, canonical_form, contains_induced, is_p5_free
from .named import FIGURE_RECIPES, NAMED_GRAPHS, NAMED_IDS, gen_named
from .formats import from_dimacs, from_graph6, to_dimacs, to_graph6
from .tminor import (
    TMinorSearch,
    TMinorStep,
    has_t_minor,
    one_step_t_minors,
    replay_steps,
    t_contract,
    t_contract_step,
)
from .polytope import (
    HPolytope,
    Row,
    SspResult,
    TPerfVerdict,
    build_tstab,
    enumerate_vertices,
    fractional_chromatic,
    fractional_chromatic_dual,
    in_ssp,
    in_tstab,
    is_t_perfect_oracle,
    max_weight_stable_set,
    stable_sets,
)
from .recognition import (
    ForbiddenWitness,
    HarmoniousTuple,
    find_clique_separator,
    find_even_moebius,
    find_harmonious_cutset,
    find_odd_wheel,
    induced_paths_between,
    is_t_perfect_near_bipartite,
    is_t_perfect_p5_free,
    trotter_contains,
    verify_harmonious_tuple,
    verify_odd_pair,
)
from .colouring import (
    check_chi_f_formula,
    chromatic_number,
    colour_near_bipartite_4,
    is_proper_colouring,
    k_colouring,
    mm_forbidden,
    three_colour_p5_free_tperfect,
)
