"""coopgap: exact bounds on solution concepts of partially known TU games.

A library for cooperative games whose characteristic function is known
only on the coalitions containing one fixed player.  It enumerates, in
exact rational arithmetic, the extreme points and rays of the sets of
positive / convex / superadditive / monotone completions, and computes
closed-form per-player ranges of the core, Shapley value and tau value
over those completions, each cross-validated against an independent
polyhedral engine and a sampling oracle.
"""

from .approximations import (
    CoreBounds,
    Interval,
    SolutionBounds,
    core_bounds,
    empirical_bounds,
    incomplete_shapley,
    shapley_bounds,
    shapley_interval,
    shapley_of_beta,
    tau_bounds,
    tau_interval,
)
from .extensions import (
    NotExtendableError,
    beta_extension,
    ceiling_extension,
    convex_recession_ray,
    extendable,
    favoring_extension,
    floor_extension,
    monotone_vertex,
    monotone_vertices,
    negative_unanimity_ray,
    positive_vertex,
    positive_vertices,
    sample_extension,
    superadditive_extension,
)
from .gamefile import GameFileError, LoadedGame, dump_game, load_game
from .games import (
    GameClass,
    MobiusVector,
    TUGame,
    coalition_of,
    coalition_size,
    gap,
    is_convex,
    is_convex_mobius,
    is_monotone,
    is_positive,
    is_superadditive,
    lattice_closure,
    lower_vector,
    mobius_forward,
    mobius_inverse,
    players_of,
    unanimity_game,
    upper_vector,
)
from .incomplete import (
    IncompleteGame,
    PlayerCenteredGame,
    convex_extendable,
    restrict_to_center,
)
from .polyhedra import (
    DimensionCapExceeded,
    HPolyhedron,
    NotPointedError,
    VRep,
    contains,
    extension_polytope,
    extreme_rays,
    is_extreme_point,
    is_extreme_ray,
    lp_feasible,
    lp_maximize,
    recession_cone,
    recession_cone_coordinates,
    vertex_enumeration,
)
from .solutions import (
    core_member,
    core_nonempty,
    core_polytope,
    imputation_polytope,
    shapley,
    shapley_weight,
    tau_value,
)

__version__ = "0.1.0"
