"""Closed-form bounds on solution concepts across all extensions.

Each bound comes with witness extensions attaining its endpoints, so the
test suite can certify every interval by exact evaluation, and a
deterministic sampling fallback provides the independent containment
oracle for every closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .extensions import (
    NotExtendableError,
    beta_extension,
    ceiling_extension,
    extendable,
    favoring_extension,
    floor_extension,
    positive_vertex,
    sample_extension,
)
from .games import GameClass, Rational, TUGame, coalition_size, players_of
from .incomplete import PlayerCenteredGame
from .polyhedra import HPolyhedron
from .solutions import core_polytope, shapley, shapley_weight, tau_value

__all__ = [
    "Interval",
    "CoreBounds",
    "SolutionBounds",
    "incomplete_shapley",
    "core_bounds",
    "shapley_interval",
    "shapley_bounds",
    "shapley_of_beta",
    "tau_interval",
    "tau_bounds",
    "empirical_bounds",
]


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    def contains(self, x: Rational) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def includes(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


@dataclass(frozen=True)
class CoreBounds:
    """Inner (guaranteed) and outer (possible) core approximations.

    ``inner`` is ``None`` for the monotone class, where no exact strong
    core is available in closed form.
    """

    cls: GameClass
    inner: HPolyhedron | None
    outer: HPolyhedron
    inner_game: TUGame | None
    outer_game: TUGame


@dataclass(frozen=True)
class SolutionBounds:
    """Per-player intervals with endpoint witnesses.

    ``lower_witnesses[k]`` / ``upper_witnesses[k]`` are extensions whose
    concept value at player ``k`` equals the interval endpoint exactly.
    """

    concept: str
    cls: GameClass
    intervals: tuple[Interval, ...]
    lower_witnesses: tuple[TUGame, ...]
    upper_witnesses: tuple[TUGame, ...]


def incomplete_shapley(game: PlayerCenteredGame) -> tuple[Fraction, ...]:
    """Shapley-style sum over the marginal contributions that are known.

    Only pairs ``(S, S | k)`` with both worths known contribute: for a
    non-center player these are the nonempty known coalitions avoiding
    the player; for the center only the empty coalition qualifies.
    """
    n = game.n
    out = []
    for k in range(n):
        bit = 1 << k
        acc = Fraction(0)
        if k == game.center:
            acc += shapley_weight(n, 0) * game.value(bit)
        else:
            for s in game.known_nonempty():
                if not s & bit:
                    acc += shapley_weight(n, coalition_size(s)) * (
                        game.value(s | bit) - game.value(s)
                    )
        out.append(acc)
    return tuple(out)


_CORE_CLASSES = (
    GameClass.MONOTONE,
    GameClass.POSITIVE,
    GameClass.MONOTONE_SUPERADDITIVE,
    GameClass.MONOTONE_CONVEX,
)


def core_bounds(game: PlayerCenteredGame, cls: GameClass) -> CoreBounds:
    """Polyhedral sandwich of every extension's core.

    The outer set (union of all cores) is the core of the floor extension.
    The inner set (intersection) is the core of the ceiling extension; it
    is exact for the monotone-convex class, and for the positive and
    monotone-superadditive classes whenever the center's singleton worth
    is zero, remaining a valid inner bound otherwise.  For the plain
    monotone class only the outer bound is available.
    """
    if cls not in _CORE_CLASSES:
        raise ValueError(f"no core bounds for class {cls.value}")
    if not extendable(game, cls):
        raise NotExtendableError(f"game admits no {cls.value} extension")
    floor = floor_extension(game)
    outer = core_polytope(floor)
    if cls is GameClass.MONOTONE:
        return CoreBounds(cls, None, outer, None, floor)
    ceiling = ceiling_extension(game)
    return CoreBounds(cls, core_polytope(ceiling), outer, ceiling, floor)


def _positive_extremes(game: PlayerCenteredGame) -> tuple[TUGame, TUGame]:
    """The all-mass-down and all-mass-up extreme positive extensions."""
    unknown = game.unknown_coalitions()
    down = positive_vertex(game, {s: 0 for s in unknown})
    up = positive_vertex(game, {s: 1 for s in unknown})
    return down, up


def shapley_interval(game: PlayerCenteredGame, cls: GameClass, player: int) -> Interval:
    return shapley_bounds(game, cls).intervals[player]


def shapley_bounds(game: PlayerCenteredGame, cls: GameClass) -> SolutionBounds:
    """Exact per-player ranges of the Shapley value over all extensions.

    Positive class: the range of every player is spanned by the two
    extreme extensions that move every shared Moebius mass fully down
    (away from the center) or fully up.  Monotone class: the center's
    range is spanned by the ceiling and floor extensions; for another
    player the minimum is the known-marginal sum (attained by the floor
    extension) and the maximum adds the largest possible unknown
    marginals, attained by the extension favoring that player:

        upper(k) = known(k) + sum over known nonempty S avoiding k of
                   weight(|S| - 1) * v(S | k)

    For the two intermediate monotone classes no exact endpoints are
    available; use :func:`empirical_bounds` there.
    """
    n = game.n
    i = game.center
    if not extendable(game, cls):
        raise NotExtendableError(f"game admits no {cls.value} extension")
    if cls is GameClass.POSITIVE:
        down, up = _positive_extremes(game)
        phi_down, phi_up = shapley(down), shapley(up)
        intervals = []
        lower_w = []
        upper_w = []
        for k in range(n):
            if k == i:
                intervals.append(Interval(phi_down[k], phi_up[k]))
                lower_w.append(down)
                upper_w.append(up)
            else:
                intervals.append(Interval(phi_up[k], phi_down[k]))
                lower_w.append(up)
                upper_w.append(down)
        return SolutionBounds("shapley", cls, tuple(intervals), tuple(lower_w), tuple(upper_w))
    if cls is GameClass.MONOTONE:
        ceiling, floor = ceiling_extension(game), floor_extension(game)
        phi_known = incomplete_shapley(game)
        phi_ceiling, phi_floor = shapley(ceiling), shapley(floor)
        intervals = []
        lower_w = []
        upper_w = []
        for k in range(n):
            if k == i:
                intervals.append(Interval(phi_ceiling[k], phi_floor[k]))
                lower_w.append(ceiling)
                upper_w.append(floor)
            else:
                bit = 1 << k
                bonus = Fraction(0)
                for s in game.known_nonempty():
                    if not s & bit:
                        bonus += shapley_weight(n, coalition_size(s) - 1) * game.value(s | bit)
                intervals.append(Interval(phi_known[k], phi_known[k] + bonus))
                lower_w.append(floor)
                upper_w.append(favoring_extension(game, k))
        return SolutionBounds("shapley", cls, tuple(intervals), tuple(lower_w), tuple(upper_w))
    raise ValueError(f"no exact Shapley endpoints for class {cls.value}")


def shapley_of_beta(game: PlayerCenteredGame, beta) -> tuple[Fraction, ...]:
    """Shapley value of a weight-parameterized positive extension.

    Closed form: a non-center player ``k`` collects, for every unknown
    coalition ``S`` containing it with shared mass ``mu``, the amount
    ``mu * (beta_S / |S| + (1 - beta_S) / (|S| + 1))``; the center gets
    its singleton worth plus all the ``(1 - beta_S)`` shares.  Agrees
    exactly with evaluating the Shapley value of
    :func:`coopgap.extensions.beta_extension`.
    """
    pm = game.partial_mobius()
    i = game.center
    n = game.n
    unknown = game.unknown_coalitions()
    if set(beta) != set(unknown):
        raise ValueError("beta must be indexed by exactly the unknown coalitions")
    out = [Fraction(0)] * n
    out[i] = game.value(1 << i)
    for s in unknown:
        b = Fraction(beta[s])
        if not 0 <= b <= 1:
            raise ValueError("beta values must lie in [0, 1]")
        mu = pm[s | 1 << i]
        if not mu:
            continue
        size = coalition_size(s)
        out[i] += mu * (1 - b) / (size + 1)
        share = mu * (b / size + (1 - b) / (size + 1))
        for k in players_of(s):
            out[k] += share
    return tuple(out)


def tau_interval(game: PlayerCenteredGame, player: int) -> Interval:
    return tau_bounds(game).intervals[player]


def tau_bounds(game: PlayerCenteredGame) -> SolutionBounds:
    """Per-player tau ranges over positive extensions of a game with a
    worthless center singleton.

    Requires zero-normalized-positive extendability (the center's
    singleton worth must vanish and the known family must be positive).
    Endpoints sit at the ceiling and floor extensions: the ceiling
    maximizes every non-center player and minimizes the center, the
    floor the other way round.  When the game is additive (no shared
    mass above the singletons) every extension agrees and the intervals
    are points.
    """
    if not extendable(game, GameClass.ZERO_NORMALIZED_POSITIVE):
        raise NotExtendableError("tau bounds need a positive game whose center singleton is worth 0")
    ceiling, floor = ceiling_extension(game), floor_extension(game)
    tau_ceiling, tau_floor = tau_value(ceiling), tau_value(floor)
    i = game.center
    intervals = []
    lower_w = []
    upper_w = []
    for k in range(game.n):
        if k == i:
            intervals.append(Interval(tau_ceiling[k], tau_floor[k]))
            lower_w.append(ceiling)
            upper_w.append(floor)
        else:
            intervals.append(Interval(tau_floor[k], tau_ceiling[k]))
            lower_w.append(floor)
            upper_w.append(ceiling)
    return SolutionBounds("tau", GameClass.ZERO_NORMALIZED_POSITIVE, tuple(intervals), tuple(lower_w), tuple(upper_w))


def empirical_bounds(
    game: PlayerCenteredGame,
    cls: GameClass,
    concept: str,
    samples: int,
    seed: int,
) -> SolutionBounds:
    """Monte-Carlo envelope of a concept over sampled extensions.

    Deterministic for a fixed ``(seed, samples)`` pair: sample ``j`` uses
    the derived seed ``(seed, j)``, so results are independent of
    evaluation order.  The envelope of any closed-form interval from this
    module must contain these bounds; the tau concept is restricted to
    the positive classes, where every sample is convex.
    """
    if concept not in ("shapley", "tau"):
        raise ValueError("concept must be 'shapley' or 'tau'")
    if samples < 1:
        raise ValueError("need at least one sample")
    if concept == "tau" and cls not in (
        GameClass.POSITIVE,
        GameClass.ZERO_NORMALIZED_POSITIVE,
    ):
        raise ValueError("tau sampling requires a positive extension class")
    if not extendable(game, cls):
        raise NotExtendableError(f"game admits no {cls.value} extension")
    n = game.n
    lo = [None] * n
    hi = [None] * n
    lo_w = [None] * n
    hi_w = [None] * n
    for j in range(samples):
        ext = sample_extension(game, cls, seed * 1_000_003 + j)
        vec = shapley(ext) if concept == "shapley" else tau_value(ext)
        for k in range(n):
            if lo[k] is None or vec[k] < lo[k]:
                lo[k], lo_w[k] = vec[k], ext
            if hi[k] is None or vec[k] > hi[k]:
                hi[k], hi_w[k] = vec[k], ext
    intervals = tuple(Interval(a, b) for a, b in zip(lo, hi))
    return SolutionBounds(concept, cls, intervals, tuple(lo_w), tuple(hi_w))
