"""Constructive extensions of player-centered games.

For a game known on all coalitions containing a fixed ``center`` player,
this module builds: the floor/ceiling extensions, the extreme points of
the positive and monotone extension sets, the weight parameterization of
all positive extensions, a superadditive completion that always exists,
two closed-form families of recession-cone rays, and a deterministic
sampler of extensions used as a cross-check oracle.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .games import (
    GameClass,
    MobiusVector,
    Rational,
    TUGame,
    coalition_size,
    is_convex,
    is_monotone,
    is_positive,
    is_superadditive,
    mobius_forward,
    mobius_inverse,
    subsets_of,
)
from .incomplete import PlayerCenteredGame

__all__ = [
    "NotExtendableError",
    "extendable",
    "ceiling_extension",
    "floor_extension",
    "positive_vertex",
    "positive_vertices",
    "beta_extension",
    "superadditive_extension",
    "monotone_vertex",
    "monotone_vertices",
    "favoring_extension",
    "convex_recession_ray",
    "negative_unanimity_ray",
    "sample_extension",
]


class NotExtendableError(ValueError):
    """The partial game admits no extension in the requested class."""


def extendable(game: PlayerCenteredGame, cls: GameClass) -> bool:
    """Whether some complete game of class ``cls`` agrees with ``game``.

    Superadditive completions always exist.  The other verdicts reduce to
    the matching predicate on the known family; the zero-normalized
    positive class additionally needs the center's singleton worth to be
    zero.  Each equivalence is cross-checked against LP feasibility of the
    corresponding H-system in the test suite.
    """
    if cls is GameClass.SUPERADDITIVE:
        return True
    if cls is GameClass.MONOTONE:
        return game.is_monotone()
    if cls is GameClass.CONVEX:
        return game.is_convex()
    if cls is GameClass.POSITIVE:
        return game.is_positive()
    if cls is GameClass.MONOTONE_SUPERADDITIVE:
        return game.is_monotone()
    if cls is GameClass.MONOTONE_CONVEX:
        return game.is_monotone() and game.is_convex()
    if cls is GameClass.ZERO_NORMALIZED_POSITIVE:
        return game.value(1 << game.center) == 0 and game.is_positive()
    raise ValueError(f"unknown game class {cls}")


def _require(game: PlayerCenteredGame, cls: GameClass) -> None:
    if not extendable(game, cls):
        raise NotExtendableError(f"game admits no {cls.value} extension")


def ceiling_extension(game: PlayerCenteredGame) -> TUGame:
    """Fill each unknown coalition with the worth of it plus the center.

    Pointwise maximal among monotone extensions: the center contributes
    nothing on top of any coalition.
    """
    i = game.center
    return TUGame.from_function(
        game.n, lambda m: game.value(m) if m >> i & 1 else game.value(m | 1 << i)
    )


def floor_extension(game: PlayerCenteredGame) -> TUGame:
    """Fill each unknown coalition with worth zero.

    Pointwise minimal among monotone extensions: coalitions without the
    center achieve nothing on their own.
    """
    i = game.center
    return TUGame.from_function(game.n, lambda m: game.value(m) if m >> i & 1 else Fraction(0))


def _pair_masses(game: PlayerCenteredGame) -> dict[int, Fraction]:
    """Moebius mass of ``S | center`` for each unknown coalition ``S``."""
    pm = game.partial_mobius()
    i = game.center
    return {s: pm[s | 1 << i] for s in game.unknown_coalitions()}


def positive_vertex(game: PlayerCenteredGame, bits: Mapping[int, int]) -> TUGame:
    """Extreme positive extension selected by one bit per unknown coalition.

    Each unknown coalition ``S`` shares a single Moebius mass with
    ``S | center``; ``bits[S] == 0`` puts the whole mass on ``S`` (the
    center adds nothing there), ``bits[S] == 1`` keeps it on
    ``S | center``.  All-ones reproduces the floor extension; all-zeros
    reproduces the ceiling extension exactly when the center's singleton
    worth is zero.
    """
    _require(game, GameClass.POSITIVE)
    i = game.center
    unknown = game.unknown_coalitions()
    if set(bits) != set(unknown):
        raise ValueError("bits must be indexed by exactly the unknown coalitions")
    masses = _pair_masses(game)
    coeffs = {1 << i: game.value(1 << i)}
    for s in unknown:
        if bits[s] not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        if bits[s] == 0:
            coeffs[s] = masses[s]
        else:
            coeffs[s | 1 << i] = masses[s]
    return mobius_inverse(MobiusVector.from_mapping(game.n, coeffs))


def positive_vertices(game: PlayerCenteredGame) -> set[TUGame]:
    """All extreme points of the positive-extension set, deduplicated.

    At most ``2^u`` games for ``u`` unknown coalitions; collisions happen
    exactly where a shared Moebius mass vanishes, so only coalitions with
    nonzero mass are branched on.
    """
    _require(game, GameClass.POSITIVE)
    unknown = game.unknown_coalitions()
    masses = _pair_masses(game)
    support = [s for s in unknown if masses[s] != 0]
    out: set[TUGame] = set()
    for pattern in range(1 << len(support)):
        bits = {s: 1 for s in unknown}
        for j, s in enumerate(support):
            bits[s] = pattern >> j & 1
        out.add(positive_vertex(game, bits))
    return out


def beta_extension(game: PlayerCenteredGame, beta: Mapping[int, Rational]) -> TUGame:
    """Positive extension with mass share ``beta[S]`` moved down to ``S``.

    ``beta[S]`` in [0, 1] is the fraction of the Moebius mass of
    ``S | center`` assigned to ``S``; the remainder stays on
    ``S | center``.  ``beta == 0`` gives the floor extension, ``beta == 1``
    the all-zeros vertex.  Every positive extension arises this way.
    """
    _require(game, GameClass.POSITIVE)
    i = game.center
    unknown = game.unknown_coalitions()
    if set(beta) != set(unknown):
        raise ValueError("beta must be indexed by exactly the unknown coalitions")
    masses = _pair_masses(game)
    coeffs = {1 << i: game.value(1 << i)}
    for s in unknown:
        b = Fraction(beta[s])
        if not 0 <= b <= 1:
            raise ValueError("beta values must lie in [0, 1]")
        coeffs[s] = b * masses[s]
        coeffs[s | 1 << i] = (1 - b) * masses[s]
    return mobius_inverse(MobiusVector.from_mapping(game.n, coeffs))


def superadditive_extension(game: PlayerCenteredGame) -> TUGame:
    """A superadditive completion; exists for every player-centered game.

    Unknown coalitions are filled additively with the per-player worth
    ``min (v(S|T) - v(T)) / n`` over disjoint pairs of an unknown ``S``
    and a known nonempty ``T``; the additive fill keeps the unknown-only
    inequalities tight-free while the minimum honours the mixed ones.
    """
    unknown = game.unknown_coalitions()
    if not unknown:
        return TUGame.from_mapping(game.n, dict(game.base.values))
    best: Fraction | None = None
    for s in unknown:
        for t in game.known_nonempty():
            if s & t == 0:
                cand = (game.value(s | t) - game.value(t)) / game.n
                if best is None or cand < best:
                    best = cand
    assert best is not None  # the center's singleton is disjoint from every unknown coalition
    per_player = best
    return TUGame.from_function(
        game.n,
        lambda m: game.value(m) if m >> game.center & 1 else coalition_size(m) * per_player,
    )


def monotone_vertex(
    game: PlayerCenteredGame, order: Sequence[int], bits: Mapping[int, int]
) -> TUGame:
    """Extreme monotone extension built greedily along ``order``.

    Unknown coalitions are filled one at a time; bit 1 takes the minimum
    over already-valued strict supersets, bit 0 the maximum over
    already-valued strict subsets (the empty coalition supplies the zero
    floor).  Every filled worth equals some known worth.
    """
    _require(game, GameClass.MONOTONE)
    unknown = game.unknown_coalitions()
    if sorted(order) != sorted(unknown) or set(bits) != set(unknown):
        raise ValueError("order and bits must cover exactly the unknown coalitions")
    filled: dict[int, Fraction] = {m: game.value(m) for m in game.known_nonempty()}
    filled[0] = Fraction(0)
    for s in order:
        if bits[s] == 1:
            filled[s] = min(v for m, v in filled.items() if m & s == s and m != s)
        elif bits[s] == 0:
            filled[s] = max(v for m, v in filled.items() if m & s == m and m != s)
        else:
            raise ValueError("bits must be 0 or 1")
    return TUGame.from_function(game.n, lambda m: filled[m])


def monotone_vertices(game: PlayerCenteredGame) -> set[TUGame]:
    """All extreme monotone extensions, over every order and bit choice.

    Explored as a DFS over partial fills with memoization; distinct
    (order, bits) pairs frequently produce the same game, so states are
    deduplicated structurally rather than enumerated per pair.
    """
    _require(game, GameClass.MONOTONE)
    unknown = game.unknown_coalitions()
    base = {m: game.value(m) for m in game.known_nonempty()}
    base[0] = Fraction(0)
    out: set[TUGame] = set()
    seen: set[frozenset[tuple[int, Fraction]]] = set()
    stack: list[dict[int, Fraction]] = [dict()]
    while stack:
        partial = stack.pop()
        key = frozenset(partial.items())
        if key in seen:
            continue
        seen.add(key)
        todo = [s for s in unknown if s not in partial]
        if not todo:
            values = dict(base)
            values.update(partial)
            out.add(TUGame.from_function(game.n, lambda m, v=values: v[m]))
            continue
        current = dict(base)
        current.update(partial)
        for s in todo:
            lo = max(v for m, v in current.items() if m & s == m and m != s)
            hi = min(v for m, v in current.items() if m & s == s and m != s)
            for val in {lo, hi}:
                nxt = dict(partial)
                nxt[s] = val
                stack.append(nxt)
    return out


def favoring_extension(game: PlayerCenteredGame, player: int) -> TUGame:
    """Monotone extension maximizing one non-center player's marginals.

    Unknown coalitions containing ``player`` get their ceiling worth,
    all others zero.  This is the monotone vertex produced by any order
    with bit 1 on coalitions containing ``player`` and bit 0 elsewhere,
    and it attains the upper end of that player's weak Shapley range.
    """
    if player == game.center:
        raise ValueError("the favored player must differ from the center")
    _require(game, GameClass.MONOTONE)
    i = game.center
    bit = 1 << player

    def worth(m: int) -> Fraction:
        if m >> i & 1:
            return game.value(m)
        return game.value(m | 1 << i) if m & bit else Fraction(0)

    return TUGame.from_function(game.n, worth)


def convex_recession_ray(n: int, center: int, base: int) -> TUGame:
    """Recession direction of the convex-extension set seeded by ``base``.

    Worth -1 on every unknown coalition meeting ``base``, 0 elsewhere (in
    particular 0 on the whole known family).  Its Moebius coefficients
    alternate in sign on the subsets of ``base`` and their center
    completions; the game is convex and is an extreme ray of the
    convex recession cone.
    """
    if base == 0 or base >> center & 1 or base >= 1 << n:
        raise ValueError("base must be a nonempty coalition avoiding the center")
    return TUGame.from_function(
        n, lambda m: Fraction(-1) if not m >> center & 1 and m & base else Fraction(0)
    )


def negative_unanimity_ray(n: int, center: int, player: int) -> TUGame:
    """Negated unanimity direction of ``player``, zeroed on the known family.

    Worth -1 on every unknown coalition containing ``player``, 0 elsewhere;
    superadditive and vanishing on all coalitions containing the center,
    hence a recession direction of the superadditive extension set.
    """
    if player == center:
        raise ValueError("player must differ from the center")
    if not 0 <= player < n:
        raise ValueError("player out of range")
    return TUGame.from_function(
        n,
        lambda m: Fraction(-1) if m >> player & 1 and not m >> center & 1 else Fraction(0),
    )


def _derived_rng(seed: int, *extra: object) -> random.Random:
    digest = hashlib.sha256(repr((seed, extra)).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _random_fraction(rng: random.Random, span: int = 8) -> Fraction:
    return Fraction(rng.randint(0, span), span)


def _class_predicate(cls: GameClass, game: TUGame) -> bool:
    if cls is GameClass.MONOTONE:
        return is_monotone(game)
    if cls is GameClass.SUPERADDITIVE:
        return is_superadditive(game)
    if cls is GameClass.CONVEX:
        return is_convex(game)
    if cls is GameClass.POSITIVE:
        return is_positive(mobius_forward(game))
    if cls is GameClass.MONOTONE_SUPERADDITIVE:
        return is_monotone(game) and is_superadditive(game)
    if cls is GameClass.MONOTONE_CONVEX:
        return is_monotone(game) and is_convex(game)
    if cls is GameClass.ZERO_NORMALIZED_POSITIVE:
        return is_positive(mobius_forward(game)) and all(
            game.value(1 << k) == 0 for k in range(game.n)
        )
    raise ValueError(f"unknown game class {cls}")


def sample_extension(game: PlayerCenteredGame, cls: GameClass, seed: int) -> TUGame:
    """Deterministic random extension of class ``cls``.

    Bounded classes sample convex combinations of extreme points (or of
    LP vertices found with random objectives); the unbounded convex and
    superadditive classes start from a known member and add nonnegative
    multiples of the closed-form recession rays.  The result is verified
    against the class predicate before being returned.
    """
    _require(game, cls)
    rng = _derived_rng(seed, cls.value, tuple(sorted(game.base.values.items())), game.center)
    unknown = game.unknown_coalitions()
    result: TUGame

    if cls is GameClass.POSITIVE:
        beta = {s: _random_fraction(rng) for s in unknown}
        result = beta_extension(game, beta)
    elif cls is GameClass.ZERO_NORMALIZED_POSITIVE:
        beta = {s: Fraction(0) if coalition_size(s) == 1 else _random_fraction(rng) for s in unknown}
        result = beta_extension(game, beta)
    elif cls is GameClass.MONOTONE:
        pieces = []
        for _ in range(rng.randint(1, 3)):
            order = list(unknown)
            rng.shuffle(order)
            bits = {s: rng.randint(0, 1) for s in unknown}
            pieces.append(monotone_vertex(game, order, bits))
        result = _convex_combination(rng, pieces)
    elif cls in (GameClass.MONOTONE_SUPERADDITIVE, GameClass.MONOTONE_CONVEX):
        result = _convex_combination(rng, [_random_lp_vertex(game, cls, rng) for _ in range(2)])
    elif cls in (GameClass.SUPERADDITIVE, GameClass.CONVEX):
        if cls is GameClass.SUPERADDITIVE:
            base_game = superadditive_extension(game)
            rays = [negative_unanimity_ray(game.n, game.center, k) for k in range(game.n) if k != game.center]
        else:
            from .polyhedra import extension_polytope, lp_feasible

            feasible, point = lp_feasible(extension_polytope(game, cls))
            assert feasible and point is not None
            base_game = TUGame(game.n, (Fraction(0),) + point)
            rays = []
        rays += [convex_recession_ray(game.n, game.center, s) for s in unknown]
        result = base_game
        for ray in rays:
            coeff = Fraction(rng.randint(0, 6), 2)
            if coeff:
                result = result.scale_add(1, ray, coeff)
    else:  # pragma: no cover - exhaustive over the enum
        raise ValueError(f"unknown game class {cls}")

    assert _class_predicate(cls, result), "sampled game escaped its class"
    assert all(result.value(m) == game.value(m) for m in game.known_nonempty())
    return result


def _convex_combination(rng: random.Random, games: list[TUGame]) -> TUGame:
    weights = [Fraction(rng.randint(1, 6)) for _ in games]
    total = sum(weights)
    acc = TUGame.zero(games[0].n)
    for w, g in zip(weights, games):
        acc = acc.scale_add(1, g, w / total)
    return acc


def _random_lp_vertex(game: PlayerCenteredGame, cls: GameClass, rng: random.Random) -> TUGame:
    from .polyhedra import extension_polytope, lp_maximize

    poly = extension_polytope(game, cls)
    objective = [Fraction(rng.randint(-5, 5)) for _ in range(poly.dim)]
    status, point, _ = lp_maximize(poly, objective)
    if status != "optimal" or point is None:
        status, point, _ = lp_maximize(poly, [Fraction(0)] * poly.dim)
        assert status == "optimal" and point is not None
    return TUGame(game.n, (Fraction(0),) + tuple(point))
