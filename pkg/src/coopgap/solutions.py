"""Classical solution concepts on complete games.

Core and imputation sets as exact H-polyhedra, the Shapley value (marginal
and Moebius forms, cross-asserted), and the tau value for convex games via
the gap-function formula, again cross-asserted against its Moebius form.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .games import (
    Rational,
    TUGame,
    coalition_size,
    gap,
    is_convex,
    mobius_forward,
    players_of,
    upper_vector,
)
from .polyhedra import HPolyhedron, lp_feasible

__all__ = [
    "core_polytope",
    "imputation_polytope",
    "core_nonempty",
    "core_member",
    "is_preimputation",
    "shapley",
    "tau_value",
    "shapley_weight",
]


def shapley_weight(n: int, s: int) -> Fraction:
    """Probability that a fixed player follows exactly ``s`` others."""
    return Fraction(factorial(s) * factorial(n - s - 1), factorial(n))


def core_polytope(game: TUGame) -> HPolyhedron:
    """Efficiency plus coalitional rationality, ``x(S) >= v(S)``."""
    n = game.n
    full = game.grand_coalition()
    ineqs = []
    for s in range(1, full):
        row = [Fraction(0)] * n
        for j in players_of(s):
            row[j] = Fraction(-1)
        ineqs.append((tuple(row), -game.values[s]))
    eq = ((tuple([Fraction(1)] * n), game.values[full]),)
    return HPolyhedron(dim=n, inequalities=tuple(ineqs), equalities=eq)


def imputation_polytope(game: TUGame) -> HPolyhedron:
    """Efficient payoffs that are individually rational."""
    n = game.n
    ineqs = []
    for j in range(n):
        row = [Fraction(0)] * n
        row[j] = Fraction(-1)
        ineqs.append((tuple(row), -game.values[1 << j]))
    eq = ((tuple([Fraction(1)] * n), game.values[game.grand_coalition()]),)
    return HPolyhedron(dim=n, inequalities=tuple(ineqs), equalities=eq)


def core_nonempty(game: TUGame) -> bool:
    feasible, _ = lp_feasible(core_polytope(game))
    return feasible


def core_member(game: TUGame, x: Sequence[Rational]) -> bool:
    xs = [Fraction(v) for v in x]
    if len(xs) != game.n:
        raise ValueError("payoff vector has the wrong length")
    return core_polytope(game).satisfies(xs)


def is_preimputation(game: TUGame, x: Sequence[Rational]) -> bool:
    return sum(Fraction(v) for v in x) == game.values[game.grand_coalition()]


def shapley(game: TUGame) -> tuple[Fraction, ...]:
    """Shapley payoff vector.

    Computed from weighted marginal contributions and independently from
    the Moebius coefficients (each coalition splits its coefficient
    equally); the two results are asserted identical.
    """
    n = game.n
    v = game.values
    full = game.grand_coalition()
    weights = [shapley_weight(n, s) for s in range(n)]
    marginal = []
    for i in range(n):
        bit = 1 << i
        acc = Fraction(0)
        rest = full ^ bit
        s = rest
        while True:
            acc += weights[coalition_size(s)] * (v[s | bit] - v[s])
            if s == 0:
                break
            s = (s - 1) & rest
        marginal.append(acc)
    m = mobius_forward(game)
    via_mobius = [Fraction(0)] * n
    for mask in game.nonempty_coalitions():
        c = m.coeffs[mask]
        if c:
            share = c / coalition_size(mask)
            for j in players_of(mask):
                via_mobius[j] += share
    assert marginal == via_mobius, "the two Shapley formulas disagree"
    return tuple(marginal)


def tau_value(game: TUGame) -> tuple[Fraction, ...]:
    """Tau value of a convex game.

    ``tau_i = b_i - g(N) / (sum_j g(j)) * g(i)`` with ``b`` the upper
    vector and ``g`` the gap function.  When every singleton gap vanishes
    the formula degenerates and the upper vector itself is returned (the
    game is then additive-like at the singletons).  Cross-asserted against
    the equivalent Moebius form.
    """
    if not is_convex(game):
        raise ValueError("the tau formula requires a convex game")
    n = game.n
    b = upper_vector(game)
    singleton_gaps = [gap(game, 1 << i) for i in range(n)]
    denom = sum(singleton_gaps)
    if denom == 0:
        return tuple(b)
    top_gap = gap(game, game.grand_coalition())
    result = tuple(b[i] - top_gap * singleton_gaps[i] / denom for i in range(n))

    m = mobius_forward(game)
    total = Fraction(0)
    weighted = Fraction(0)
    per_player = [Fraction(0)] * n
    for mask in game.nonempty_coalitions():
        size = coalition_size(mask)
        if size > 1:
            c = m.coeffs[mask]
            total += c
            weighted += size * c
            if c:
                for j in players_of(mask):
                    per_player[j] += c
    via_mobius = tuple(
        m.coeffs[1 << i] + total * per_player[i] / weighted for i in range(n)
    )
    assert result == via_mobius, "the two tau formulas disagree"
    return result
