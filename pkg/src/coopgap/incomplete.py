"""Partial games: worths known only on a family of coalitions.

The main object is :class:`PlayerCenteredGame`, where the known family
consists of every coalition containing one fixed player (plus the empty
coalition).  Generic :class:`IncompleteGame` support is limited to what
the convex-completion feasibility check needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .games import (
    Rational,
    TUGame,
    coalition_size,
    lattice_closure,
    players_of,
    subsets_of,
)

__all__ = ["IncompleteGame", "PlayerCenteredGame", "restrict_to_center", "convex_extendable"]


def _as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True, eq=True)
class IncompleteGame:
    """A game whose characteristic function is known only on ``known``.

    ``known`` always contains the empty coalition, whose worth is fixed
    at 0 and never stored in ``values``.
    """

    n: int
    known: frozenset[int]
    values: Mapping[int, Fraction] = field(hash=False)

    def __post_init__(self) -> None:
        if 0 not in self.known:
            raise ValueError("the empty coalition must be known")
        stored = set(self.values)
        if stored != set(self.known) - {0}:
            raise ValueError("values must be given exactly on the known nonempty coalitions")
        for mask in stored:
            if not 0 < mask < 1 << self.n:
                raise ValueError(f"coalition {mask} out of range for n={self.n}")
        object.__setattr__(self, "values", {m: _as_fraction(v) for m, v in self.values.items()})

    def value(self, mask: int) -> Fraction:
        if mask == 0:
            return Fraction(0)
        return self.values[mask]


@dataclass(frozen=True, eq=True)
class PlayerCenteredGame:
    """An incomplete game known exactly on coalitions containing ``center``."""

    base: IncompleteGame
    center: int

    def __post_init__(self) -> None:
        n, i = self.base.n, self.center
        if not 0 <= i < n:
            raise ValueError("center out of range")
        expected = {0} | {m for m in range(1, 1 << n) if m >> i & 1}
        if set(self.base.known) != expected:
            raise ValueError("known family is not centered on the given player")

    @classmethod
    def from_values(cls, n: int, center: int, values: Mapping[int, Rational]) -> "PlayerCenteredGame":
        known = frozenset({0} | {m for m in range(1, 1 << n) if m >> center & 1})
        vals = {m: _as_fraction(v) for m, v in values.items()}
        return cls(IncompleteGame(n, known, vals), center)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def known(self) -> frozenset[int]:
        return self.base.known

    def value(self, mask: int) -> Fraction:
        return self.base.value(mask)

    def unknown_coalitions(self) -> tuple[int, ...]:
        """Nonempty coalitions avoiding the center, ascending by mask."""
        i = self.center
        return tuple(m for m in range(1, 1 << self.n) if not m >> i & 1)

    def known_nonempty(self) -> tuple[int, ...]:
        return tuple(m for m in range(1, 1 << self.n) if m >> self.center & 1)

    def partial_mobius(self) -> dict[int, Fraction]:
        """Moebius coefficients on the known family.

        ``m(S) = sum_{T ⊆ S, T known} (-1)^{|S \\ T|} v(T)`` for every known
        ``S``; well defined because the known family is closed under taking
        known subsets.
        """
        out: dict[int, Fraction] = {0: Fraction(0)}
        for s in self.known_nonempty():
            acc = Fraction(0)
            size_s = coalition_size(s)
            for t in subsets_of(s):
                if t in self.base.known and t != 0:
                    sign = -1 if (size_s - coalition_size(t)) % 2 else 1
                    acc += sign * self.base.values[t]
            out[s] = acc
        return out

    def is_positive(self) -> bool:
        """All partial Moebius coefficients nonnegative."""
        return all(c >= 0 for c in self.partial_mobius().values())

    def is_monotone(self) -> bool:
        """Worth nondecreasing along inclusions inside the known family."""
        i = self.center
        if self.value(1 << i) < 0:
            return False
        for s in self.known_nonempty():
            for j in players_of(s):
                if j != i and self.value(s ^ (1 << j)) > self.value(s):
                    return False
        return True

    def is_convex(self) -> bool:
        """Supermodularity over all pairs of known coalitions."""
        ks = self.known_nonempty()
        for a, b in combinations(ks, 2):
            if a & b != a and a & b != b:  # incomparable pairs only
                if self.value(a) + self.value(b) > self.value(a & b) + self.value(a | b):
                    return False
        return True

    def is_superadditive(self) -> bool:
        """Vacuously true: no two known nonempty coalitions are disjoint."""
        return True


def restrict_to_center(game: TUGame, center: int) -> PlayerCenteredGame:
    """Forget every worth of a coalition not containing ``center``."""
    if not 0 <= center < game.n:
        raise ValueError("center out of range")
    vals = {m: game.values[m] for m in range(1, 1 << game.n) if m >> center & 1}
    return PlayerCenteredGame.from_values(game.n, center, vals)


def convex_extendable(game: IncompleteGame) -> bool:
    """Decide whether some convex complete game agrees with ``game``.

    Works for an arbitrary known family: build the lattice closure, keep
    the coalitions sandwiched between known ones, and solve an exact LP
    for a supermodular assignment on that family (supermodularity is
    required for every pair whose union and intersection stay inside the
    family).
    """
    from .polyhedra import HPolyhedron, lp_feasible

    closure = lattice_closure(game.n, game.known)
    sandwiched = set()
    for s in range(1 << game.n):
        if any(s & upper == s for upper in game.known):
            sandwiched.add(s)  # the empty coalition is always a known lower bound
    family = sorted(closure & sandwiched)
    free = [s for s in family if s not in game.known and s != 0]
    index = {s: k for k, s in enumerate(free)}
    dim = len(free)

    def row_of(pairs: list[tuple[int, Fraction]]) -> tuple[tuple[Fraction, ...], Fraction]:
        coeffs = [Fraction(0)] * dim
        rhs = Fraction(0)
        for mask, sign in pairs:
            if mask == 0:
                continue
            if mask in index:
                coeffs[index[mask]] += sign
            else:
                rhs -= sign * game.value(mask)
        return tuple(coeffs), rhs

    fam = set(family)
    ineqs = []
    for a, b in combinations(family, 2):
        if a & b == a or a & b == b:
            continue
        if (a | b) in fam and (a & b) in fam:
            # v(a) + v(b) - v(a & b) - v(a | b) <= 0
            row, rhs = row_of([(a, Fraction(1)), (b, Fraction(1)), (a & b, Fraction(-1)), (a | b, Fraction(-1))])
            ineqs.append((row, rhs))
    poly = HPolyhedron(dim=dim, inequalities=tuple(ineqs), equalities=())
    feasible, _ = lp_feasible(poly)
    return feasible
