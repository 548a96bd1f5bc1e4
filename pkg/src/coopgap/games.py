"""Complete transferable-utility games over bitmask coalitions.

Coalitions are plain ``int`` bitmasks over players ``0..n-1`` (bit ``j`` set
iff player ``j`` belongs to the coalition).  All worths are exact
:class:`fractions.Fraction` values; nothing in this module touches floats.
The empty coalition always has worth 0 and is never stored.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping

Rational = int | Fraction

__all__ = [
    "GameClass",
    "TUGame",
    "MobiusVector",
    "coalition_of",
    "players_of",
    "coalition_size",
    "subsets_of",
    "mobius_forward",
    "mobius_inverse",
    "unanimity_game",
    "is_monotone",
    "is_superadditive",
    "is_convex",
    "is_convex_mobius",
    "is_positive",
    "upper_vector",
    "lower_vector",
    "gap",
    "lattice_closure",
]


def coalition_of(players: Iterable[int]) -> int:
    """Bitmask of the given player indices."""
    mask = 0
    for p in players:
        mask |= 1 << p
    return mask


def players_of(mask: int) -> tuple[int, ...]:
    """Sorted player indices contained in ``mask``."""
    return tuple(j for j in range(mask.bit_length()) if mask >> j & 1)


def coalition_size(mask: int) -> int:
    return bin(mask).count("1")


def subsets_of(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


class GameClass(enum.Enum):
    """Game classes used to constrain extensions of partial games."""

    MONOTONE = "monotone"
    SUPERADDITIVE = "superadditive"
    CONVEX = "convex"
    POSITIVE = "positive"
    MONOTONE_SUPERADDITIVE = "monotone-superadditive"
    MONOTONE_CONVEX = "monotone-convex"
    ZERO_NORMALIZED_POSITIVE = "zero-normalized-positive"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class TUGame:
    """A complete cooperative game with transferable utility.

    ``values[mask]`` is the worth of the coalition ``mask``; ``values[0]``
    is always 0.  Instances are immutable and hashable, so games can be
    deduplicated with plain sets.
    """

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 1 << self.n:
            raise ValueError("values must have one entry per coalition")
        if self.values[0] != 0:
            raise ValueError("the empty coalition must have worth 0")

    @classmethod
    def from_mapping(cls, n: int, worth: Mapping[int, Rational]) -> "TUGame":
        """Build a game from a mask -> worth mapping (missing masks are 0)."""
        vals = [Fraction(0)] * (1 << n)
        for mask, w in worth.items():
            if not 0 < mask < 1 << n:
                raise ValueError(f"coalition {mask} out of range for n={n}")
            vals[mask] = _as_fraction(w)
        return cls(n, tuple(vals))

    @classmethod
    def from_function(cls, n: int, worth) -> "TUGame":
        return cls(n, tuple(_as_fraction(worth(m)) if m else Fraction(0) for m in range(1 << n)))

    @classmethod
    def zero(cls, n: int) -> "TUGame":
        return cls(n, tuple([Fraction(0)] * (1 << n)))

    @classmethod
    def additive(cls, weights: Iterable[Rational]) -> "TUGame":
        ws = [_as_fraction(w) for w in weights]
        n = len(ws)
        return cls.from_function(n, lambda m: sum((ws[j] for j in players_of(m)), Fraction(0)))

    def value(self, mask: int) -> Fraction:
        return self.values[mask]

    def grand_coalition(self) -> int:
        return (1 << self.n) - 1

    def nonempty_coalitions(self) -> range:
        return range(1, 1 << self.n)

    def scale_add(self, alpha: Rational, other: "TUGame", beta: Rational) -> "TUGame":
        """The game ``alpha*self + beta*other``."""
        if other.n != self.n:
            raise ValueError("player counts differ")
        a, b = _as_fraction(alpha), _as_fraction(beta)
        return TUGame(self.n, tuple(a * x + b * y for x, y in zip(self.values, other.values)))


@dataclass(frozen=True)
class MobiusVector:
    """Moebius coefficients of a game, indexed like :class:`TUGame.values`."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != 1 << self.n:
            raise ValueError("coeffs must have one entry per coalition")
        if self.coeffs[0] != 0:
            raise ValueError("the empty coalition carries no coefficient")

    @classmethod
    def from_mapping(cls, n: int, coeffs: Mapping[int, Rational]) -> "MobiusVector":
        cs = [Fraction(0)] * (1 << n)
        for mask, c in coeffs.items():
            if not 0 < mask < 1 << n:
                raise ValueError(f"coalition {mask} out of range for n={n}")
            cs[mask] = _as_fraction(c)
        return cls(n, tuple(cs))

    def coeff(self, mask: int) -> Fraction:
        return self.coeffs[mask]


def mobius_forward(game: TUGame) -> MobiusVector:
    """Moebius transform: ``m(T) = sum_{S subseteq T} (-1)^{|T|-|S|} v(S)``.

    Computed with the in-place subset transform in O(n 2^n) exact steps.
    """
    m = list(game.values)
    for j in range(game.n):
        bit = 1 << j
        for mask in range(1 << game.n):
            if mask & bit:
                m[mask] -= m[mask ^ bit]
    return MobiusVector(game.n, tuple(m))


def mobius_inverse(m: MobiusVector) -> TUGame:
    """Inverse transform: ``v(S) = sum_{T subseteq S} m(T)``."""
    v = list(m.coeffs)
    for j in range(m.n):
        bit = 1 << j
        for mask in range(1 << m.n):
            if mask & bit:
                v[mask] += v[mask ^ bit]
    return TUGame(m.n, tuple(v))


def unanimity_game(n: int, carrier: int) -> TUGame:
    """The 0/1 game worth 1 exactly on supersets of ``carrier``."""
    if carrier == 0:
        raise ValueError("the carrier coalition must be nonempty")
    if carrier >= 1 << n:
        raise ValueError(f"coalition {carrier} out of range for n={n}")
    return TUGame.from_function(n, lambda m: Fraction(m & carrier == carrier))


def is_monotone(game: TUGame) -> bool:
    """True iff worth never decreases when a player joins.

    Only covering pairs ``(S \\ {j}, S)`` are compared; transitivity gives
    the general inequality.
    """
    v = game.values
    for mask in game.nonempty_coalitions():
        m = mask
        while m:
            bit = m & -m
            if v[mask ^ bit] > v[mask]:
                return False
            m ^= bit
    return True


def is_superadditive(game: TUGame) -> bool:
    """True iff ``v(S) + v(T) <= v(S | T)`` for all disjoint nonempty S, T."""
    v = game.values
    full = game.grand_coalition()
    for s in game.nonempty_coalitions():
        rest = full ^ s
        t = rest
        while t:
            if t > s and v[s] + v[t] > v[s | t]:  # each unordered pair once
                return False
            t = (t - 1) & rest
    return True


def is_convex(game: TUGame) -> bool:
    """True iff the game is supermodular.

    Checked in the covering form ``v(S|j) + v(S|k) <= v(S) + v(S|j|k)``
    for ``j, k`` not in ``S``; equivalent to the all-pairs inequality.
    """
    v = game.values
    n = game.n
    for j, k in combinations(range(n), 2):
        bj, bk = 1 << j, 1 << k
        others = game.grand_coalition() ^ bj ^ bk
        s = others
        while True:
            if v[s | bj] + v[s | bk] > v[s] + v[s | bj | bk]:
                return False
            if s == 0:
                break
            s = (s - 1) & others
    return True


def is_convex_mobius(m: MobiusVector) -> bool:
    """Supermodularity test on Moebius coefficients.

    The game is convex iff for every pair ``A = {j, k}`` and every
    ``B ⊇ A`` the interval sum ``sum_{A ⊆ T ⊆ B} m(T)`` is nonnegative.
    """
    n = m.n
    for j, k in combinations(range(n), 2):
        a = (1 << j) | (1 << k)
        others = ((1 << n) - 1) ^ a
        ext = others
        while True:
            total = Fraction(0)
            for extra in subsets_of(ext):
                total += m.coeffs[a | extra]
            if total < 0:
                return False
            if ext == 0:
                break
            ext = (ext - 1) & others
    return True


def is_positive(m: MobiusVector) -> bool:
    """True iff every Moebius coefficient is nonnegative."""
    return all(c >= 0 for c in m.coeffs)


def upper_vector(game: TUGame) -> tuple[Fraction, ...]:
    """Marginal contributions to the grand coalition, ``v(N) - v(N \\ i)``."""
    full = game.grand_coalition()
    top = game.values[full]
    return tuple(top - game.values[full ^ (1 << i)] for i in range(game.n))


def gap(game: TUGame, mask: int) -> Fraction:
    """Excess of the upper vector over the worth: ``b(S) - v(S)``."""
    b = upper_vector(game)
    return sum((b[i] for i in players_of(mask)), Fraction(0)) - game.values[mask]


def lower_vector(game: TUGame) -> tuple[Fraction, ...]:
    """Concession-based lower payoff bounds.

    ``a_i = max_{S ∋ i} (v(S) - b(S \\ {i}))``: what remains of a
    coalition's worth after paying everyone else their upper-vector
    payoff.  (An alternative reading drops the ``\\ {i}``; the two differ
    by ``b_i`` and this module deliberately uses the concession form.)
    """
    b = upper_vector(game)
    out = []
    for i in range(game.n):
        bit = 1 << i
        best = None
        for mask in game.nonempty_coalitions():
            if mask & bit:
                rest = sum((b[j] for j in players_of(mask ^ bit)), Fraction(0))
                cand = game.values[mask] - rest
                if best is None or cand > best:
                    best = cand
        out.append(best)
    return tuple(out)


def lattice_closure(n: int, known: Iterable[int]) -> frozenset[int]:
    """Smallest superset of ``known`` closed under union and intersection."""
    closed = set(known)
    if 0 not in closed:
        raise ValueError("the empty coalition must belong to the family")
    changed = True
    while changed:
        changed = False
        items = list(closed)
        for a, b in combinations(items, 2):
            for c in (a | b, a & b):
                if c not in closed:
                    closed.add(c)
                    changed = True
    return frozenset(closed)
