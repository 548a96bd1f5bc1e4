"""JSON game files.

Schema::

    {
      "n": 3,
      "players": ["alice", "bob", "carol"],   # optional names
      "center": 0,                            # optional; marks player-centered
      "known": [[0], [0, 1], [0, 2], [0, 1, 2]],
      "values": ["0", "1", "1", "3"]
    }

``known`` lists coalitions as sorted player-index arrays ordered by their
bitmask; ``values`` aligns with ``known`` and writes every worth as a
reduced rational string ``p/q`` (just ``p`` for integers, denominator
always positive).  Parsing then serializing a canonical file is
bit-identical.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .games import TUGame, coalition_of, players_of
from .incomplete import IncompleteGame, PlayerCenteredGame

__all__ = ["GameFileError", "LoadedGame", "load_game", "dump_game", "format_rational"]

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class GameFileError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise GameFileError(f"malformed rational {text!r} (expected 'p' or 'p/q')")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class LoadedGame:
    n: int
    players: tuple[str, ...] | None
    center: int | None
    incomplete: IncompleteGame

    def as_player_centered(self) -> PlayerCenteredGame:
        if self.center is None:
            raise GameFileError("game file does not declare a center player")
        return PlayerCenteredGame(self.incomplete, self.center)

    def as_complete(self) -> TUGame:
        if len(self.incomplete.known) != 1 << self.n:
            raise GameFileError("game file does not define every coalition")
        vals = [Fraction(0)] * (1 << self.n)
        for mask, v in self.incomplete.values.items():
            vals[mask] = v
        return TUGame(self.n, tuple(vals))


def load_game(text: str) -> LoadedGame:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise GameFileError("top level must be an object")
    n = data.get("n")
    if not isinstance(n, int) or n < 1:
        raise GameFileError("'n' must be a positive integer")
    players = data.get("players")
    if players is not None:
        if not isinstance(players, list) or len(players) != n or not all(isinstance(p, str) for p in players):
            raise GameFileError("'players' must list one name per player")
        players = tuple(players)
    known_raw = data.get("known")
    values_raw = data.get("values")
    if not isinstance(known_raw, list) or not isinstance(values_raw, list):
        raise GameFileError("'known' and 'values' must be arrays")
    if len(known_raw) != len(values_raw):
        raise GameFileError("'known' and 'values' must have equal length")
    masks = []
    for coalition in known_raw:
        if not isinstance(coalition, list) or not all(
            isinstance(j, int) and 0 <= j < n for j in coalition
        ):
            raise GameFileError(f"bad coalition {coalition!r}")
        if sorted(set(coalition)) != coalition:
            raise GameFileError(f"coalition {coalition!r} must be sorted and duplicate-free")
        mask = coalition_of(coalition)
        if mask == 0:
            raise GameFileError("the empty coalition is implicit and must not be listed")
        masks.append(mask)
    if sorted(masks) != masks or len(set(masks)) != len(masks):
        raise GameFileError("coalitions must be listed in ascending mask order, once each")
    values = {m: parse_rational(v) for m, v in zip(masks, values_raw)}
    known = frozenset({0} | set(masks))
    incomplete = IncompleteGame(n, known, values)
    center = data.get("center")
    if center is not None:
        if not isinstance(center, int) or not 0 <= center < n:
            raise GameFileError("'center' must be a player index")
        expected = {0} | {m for m in range(1, 1 << n) if m >> center & 1}
        if set(known) != expected:
            raise GameFileError("'center' given but the known family is not centered on it")
    return LoadedGame(n=n, players=players, center=center, incomplete=incomplete)


def dump_game(game: LoadedGame) -> str:
    masks = sorted(game.incomplete.values)
    data: dict = {"n": game.n}
    if game.players is not None:
        data["players"] = list(game.players)
    if game.center is not None:
        data["center"] = game.center
    data["known"] = [list(players_of(m)) for m in masks]
    data["values"] = [format_rational(game.incomplete.values[m]) for m in masks]
    return json.dumps(data, indent=2) + "\n"
