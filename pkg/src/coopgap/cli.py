"""Command-line interface.

Subcommands: ``check`` (predicates and extendability verdicts),
``extensions`` (vertex/ray/witness enumeration), ``approx`` (closed-form
core/Shapley/tau bounds), ``table1`` (recession-cone ray counts), and
``oracle`` (sampling cross-check of the closed forms).

Exit codes: 0 success, 2 validation error, 3 infeasible or not
extendable, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .approximations import core_bounds, empirical_bounds, shapley_bounds, tau_bounds
from .extensions import (
    NotExtendableError,
    convex_recession_ray,
    extendable,
    monotone_vertices,
    negative_unanimity_ray,
    positive_vertices,
    superadditive_extension,
)
from .games import GameClass, TUGame, players_of
from .gamefile import GameFileError, format_rational, load_game
from .incomplete import PlayerCenteredGame, convex_extendable
from .polyhedra import (
    HPolyhedron,
    NotPointedError,
    extension_polytope,
    extreme_rays,
    lp_feasible,
    recession_cone,
    recession_cone_coordinates,
    vertex_enumeration,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3
EXIT_INVARIANT = 4

_CLASS_NAMES = {c.value: c for c in GameClass}


def _game_to_json(game: TUGame) -> dict:
    return {
        "n": game.n,
        "coalitions": [list(players_of(m)) for m in game.nonempty_coalitions()],
        "values": [format_rational(game.values[m]) for m in game.nonempty_coalitions()],
    }


def _hrep_to_json(poly: HPolyhedron) -> dict:
    return {
        "dim": poly.dim,
        "inequalities": [
            {"coeffs": [format_rational(c) for c in a], "rhs": format_rational(b)}
            for a, b in poly.inequalities
        ],
        "equalities": [
            {"coeffs": [format_rational(c) for c in e], "rhs": format_rational(d)}
            for e, d in poly.equalities
        ],
    }


def _emit(data) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_player_centered(path: str) -> PlayerCenteredGame:
    loaded = load_game(Path(path).read_text())
    return loaded.as_player_centered()


def cmd_check(args: argparse.Namespace) -> int:
    loaded = load_game(Path(args.file).read_text())
    report: dict = {"n": loaded.n, "center": loaded.center}
    if loaded.center is not None:
        game = loaded.as_player_centered()
        report["predicates"] = {
            "monotone": game.is_monotone(),
            "superadditive": game.is_superadditive(),
            "convex": game.is_convex(),
            "positive": game.is_positive(),
        }
        report["extendable"] = {cls.value: extendable(game, cls) for cls in GameClass}
        report["convex_completion_feasible"] = convex_extendable(game.base)
    else:
        report["convex_completion_feasible"] = convex_extendable(loaded.incomplete)
    _emit(report)
    return EXIT_OK


def cmd_extensions(args: argparse.Namespace) -> int:
    game = _load_player_centered(args.file)
    cls = _CLASS_NAMES[args.cls]
    if args.what == "vertices":
        if cls is GameClass.POSITIVE:
            games = sorted(positive_vertices(game), key=lambda g: g.values)
        elif cls is GameClass.MONOTONE:
            games = sorted(monotone_vertices(game), key=lambda g: g.values)
        else:
            vrep = vertex_enumeration(extension_polytope(game, cls))
            games = [TUGame(game.n, (Fraction(0),) + v) for v in vrep.vertices]
        _emit([_game_to_json(g) for g in games])
    elif args.what == "rays":
        if cls not in (GameClass.CONVEX, GameClass.SUPERADDITIVE):
            print("rays are enumerated for the convex and superadditive classes", file=sys.stderr)
            return EXIT_VALIDATION
        cone = recession_cone(game.n, game.center, cls)
        coords = recession_cone_coordinates(game.n, game.center)
        rays = extreme_rays(cone)
        _emit(
            [
                {
                    "coalitions": [list(players_of(m)) for m in coords],
                    "direction": [format_rational(x) for x in ray],
                }
                for ray in rays
            ]
        )
    else:  # witness
        if not extendable(game, cls):
            print(f"game admits no {cls.value} extension", file=sys.stderr)
            return EXIT_INFEASIBLE
        if cls is GameClass.SUPERADDITIVE:
            witness = superadditive_extension(game)
        else:
            feasible, point = lp_feasible(extension_polytope(game, cls))
            if not feasible or point is None:
                print(f"game admits no {cls.value} extension", file=sys.stderr)
                return EXIT_INFEASIBLE
            witness = TUGame(game.n, (Fraction(0),) + point)
        _emit(_game_to_json(witness))
    return EXIT_OK


def cmd_approx(args: argparse.Namespace) -> int:
    game = _load_player_centered(args.file)
    cls = _CLASS_NAMES[args.cls]
    if args.concept == "core":
        bounds = core_bounds(game, cls)
        _emit(
            {
                "class": cls.value,
                "inner": _hrep_to_json(bounds.inner) if bounds.inner is not None else None,
                "outer": _hrep_to_json(bounds.outer),
            }
        )
    elif args.concept == "shapley":
        sb = shapley_bounds(game, cls)
        _emit(
            {
                "class": cls.value,
                "intervals": [
                    {"player": k, "lo": format_rational(iv.lo), "hi": format_rational(iv.hi)}
                    for k, iv in enumerate(sb.intervals)
                ],
            }
        )
    else:  # tau
        tb = tau_bounds(game)
        _emit(
            {
                "class": GameClass.ZERO_NORMALIZED_POSITIVE.value,
                "intervals": [
                    {"player": k, "lo": format_rational(iv.lo), "hi": format_rational(iv.hi)}
                    for k, iv in enumerate(tb.intervals)
                ],
            }
        )
    return EXIT_OK


def cmd_table1(args: argparse.Namespace) -> int:
    if args.n_max < 1:
        print("--n-max must be at least 1", file=sys.stderr)
        return EXIT_VALIDATION
    if args.n_max >= 5 and not args.allow_long:
        print("n >= 5 is a long-running job; pass --allow-long to opt in", file=sys.stderr)
        return EXIT_VALIDATION
    rows: dict[str, list[int]] = {
        "rays(superadditive)": [],
        "neg-unanimity family": [],
        "rays(convex)": [],
        "meeting-family": [],
    }
    for n in range(1, args.n_max + 1):
        center = 0
        sup = extreme_rays(recession_cone(n, center, GameClass.SUPERADDITIVE))
        con = extreme_rays(recession_cone(n, center, GameClass.CONVEX))
        rows["rays(superadditive)"].append(len(sup))
        rows["neg-unanimity family"].append(n - 1)
        rows["rays(convex)"].append(len(con))
        rows["meeting-family"].append((1 << (n - 1)) - 1)
    header = "n".ljust(24) + "".join(str(n).rjust(8) for n in range(1, args.n_max + 1))
    print(header)
    for name, counts in rows.items():
        print(name.ljust(24) + "".join(str(c).rjust(8) for c in counts))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    game = _load_player_centered(args.file)
    cls = _CLASS_NAMES[args.cls]
    emp = empirical_bounds(game, cls, args.concept, args.samples, args.seed)
    closed = shapley_bounds(game, cls) if args.concept == "shapley" else tau_bounds(game)
    intervals = closed.intervals
    if args.corrupt_interval:  # test hook: shrink every closed-form interval
        from .approximations import Interval

        intervals = tuple(Interval(iv.lo, iv.lo) for iv in intervals)
    escapes = []
    for k, (closed_iv, emp_iv) in enumerate(zip(intervals, emp.intervals)):
        if not (closed_iv.lo <= emp_iv.lo and emp_iv.hi <= closed_iv.hi):
            escapes.append(k)
    report = {
        "concept": args.concept,
        "class": cls.value,
        "samples": args.samples,
        "seed": args.seed,
        "closed_form": [
            {"player": k, "lo": format_rational(iv.lo), "hi": format_rational(iv.hi)}
            for k, iv in enumerate(intervals)
        ],
        "empirical": [
            {"player": k, "lo": format_rational(iv.lo), "hi": format_rational(iv.hi)}
            for k, iv in enumerate(emp.intervals)
        ],
        "status": "PASS" if not escapes else "FAIL",
        "escaped_players": escapes,
    }
    _emit(report)
    return EXIT_OK if not escapes else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coopgap",
        description="Exact bounds on solution concepts of partially known cooperative games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a game file and report predicates")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("extensions", help="enumerate vertices, rays or a witness")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", required=True, choices=sorted(_CLASS_NAMES))
    p.add_argument("--what", required=True, choices=["vertices", "rays", "witness"])
    p.set_defaults(func=cmd_extensions)

    p = sub.add_parser("approx", help="closed-form solution bounds")
    p.add_argument("file")
    p.add_argument("--concept", required=True, choices=["core", "shapley", "tau"])
    p.add_argument("--class", dest="cls", default=GameClass.POSITIVE.value, choices=sorted(_CLASS_NAMES))
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("table1", help="recession-cone ray counts by player count")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--allow-long", action="store_true")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("oracle", help="sampling cross-check of the closed forms")
    p.add_argument("file")
    p.add_argument("--concept", required=True, choices=["shapley", "tau"])
    p.add_argument("--class", dest="cls", default=GameClass.POSITIVE.value, choices=sorted(_CLASS_NAMES))
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corrupt-interval", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GameFileError, FileNotFoundError, ValueError) as exc:
        if isinstance(exc, NotExtendableError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INFEASIBLE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NotPointedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except AssertionError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
