"""Exact rational polyhedra: feasibility, vertex and extreme-ray enumeration.

Everything here runs on :class:`fractions.Fraction`; no floating point is
used anywhere.  The vertex/ray engine is a double-description pass over a
pointed cone (polytopes are homogenized first), with the combinatorial
adjacency test on binding-row bitmasks.  A two-phase exact simplex with
Bland's rule provides feasibility certificates and redundancy pruning.

Vertex/ray soundness certificates follow the classical rank criteria: a
point is extreme iff ``dim`` linearly independent constraints bind at it,
a ray iff ``dim - 1`` bind.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .games import GameClass, Rational, coalition_size, subsets_of
from .incomplete import PlayerCenteredGame

__all__ = [
    "HPolyhedron",
    "VRep",
    "PolyhedronError",
    "NotPointedError",
    "DimensionCapExceeded",
    "lp_feasible",
    "lp_maximize",
    "vertex_enumeration",
    "extreme_rays",
    "is_extreme_point",
    "is_extreme_ray",
    "contains",
    "extension_polytope",
    "recession_cone",
    "recession_cone_coordinates",
    "format_hrep",
    "format_vrep",
]

DEFAULT_DIM_CAP = 15
DIM_CAP_ENV = "COOPGAP_DIM_CAP"


class PolyhedronError(Exception):
    pass


class NotPointedError(PolyhedronError):
    """The feasible set contains a line; enumeration refuses to split it."""


class DimensionCapExceeded(PolyhedronError):
    pass


def _dim_cap() -> int:
    raw = os.environ.get(DIM_CAP_ENV)
    return int(raw) if raw else DEFAULT_DIM_CAP


Row = tuple[tuple[Fraction, ...], Fraction]


@dataclass(frozen=True)
class HPolyhedron:
    """``{x : a.x <= rhs for inequalities, e.x == rhs for equalities}``."""

    dim: int
    inequalities: tuple[Row, ...]
    equalities: tuple[Row, ...]

    def __post_init__(self) -> None:
        for coeffs, _ in self.inequalities + self.equalities:
            if len(coeffs) != self.dim:
                raise ValueError("row width does not match the dimension")

    def satisfies(self, x: Sequence[Fraction]) -> bool:
        return all(_dot(a, x) <= b for a, b in self.inequalities) and all(
            _dot(e, x) == d for e, d in self.equalities
        )


@dataclass(frozen=True)
class VRep:
    """Minkowski-Weyl data: the set is ``conv(vertices) + cone(rays)``.

    Rays are scaled to coprime integer entries with their direction kept;
    that makes ray lists comparable as plain sets.
    """

    vertices: tuple[tuple[Fraction, ...], ...]
    rays: tuple[tuple[Fraction, ...], ...]


def _dot(a: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((ai * xi for ai, xi in zip(a, x) if ai), Fraction(0))


def _integerize(vec: Iterable[Fraction]) -> tuple[int, ...]:
    vec = list(vec)
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def canonical_ray(vec: Iterable[Rational]) -> tuple[Fraction, ...]:
    """Scale a direction to coprime integer entries (direction preserved)."""
    ints = _integerize(Fraction(v) for v in vec)
    return tuple(Fraction(v) for v in ints)


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        inv = 1 / pr[col]
        mat[rank] = pr = [v * inv for v in pr]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], pr)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _solve_affine(
    equalities: Sequence[Row], dim: int
) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """Particular solution and nullspace basis of ``E x = d``.

    Returns ``None`` when the system is inconsistent.  The basis is a list
    of column vectors; ``x = x0 + B y`` parameterizes the solution set.
    """
    aug = [list(e) + [d] for e, d in equalities]
    pivots: list[int] = []
    rank = 0
    for col in range(dim):
        piv = next((i for i in range(rank, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pr = aug[rank]
        inv = 1 / pr[col]
        aug[rank] = pr = [v * inv for v in pr]
        for i in range(len(aug)):
            if i != rank and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], pr)]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(aug)):
        if aug[i][dim] != 0:
            return None
    x0 = [Fraction(0)] * dim
    for r, col in enumerate(pivots):
        x0[col] = aug[r][dim]
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        col = [Fraction(0)] * dim
        col[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            col[pc] = -aug[r][fc]
        basis.append(col)
    return x0, basis


# ---------------------------------------------------------------------------
# exact two-phase simplex (Bland's rule, Fractions throughout)


def _simplex(
    inequalities: Sequence[Row],
    equalities: Sequence[Row],
    objective: Sequence[Fraction] | None,
    dim: int,
) -> tuple[str, list[Fraction] | None, Fraction | None]:
    """Maximize ``objective . x`` over the system (``x`` free).

    Returns ``(status, x, value)`` with status one of ``"optimal"``,
    ``"infeasible"``, ``"unbounded"``.  A ``None`` objective runs phase 1
    only and reports a feasible point.
    """
    n_ineq = len(inequalities)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    # columns: u (dim) | w (dim) | slacks (n_ineq) | artificials (appended)
    base_cols = 2 * dim + n_ineq
    for k, (a, b) in enumerate(inequalities):
        row = [Fraction(0)] * base_cols
        for j, aj in enumerate(a):
            row[j] = aj
            row[dim + j] = -aj
        row[2 * dim + k] = Fraction(1)
        rows.append(row)
        rhs.append(b)
    for e, d in equalities:
        row = [Fraction(0)] * base_cols
        for j, ej in enumerate(e):
            row[j] = ej
            row[dim + j] = -ej
        rows.append(row)
        rhs.append(d)
    # normalize to rhs >= 0
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    # initial basis: slack where usable, artificial otherwise
    basis: list[int] = []
    art_cols: list[int] = []
    ncols = base_cols
    for i in range(len(rows)):
        slack = 2 * dim + i if i < n_ineq else -1
        if slack >= 0 and rows[i][slack] == 1:
            basis.append(slack)
        else:
            for r in rows:
                r.append(Fraction(0))
            rows[i][ncols] = Fraction(1)
            basis.append(ncols)
            art_cols.append(ncols)
            ncols += 1

    tab = [rows[i] + [rhs[i]] for i in range(len(rows))]
    m = len(tab)

    def pivot(pr: int, pc: int) -> None:
        inv = 1 / tab[pr][pc]
        tab[pr] = [v * inv for v in tab[pr]]
        prow = tab[pr]
        for i in range(m):
            if i != pr and tab[i][pc] != 0:
                f = tab[i][pc]
                tab[i] = [a - f * b for a, b in zip(tab[i], prow)]
        basis[pr] = pc

    def run(cost: list[Fraction]) -> str:
        # minimize cost . y ; maintain reduced costs r = cost - cost_B B^-1 A
        red = cost + [Fraction(0)]
        for i in range(m):
            cb = cost[basis[i]]
            if cb != 0:
                red = [a - cb * b for a, b in zip(red, tab[i])]
        while True:
            enter = next((j for j in range(ncols) if red[j] < 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i in range(m):
                coef = tab[i][enter]
                if coef > 0:
                    ratio = tab[i][ncols] / coef
                    if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return "unbounded"
            f = red[enter]
            pivot(best[1], enter)
            if f != 0:
                red = [a - f * b for a, b in zip(red, tab[best[1]])]

    if art_cols:
        cost1 = [Fraction(0)] * ncols
        for c in art_cols:
            cost1[c] = Fraction(1)
        run(cost1)
        total = sum((tab[i][ncols] for i in range(m) if basis[i] in art_cols), Fraction(0))
        if total != 0:
            return "infeasible", None, None
        art = set(art_cols)
        for i in range(m):
            if basis[i] in art:
                pc = next((j for j in range(base_cols) if tab[i][j] != 0), None)
                if pc is not None:
                    pivot(i, pc)
        # rows still basic in an artificial are identically zero; freeze them
        for c in art_cols:
            for i in range(m):
                tab[i][c] = Fraction(0)

    def extract() -> list[Fraction]:
        y = [Fraction(0)] * ncols
        for i in range(m):
            y[basis[i]] = tab[i][ncols]
        return [y[j] - y[dim + j] for j in range(dim)]

    if objective is None:
        return "optimal", extract(), None

    cost2 = [Fraction(0)] * ncols
    for j in range(dim):
        cost2[j] = -objective[j]
        cost2[dim + j] = objective[j]
    status = run(cost2)
    if status == "unbounded":
        return "unbounded", None, None
    x = extract()
    return "optimal", x, _dot(objective, x)


def lp_feasible(poly: HPolyhedron) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Exact feasibility with a witness point when one exists."""
    if poly.dim == 0:
        ok = all(b >= 0 for _, b in poly.inequalities) and all(d == 0 for _, d in poly.equalities)
        return (ok, () if ok else None)
    status, x, _ = _simplex(poly.inequalities, poly.equalities, None, poly.dim)
    if status == "infeasible":
        return False, None
    assert x is not None
    return True, tuple(x)


def lp_maximize(
    poly: HPolyhedron, objective: Sequence[Rational]
) -> tuple[str, tuple[Fraction, ...] | None, Fraction | None]:
    obj = [Fraction(c) for c in objective]
    status, x, val = _simplex(poly.inequalities, poly.equalities, obj, poly.dim)
    return status, tuple(x) if x is not None else None, val


# ---------------------------------------------------------------------------
# double description over a pointed cone


def _normalize_rows(rows: Iterable[Sequence[Fraction]]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for r in rows:
        ints = _integerize(Fraction(v) for v in r)
        if any(ints) and ints not in seen:
            seen.add(ints)
            out.append(ints)
    return out


def _dd_rays(rows: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{x : r.x <= 0}``.

    ``rows`` must span the space (pointedness); the caller checks this.
    """
    if dim == 0:
        return []
    # greedy independent starting basis
    chosen: list[int] = []
    mat: list[list[Fraction]] = []
    for idx, r in enumerate(rows):
        cand = mat + [[Fraction(v) for v in r]]
        if _rank(cand) > len(mat):
            mat = cand
            chosen.append(idx)
            if len(chosen) == dim:
                break
    if len(chosen) < dim:
        raise NotPointedError("cone is not pointed")
    rest = sorted(i for i in range(len(rows)) if i not in set(chosen))
    order = chosen + sorted(rest, key=lambda i: rows[i])

    # invert the starting square block: generators are -(A0^-1) columns
    a0 = [[Fraction(v) for v in rows[i]] for i in chosen]
    aug = [a0[i] + [Fraction(1) if j == i else Fraction(0) for j in range(dim)] for i in range(dim)]
    for col in range(dim):
        piv = next(i for i in range(col, dim) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pr = aug[col]
        inv = 1 / pr[col]
        aug[col] = pr = [v * inv for v in pr]
        for i in range(dim):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], pr)]
    inv_cols = [[aug[i][dim + j] for i in range(dim)] for j in range(dim)]
    gens: list[tuple[int, ...]] = [_integerize(Fraction(-v) for v in col) for col in inv_cols]

    processed = [rows[i] for i in chosen]

    def zero_mask(g: tuple[int, ...]) -> int:
        mask = 0
        for k, row in enumerate(processed):
            if sum(a * b for a, b in zip(row, g)) == 0:
                mask |= 1 << k
        return mask

    masks = [zero_mask(g) for g in gens]

    for idx in order[dim:]:
        row = rows[idx]
        dots = [sum(a * b for a, b in zip(row, g)) for g in gens]
        if all(d <= 0 for d in dots):
            processed.append(row)
            masks = [mk | (1 << (len(processed) - 1)) if d == 0 else mk for mk, d in zip(masks, dots)]
            continue
        keep_idx = [i for i, d in enumerate(dots) if d < 0]
        zero_idx = [i for i, d in enumerate(dots) if d == 0]
        pos_idx = [i for i, d in enumerate(dots) if d > 0]
        new_gens: list[tuple[int, ...]] = []
        for ip in pos_idx:
            for ineg in keep_idx:
                common = masks[ip] & masks[ineg]
                if bin(common).count("1") < dim - 2:
                    continue
                adjacent = True
                for j, mk in enumerate(masks):
                    if j != ip and j != ineg and common & mk == common:
                        adjacent = False
                        break
                if adjacent:
                    lp, ln = dots[ip], dots[ineg]
                    combo = tuple(lp * bn - ln * bp for bp, bn in zip(gens[ip], gens[ineg]))
                    new_gens.append(_integerize(Fraction(v) for v in combo))
        processed.append(row)
        bit = 1 << (len(processed) - 1)
        kept_gens = [gens[i] for i in keep_idx + zero_idx]
        kept_masks = [masks[i] | (bit if i in zero_idx else 0) for i in keep_idx + zero_idx]
        for g in new_gens:
            kept_gens.append(g)
            kept_masks.append(zero_mask(g))
        gens, masks = kept_gens, kept_masks

    return sorted(set(gens))


def _prune_redundant(rows: list[Row], dim: int) -> list[Row]:
    """Drop inequalities implied by the rest (exact LP per row)."""
    kept = list(rows)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1 :]
        a, b = kept[i]
        status, _, val = _simplex(others, (), list(a), dim)
        if status == "optimal" and val is not None and val <= b:
            kept.pop(i)
        else:
            i += 1
    return kept


def vertex_enumeration(poly: HPolyhedron, prune: bool | None = None) -> VRep:
    """Exact V-representation of an H-polyhedron.

    Equalities are eliminated first; the effective dimension (after the
    elimination) must not exceed the configured cap.  Polyhedra containing
    a line are rejected rather than silently split.
    """
    reduced = _solve_affine(poly.equalities, poly.dim)
    if reduced is None:
        return VRep((), ())
    x0, basis = reduced
    d = len(basis)
    if d > _dim_cap():
        raise DimensionCapExceeded(f"effective dimension {d} exceeds cap {_dim_cap()}")
    new_rows: list[Row] = []
    for a, b in poly.inequalities:
        coeffs = tuple(_dot(a, col) for col in basis)
        shift = b - _dot(a, x0)
        if not any(coeffs):
            if shift < 0:
                return VRep((), ())
            continue
        new_rows.append((coeffs, shift))
    if d == 0:
        return VRep(((tuple(x0),) if all(b >= 0 for _, b in new_rows) else ()), ())
    feasible, _ = lp_feasible(HPolyhedron(d, tuple(new_rows), ()))
    if not feasible:
        return VRep((), ())
    if prune is None:
        prune = d >= 8
    if prune:
        new_rows = _prune_redundant(new_rows, d)
    # homogenize: coordinate 0 is the scaling variable t
    hom = [(-b,) + tuple(a) for a, b in new_rows]
    hom.append((Fraction(-1),) + (Fraction(0),) * d)
    rows = _normalize_rows(hom)
    if _rank([[Fraction(v) for v in r] for r in rows]) < d + 1:
        raise NotPointedError("polyhedron contains a line")
    gens = _dd_rays(rows, d + 1)
    lift = _transpose(basis, poly.dim)
    verts = []
    rays = []
    for g in gens:
        t, tail = g[0], g[1:]
        if t > 0:
            y = [Fraction(v, t) for v in tail]
            verts.append(tuple(x + _dot(row, y) for x, row in zip(x0, lift)))
        else:
            y = [Fraction(v) for v in tail]
            rays.append(canonical_ray(_dot(row, y) for row in lift))
    return VRep(tuple(sorted(verts)), tuple(sorted(set(rays))))


def _transpose(basis: list[list[Fraction]], dim: int) -> list[list[Fraction]]:
    return [[col[i] for col in basis] for i in range(dim)]


def extreme_rays(cone: HPolyhedron, prune: bool | None = None) -> tuple[tuple[Fraction, ...], ...]:
    """All extreme rays of a pointed homogeneous system.

    Raises :class:`NotPointedError` when the cone contains a line and
    :class:`ValueError` when any right-hand side is nonzero.
    """
    if any(b != 0 for _, b in cone.inequalities) or any(d != 0 for _, d in cone.equalities):
        raise ValueError("extreme_rays expects a homogeneous system")
    reduced = _solve_affine(cone.equalities, cone.dim)
    assert reduced is not None  # homogeneous equalities are always consistent
    _, basis = reduced
    d = len(basis)
    if d > _dim_cap():
        raise DimensionCapExceeded(f"effective dimension {d} exceeds cap {_dim_cap()}")
    if d == 0:
        return ()
    new_rows: list[Row] = []
    for a, _ in cone.inequalities:
        coeffs = tuple(_dot(a, col) for col in basis)
        if any(coeffs):
            new_rows.append((coeffs, Fraction(0)))
    if prune is None:
        prune = d >= 8
    if prune:
        new_rows = _prune_redundant(new_rows, d)
    rows = _normalize_rows(a for a, _ in new_rows)
    if _rank([[Fraction(v) for v in r] for r in rows]) < d:
        raise NotPointedError("cone is not pointed")
    gens = _dd_rays(rows, d)
    lift = _transpose(basis, cone.dim)
    out = {canonical_ray(_dot(row, [Fraction(v) for v in g]) for row in lift) for g in gens}
    return tuple(sorted(out))


def is_extreme_point(poly: HPolyhedron, x: Sequence[Rational]) -> bool:
    """Rank certificate: ``dim`` independent constraints bind at ``x``."""
    xf = [Fraction(v) for v in x]
    if len(xf) != poly.dim:
        raise ValueError("point has the wrong dimension")
    binding = [list(e) for e, d in poly.equalities if _dot(e, xf) == d]
    if len(binding) != len(poly.equalities):
        raise ValueError("point violates an equality")
    for a, b in poly.inequalities:
        lhs = _dot(a, xf)
        if lhs > b:
            raise ValueError("point lies outside the polyhedron")
        if lhs == b:
            binding.append(list(a))
    return _rank(binding) == poly.dim


def is_extreme_ray(cone: HPolyhedron, ray: Sequence[Rational]) -> bool:
    """Rank certificate for rays: ``dim - 1`` independent binding rows."""
    rf = [Fraction(v) for v in ray]
    if all(v == 0 for v in rf):
        return False
    binding = [list(e) for e, _ in cone.equalities if _dot(e, rf) == 0]
    if len(binding) != len(cone.equalities):
        raise ValueError("direction violates an equality")
    for a, _ in cone.inequalities:
        lhs = _dot(a, rf)
        if lhs > 0:
            raise ValueError("direction lies outside the cone")
        if lhs == 0:
            binding.append(list(a))
    return _rank(binding) == cone.dim - 1


def contains(outer: HPolyhedron, inner: HPolyhedron, inner_vrep: VRep | None = None) -> bool:
    """Exact polyhedral containment ``inner ⊆ outer`` via inner's V-rep."""
    if outer.dim != inner.dim:
        raise ValueError("dimension mismatch")
    vrep = inner_vrep if inner_vrep is not None else vertex_enumeration(inner)
    for v in vrep.vertices:
        if not outer.satisfies(v):
            return False
    for r in vrep.rays:
        if any(_dot(a, r) > 0 for a, _ in outer.inequalities):
            return False
        if any(_dot(e, r) != 0 for e, _ in outer.equalities):
            return False
    return True


# ---------------------------------------------------------------------------
# extension sets of player-centered games as H-polyhedra


def _unit(dim: int, j: int, value: Fraction = Fraction(1)) -> list[Fraction]:
    row = [Fraction(0)] * dim
    row[j] = value
    return row


def extension_polytope(game: PlayerCenteredGame, cls: GameClass) -> HPolyhedron:
    """H-system of all ``cls``-extensions, over coordinates ``w(S)``.

    The coordinate space is R^(2^n - 1), one coordinate per nonempty
    coalition in ascending mask order (the empty coalition is fixed at 0
    and carries no coordinate).
    """
    n = game.n
    dim = (1 << n) - 1
    full = (1 << n) - 1

    def var(mask: int) -> int:
        return mask - 1

    ineqs: list[Row] = []
    eqs: list[Row] = []

    def monotone_rows() -> None:
        for s in range(1, 1 << n):
            m = s
            while m:
                bit = m & -m
                row = [Fraction(0)] * dim
                row[var(s)] = Fraction(-1)
                if s ^ bit:
                    row[var(s ^ bit)] = Fraction(1)
                ineqs.append((tuple(row), Fraction(0)))
                m ^= bit

    def superadditive_rows() -> None:
        for s in range(1, 1 << n):
            rest = full ^ s
            t = rest
            while t:
                if t > s:
                    row = [Fraction(0)] * dim
                    row[var(s)] += 1
                    row[var(t)] += 1
                    row[var(s | t)] -= 1
                    ineqs.append((tuple(row), Fraction(0)))
                t = (t - 1) & rest

    def convex_rows() -> None:
        for j, k in combinations(range(n), 2):
            bj, bk = 1 << j, 1 << k
            others = full ^ bj ^ bk
            s = others
            while True:
                row = [Fraction(0)] * dim
                row[var(s | bj)] += 1
                row[var(s | bk)] += 1
                if s:
                    row[var(s)] -= 1
                row[var(s | bj | bk)] -= 1
                ineqs.append((tuple(row), Fraction(0)))
                if s == 0:
                    break
                s = (s - 1) & others

    def positive_rows() -> None:
        for t in range(1, 1 << n):
            row = [Fraction(0)] * dim
            size_t = coalition_size(t)
            for s in subsets_of(t):
                if s:
                    sign = -1 if (size_t - coalition_size(s)) % 2 == 0 else 1
                    row[var(s)] = Fraction(sign)
            ineqs.append((tuple(row), Fraction(0)))

    if cls is GameClass.MONOTONE:
        monotone_rows()
    elif cls is GameClass.SUPERADDITIVE:
        superadditive_rows()
    elif cls is GameClass.CONVEX:
        convex_rows()
    elif cls is GameClass.POSITIVE:
        positive_rows()
    elif cls is GameClass.MONOTONE_SUPERADDITIVE:
        superadditive_rows()
        monotone_rows()
    elif cls is GameClass.MONOTONE_CONVEX:
        convex_rows()
        monotone_rows()
    elif cls is GameClass.ZERO_NORMALIZED_POSITIVE:
        positive_rows()
        for k in range(n):
            eqs.append((tuple(_unit(dim, var(1 << k))), Fraction(0)))
    else:  # pragma: no cover - exhaustive over the enum
        raise ValueError(f"unknown game class {cls}")

    for s in game.known_nonempty():
        eqs.append((tuple(_unit(dim, var(s))), game.value(s)))
    return HPolyhedron(dim=dim, inequalities=tuple(ineqs), equalities=tuple(eqs))


def recession_cone_coordinates(n: int, center: int) -> tuple[int, ...]:
    """Masks indexing the reduced cone's coordinates, ascending."""
    return tuple(m for m in range(1, 1 << n) if not m >> center & 1)


def recession_cone(n: int, center: int, cls: GameClass) -> HPolyhedron:
    """Recession cone of the convex/superadditive extension set.

    Projected to the coordinates of the unknown coalitions (the known ones
    are pinned to zero in any recession direction), with the reduced
    inequality lists.  The system never references worths of the partial
    game, so all games sharing ``(n, center)`` get the same cone.
    """
    if cls not in (GameClass.CONVEX, GameClass.SUPERADDITIVE):
        raise ValueError("recession cones are reduced only for convex/superadditive sets")
    coords = recession_cone_coordinates(n, center)
    index = {m: j for j, m in enumerate(coords)}
    dim = len(coords)
    rows: list[Row] = []

    def add(pairs: list[tuple[int, int]]) -> None:
        row = [Fraction(0)] * dim
        for mask, sign in pairs:
            row[index[mask]] += sign
        rows.append((tuple(row), Fraction(0)))

    if cls is GameClass.SUPERADDITIVE:
        for s in coords:
            add([(s, 1)])
        for s in coords:
            for t in coords:
                if t > s and s & t == 0:
                    add([(s, 1), (t, 1), (s | t, -1)])
    else:
        players = [j for j in range(n) if j != center]
        for j in players:
            add([(1 << j, 1)])
        for j, k in combinations(players, 2):
            add([(1 << j, 1), (1 << k, 1), ((1 << j) | (1 << k), -1)])
        for s in coords:
            if coalition_size(s) > 1:
                for j in range(n):
                    if s >> j & 1:
                        add([(s, 1), (s ^ (1 << j), -1)])
        for s in coords:
            if coalition_size(s) > 2:
                for j, k in combinations(range(n), 2):
                    if s >> j & 1 and s >> k & 1:
                        bj, bk = 1 << j, 1 << k
                        add([(s ^ bj, 1), (s ^ bk, 1), (s ^ bj ^ bk, -1), (s, -1)])
    return HPolyhedron(dim=dim, inequalities=tuple(rows), equalities=())


def format_hrep(poly: HPolyhedron) -> str:
    """Debug dump, one row per line, rationals as ``p/q``."""
    lines = [f"dim {poly.dim}"]
    for a, b in poly.inequalities:
        lines.append(" ".join(str(v) for v in a) + f" <= {b}")
    for e, d in poly.equalities:
        lines.append(" ".join(str(v) for v in e) + f" == {d}")
    return "\n".join(lines)


def format_vrep(vrep: VRep) -> str:
    lines = []
    for v in vrep.vertices:
        lines.append("vertex " + " ".join(str(x) for x in v))
    for r in vrep.rays:
        lines.append("ray " + " ".join(str(x) for x in r))
    return "\n".join(lines)
