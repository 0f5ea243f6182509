"""Structural analysis of a coloring: contributing diagonals, translation
regions, consecutive contributing pairs, corners, delta-diagonal sets, and
the structural-law suite evaluated as per-coloring predicates.

Every logarithmic bound is checked in exact integer arithmetic
(floor(log2 m) via bit_length, fractional comparisons cross-multiplied),
so verdicts are bit-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from .coloring import Coloring, SSequence, is_exact, s_sequence, s_sequence_of
from .grid import (
    GridDims,
    GridPoint,
    diagonal_cells,
    diagonal_index,
)
from .solutions import (
    SolutionIndex,
    interval_index,
    is_rainbow_free,
    solution_index,
)


# ---------------------------------------------------------------------------
# contributing diagonals


@dataclass(frozen=True)
class DiagonalInfo:
    k: int
    palette: frozenset[int]
    extra_colors: frozenset[int]  # palette minus main-diagonal palette
    contributed_colors: frozenset[int]  # extras not seen in any earlier diagonal

    @property
    def contributing(self) -> bool:
        return bool(self.contributed_colors)


@dataclass(frozen=True)
class ContributingMap:
    main_palette: frozenset[int]
    diagonals: dict[int, DiagonalInfo]  # keyed by k, main diagonal excluded

    def contributing_indices(self) -> list[int]:
        return sorted(k for k, d in self.diagonals.items() if d.contributing)

    def noncontributing_indices(self) -> list[int]:
        return sorted(k for k, d in self.diagonals.items() if not d.contributing)


def contributing_map(c: Coloring) -> ContributingMap:
    """Scan diagonals in increasing index; a diagonal contributes the colors
    outside the main-diagonal palette that no earlier diagonal carries."""
    dims = c.dims
    main = frozenset(c.main_diagonal_colors())
    seen: set[int] = set()
    info: dict[int, DiagonalInfo] = {}
    for k in range(1, dims.diagonal_count + 1):
        palette = frozenset(c.color_at(p) for p in diagonal_cells(k, dims))
        if k != dims.m:
            extra = palette - main
            contributed = frozenset(x for x in extra if x not in seen)
            info[k] = DiagonalInfo(k, palette, extra, contributed)
        seen |= palette
    return ContributingMap(main, info)


# ---------------------------------------------------------------------------
# W / Y regions


@dataclass(frozen=True)
class RegionMask:
    """Cells translatable by (s2, s2): W1 forward, W2 backward; Y1 and Y2
    the two excluded corner blocks. Undefined when the main diagonal is
    monochromatic (no s2).

    The literal text of the Y2 bound compares the column against m; the
    intended region is the top-right corner, which needs n. The default
    uses n; literal_y reproduces the text reading.
    """

    defined: bool
    s2: Optional[int]
    w1: frozenset[GridPoint] = field(default_factory=frozenset)
    w2: frozenset[GridPoint] = field(default_factory=frozenset)
    y1: frozenset[GridPoint] = field(default_factory=frozenset)
    y2: frozenset[GridPoint] = field(default_factory=frozenset)

    @property
    def w(self) -> frozenset[GridPoint]:
        return self.w1 | self.w2

    @property
    def y(self) -> frozenset[GridPoint]:
        return self.y1 | self.y2


def region_mask(c: Coloring, literal_y: bool = False) -> RegionMask:
    dims = c.dims
    ss = s_sequence(c)
    if ss.ell < 2:
        return RegionMask(defined=False, s2=None)
    s2 = ss.values[1]
    step = GridPoint(s2, s2)
    w1, w2, y1, y2 = set(), set(), set(), set()
    col_bound = dims.m if literal_y else dims.n
    for p in dims.cells():
        if dims.contains(p + step):
            w1.add(p)
        if dims.contains(p - step):
            w2.add(p)
        if p.i + s2 > dims.m and p.j < s2:
            y1.add(p)
        if p.i < s2 and p.j + s2 > col_bound:
            y2.add(p)
    return RegionMask(True, s2, frozenset(w1), frozenset(w2), frozenset(y1), frozenset(y2))


# ---------------------------------------------------------------------------
# consecutive contributing pairs and corners


@dataclass(frozen=True)
class PairRecord:
    kind: str  # horizontal | vertical | other
    alpha: GridPoint  # on D_a
    beta: GridPoint  # on D_{a+1}
    colors: tuple[int, int]
    diag: int  # a

    def cells(self) -> frozenset[GridPoint]:
        return frozenset((self.alpha, self.beta))


def find_pairs(c: Coloring, cmap: Optional[ContributingMap] = None) -> list[PairRecord]:
    """All element pairs across consecutive contributing off-diagonals whose
    colors avoid the main-diagonal palette."""
    dims = c.dims
    cmap = cmap or contributing_map(c)
    main = cmap.main_palette
    out = []
    for a in range(1, dims.diagonal_count):
        if a == dims.m or a + 1 == dims.m:
            continue
        da = cmap.diagonals[a]
        db = cmap.diagonals[a + 1]
        if not (da.contributing and db.contributing):
            continue
        for alpha in diagonal_cells(a, dims):
            ca = c.color_at(alpha)
            if ca in main:
                continue
            for beta in diagonal_cells(a + 1, dims):
                cb = c.color_at(beta)
                if cb in main:
                    continue
                if beta == GridPoint(alpha.i, alpha.j + 1):
                    kind = "horizontal"
                elif beta == GridPoint(alpha.i - 1, alpha.j):
                    kind = "vertical"
                else:
                    kind = "other"
                out.append(PairRecord(kind, alpha, beta, (ca, cb), a))
    return out


@dataclass(frozen=True)
class CornerRecord:
    vertical: PairRecord
    horizontal: PairRecord
    strict_colors: bool  # the four cell colors pairwise distinct


def find_disjoint_corners(
    c: Coloring,
    mask: Optional[RegionMask] = None,
    pairs: Optional[list[PairRecord]] = None,
) -> list[CornerRecord]:
    """All (vertical, horizontal) pair combinations that are cell-disjoint
    and each meet W. Empty whenever W is undefined."""
    mask = mask if mask is not None else region_mask(c)
    if not mask.defined:
        return []
    pairs = pairs if pairs is not None else find_pairs(c)
    w = mask.w
    verts = [p for p in pairs if p.kind == "vertical" and p.cells() & w]
    hors = [p for p in pairs if p.kind == "horizontal" and p.cells() & w]
    out = []
    for pv in verts:
        for ph in hors:
            if pv.cells() & ph.cells():
                continue
            four = [c.color_at(x) for x in (pv.alpha, pv.beta, ph.alpha, ph.beta)]
            out.append(CornerRecord(pv, ph, len(set(four)) == 4))
    return out


# ---------------------------------------------------------------------------
# delta-diagonal sets


@dataclass(frozen=True)
class DeltaDiagonalSets:
    """Off-diagonals whose every cell can translate by +delta or -delta
    within the grid, and the cells that can do neither."""

    delta: GridPoint
    dd: frozenset[int]
    sd_cells: frozenset[GridPoint]

    def count_lower_bound_holds(self, dims: GridDims) -> bool:
        d = self.delta
        return len(self.dd) >= dims.m + dims.n - 2 * d.i - 2 * d.j


def delta_sets(delta: GridPoint, dims: GridDims) -> DeltaDiagonalSets:
    if not dims.contains(delta):
        raise ValueError(f"delta {delta} outside grid {dims.m}x{dims.n}")
    dd = set()
    sd = set()
    for k in range(1, dims.diagonal_count + 1):
        cells = diagonal_cells(k, dims)
        ok = all(dims.contains(p + delta) or dims.contains(p - delta) for p in cells)
        if ok and k != dims.m:
            dd.add(k)
    for p in dims.cells():
        if not dims.contains(p + delta) and not dims.contains(p - delta):
            sd.add(p)
    return DeltaDiagonalSets(delta, frozenset(dd), frozenset(sd))


# ---------------------------------------------------------------------------
# the structural-law suite


@dataclass(frozen=True)
class LemmaVerdict:
    lemma_id: str
    applicable: bool
    holds: Optional[bool]  # meaningful only when applicable
    detail: str = ""


class _Ctx:
    """Shared lazily-computed facts about one coloring."""

    def __init__(self, c: Coloring, interval: bool):
        self.c = c
        self.dims = c.dims
        self.interval = interval

    @cached_property
    def index(self) -> SolutionIndex:
        if self.interval:
            return interval_index(self.dims.n)
        return solution_index(self.dims)

    @cached_property
    def rainbow_free(self) -> bool:
        return is_rainbow_free(self.c, self.index)

    @cached_property
    def exact(self) -> bool:
        return is_exact(self.c)

    @cached_property
    def ss(self) -> SSequence:
        if self.interval:
            return s_sequence_of(self.c.cells)
        return s_sequence(self.c)

    @property
    def length_bound(self) -> int:
        # the "[m]" the s-sequence lives in: the main diagonal, or the
        # whole interval in interval mode
        return self.dims.n if self.interval else self.dims.m

    @cached_property
    def cmap(self) -> ContributingMap:
        return contributing_map(self.c)

    @cached_property
    def mask(self) -> RegionMask:
        return region_mask(self.c)

    @cached_property
    def pairs(self) -> list[PairRecord]:
        return find_pairs(self.c, self.cmap)

    @cached_property
    def corners(self) -> list[CornerRecord]:
        return find_disjoint_corners(self.c, self.mask, self.pairs)

    @cached_property
    def jumps(self) -> list[tuple[GridPoint, GridPoint]]:
        pts = list(self.dims.cells())
        return [
            (p, q)
            for p in pts
            for q in pts
            if p.i < q.i and p.j < q.j
        ]

    def off_palette_jumps(self) -> list[tuple[GridPoint, GridPoint]]:
        main = self.cmap.main_palette
        out = []
        for p, q in self.jumps:
            cp, cq = self.c.color_at(p), self.c.color_at(q)
            if cp not in main and cq not in main and cp != cq:
                out.append((p, q))
        return out

    def target_hypothesis(self, min_m: int = 3) -> tuple[bool, str]:
        """Exact rainbow-free (m+n+1)-coloring with min_m <= m <= n."""
        if self.interval:
            return False, "interval mode"
        if self.dims.m < min_m:
            return False, f"needs m >= {min_m}"
        if not self.exact:
            return False, "coloring not exact"
        if self.c.r != self.dims.m + self.dims.n + 1:
            return False, f"needs r = m+n+1 = {self.dims.m + self.dims.n + 1}"
        if not self.rainbow_free:
            return False, "coloring has a rainbow solution"
        return True, ""


def _na(lemma_id: str, reason: str) -> LemmaVerdict:
    return LemmaVerdict(lemma_id, applicable=False, holds=None, detail=reason)


def _check_s_doubling(ctx: _Ctx) -> LemmaVerdict:
    lid = "s-doubling"
    if not ctx.rainbow_free:
        return _na(lid, "coloring has a rainbow solution")
    v = ctx.ss.values
    for i in range(len(v) - 1):
        if v[i + 1] < 2 * v[i]:
            return LemmaVerdict(lid, True, False, f"s{i+2}={v[i+1]} < 2*s{i+1}={2*v[i]}")
    for i, x in enumerate(v):
        if x < 1 << i:
            return LemmaVerdict(lid, True, False, f"s{i+1}={x} < 2^{i}")
    return LemmaVerdict(lid, True, True)


def _check_s2_power(ctx: _Ctx) -> LemmaVerdict:
    lid = "s2-power-bound"
    if not ctx.rainbow_free:
        return _na(lid, "coloring has a rainbow solution")
    ell = ctx.ss.ell
    if ell < 2:
        return LemmaVerdict(lid, True, True, "single color, bound vacuous")
    s2 = ctx.ss.values[1]
    ok = s2 * (1 << (ell - 2)) <= ctx.length_bound
    return LemmaVerdict(lid, True, ok, f"s2={s2}, ell={ell}")


def _check_palette_cap(ctx: _Ctx) -> LemmaVerdict:
    lid = "main-palette-cap"
    if not ctx.rainbow_free:
        return _na(lid, "coloring has a rainbow solution")
    ell = ctx.ss.ell
    bound = ctx.length_bound
    ok = ell <= bound.bit_length()
    if ok and ell >= 2:
        # the sharper form: ell <= log2(bound / s2) + 2
        ok = ctx.ss.values[1] * (1 << (ell - 2)) <= bound
    return LemmaVerdict(lid, True, ok, f"ell={ell}, floor(log2)+1={bound.bit_length()}")


def _check_one_extra_color(ctx: _Ctx) -> LemmaVerdict:
    lid = "one-extra-color"
    if ctx.interval:
        return _na(lid, "interval mode")
    if not ctx.rainbow_free:
        return _na(lid, "coloring has a rainbow solution")
    for k, d in ctx.cmap.diagonals.items():
        if len(d.extra_colors) > 1:
            return LemmaVerdict(lid, True, False, f"diagonal {k} carries extras {sorted(d.extra_colors)}")
    return LemmaVerdict(lid, True, True)


def _check_noncontributing_cap(ctx: _Ctx) -> LemmaVerdict:
    lid = "noncontributing-cap"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    bad = ctx.cmap.noncontributing_indices()
    cap = ctx.ss.ell - 3
    return LemmaVerdict(lid, True, len(bad) <= cap, f"{len(bad)} noncontributing, cap {cap}")


def _check_palette_at_least_three(ctx: _Ctx) -> LemmaVerdict:
    lid = "palette-at-least-three"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    return LemmaVerdict(lid, True, ctx.ss.ell >= 3, f"ell={ctx.ss.ell}")


def _check_no_disjoint_corners(ctx: _Ctx) -> LemmaVerdict:
    lid = "no-disjoint-corners"
    if ctx.interval:
        return _na(lid, "interval mode")
    if not ctx.rainbow_free:
        return _na(lid, "coloring has a rainbow solution")
    if not ctx.mask.defined:
        return LemmaVerdict(lid, True, True, "W undefined, vacuously true")
    n_all = len(ctx.corners)
    n_strict = sum(1 for x in ctx.corners if x.strict_colors)
    return LemmaVerdict(
        lid, True, n_all == 0, f"{n_all} corners ({n_strict} with 4 distinct colors)"
    )


def _check_offdiag_color_budget(ctx: _Ctx) -> LemmaVerdict:
    lid = "offdiagonal-color-budget"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    dims = ctx.dims
    main = ctx.cmap.main_palette
    off_colors = len(set(ctx.c.cells) - main)
    for p in dims.cells():
        if ctx.c.color_at(p) in main:
            continue
        dd = len(delta_sets(p, dims).dd)
        # off_colors <= m + n - 1/2 - |dd|/3, cross-multiplied by 6
        if 6 * off_colors > 6 * (dims.m + dims.n) - 3 - 2 * dd:
            return LemmaVerdict(lid, True, False, f"delta={p}, |dd|={dd}, off colors {off_colors}")
    return LemmaVerdict(lid, True, True)


def _check_jump_distance_lower(ctx: _Ctx) -> LemmaVerdict:
    lid = "jump-distance-lower"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    dims = ctx.dims
    main = ctx.cmap.main_palette
    floor_log = dims.m.bit_length()  # floor(log2 m) + 1
    for p in dims.cells():
        if ctx.c.color_at(p) in main:
            continue
        if 4 * (p.i + p.j) < 4 * dims.m + 9 - 6 * floor_log:
            return LemmaVerdict(lid, True, False, f"delta={p} too short")
    return LemmaVerdict(lid, True, True)


def _check_jump_distance_upper(ctx: _Ctx) -> LemmaVerdict:
    lid = "jump-distance-upper"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    m = ctx.dims.m
    for p, q in ctx.off_palette_jumps():
        d = (q.i - p.i) + (q.j - p.j)
        # d <= 2 log2(m) + 1  <=>  2^(d-1) <= m^2
        if 1 << (d - 1) > m * m:
            return LemmaVerdict(lid, True, False, f"jump {p}->{q} distance {d}")
    return LemmaVerdict(lid, True, True)


def _check_no_offdiag_jumps(ctx: _Ctx) -> LemmaVerdict:
    lid = "no-offdiagonal-jumps"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    bad = ctx.off_palette_jumps()
    if bad:
        p, q = bad[0]
        return LemmaVerdict(lid, True, False, f"jump {p}->{q} between distinct off-palette colors")
    return LemmaVerdict(lid, True, True)


def _count_consecutive_contributing(ctx: _Ctx) -> int:
    contributing = set(ctx.cmap.contributing_indices())
    dims = ctx.dims
    return sum(
        1
        for x in range(1, dims.diagonal_count)
        if x != dims.m and x + 1 != dims.m and x in contributing and x + 1 in contributing
    )


def _check_consecutive_contributing(ctx: _Ctx) -> LemmaVerdict:
    lid = "consecutive-contributing-pairs"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    if ctx.ss.ell < 2:
        return _na(lid, "s2 undefined")
    count = _count_consecutive_contributing(ctx)
    dims = ctx.dims
    s2 = ctx.ss.values[1]
    q = dims.m + dims.n - 2 - count
    # count >= m + n - 2 log2(m / s2) - 2  <=>  (m/s2)^2 >= 2^q
    holds = q <= 0 or dims.m * dims.m >= s2 * s2 * (1 << q)
    return LemmaVerdict(lid, True, holds, f"{count} consecutive contributing pairs")


def _check_pair_count_cap(ctx: _Ctx) -> LemmaVerdict:
    lid = "pair-count-cap"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    nh = sum(1 for p in ctx.pairs if p.kind == "horizontal")
    nv = sum(1 for p in ctx.pairs if p.kind == "vertical")
    dims = ctx.dims
    holds = nh <= dims.n - 1 and nv <= dims.m - 1
    return LemmaVerdict(lid, True, holds, f"{nh} horizontal, {nv} vertical")


def _check_every_offdiag_contributes(ctx: _Ctx) -> LemmaVerdict:
    lid = "every-offdiagonal-contributes"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    if ctx.ss.ell != 3:
        return _na(lid, f"needs 3 main-diagonal colors, got {ctx.ss.ell}")
    from collections import Counter

    counts = Counter(ctx.c.cells)
    for k, d in ctx.cmap.diagonals.items():
        if len(d.contributed_colors) != 1:
            return LemmaVerdict(lid, True, False, f"diagonal {k} contributes {len(d.contributed_colors)} colors")
        (color,) = d.contributed_colors
        in_diag = sum(
            1 for p in diagonal_cells(k, ctx.dims) if ctx.c.color_at(p) == color
        )
        if counts[color] != in_diag:
            return LemmaVerdict(lid, True, False, f"color {color} escapes diagonal {k}")
    return LemmaVerdict(lid, True, True)


def _check_no_jumps_three_palette(ctx: _Ctx) -> LemmaVerdict:
    lid = "no-jumps-three-palette"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    if ctx.ss.ell != 3:
        return _na(lid, f"needs 3 main-diagonal colors, got {ctx.ss.ell}")
    bad = ctx.off_palette_jumps()
    return LemmaVerdict(lid, True, not bad, f"{len(bad)} offending jumps")


def _check_small_block_palette(ctx: _Ctx) -> LemmaVerdict:
    lid = "small-block-palette"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    if ctx.ss.ell < 3:
        return _na(lid, "s3 undefined")
    s3 = ctx.ss.values[2]
    main = ctx.cmap.main_palette
    for i in range(1, min(s3, ctx.dims.m + 1)):
        for j in range(1, min(s3, ctx.dims.n + 1)):
            if ctx.c.color_at(GridPoint(i, j)) not in main:
                return LemmaVerdict(lid, True, False, f"({i},{j}) colored outside the main palette")
    return LemmaVerdict(lid, True, True)


def _check_three_palette_rainbow(ctx: _Ctx) -> LemmaVerdict:
    lid = "three-palette-rainbow"
    if ctx.interval:
        return _na(lid, "interval mode")
    dims = ctx.dims
    if dims.m < 3:
        return _na(lid, "needs m >= 3")
    if not ctx.exact or ctx.c.r != dims.m + dims.n + 1:
        return _na(lid, "needs an exact (m+n+1)-coloring")
    if ctx.ss.ell > 3:
        return _na(lid, f"needs at most 3 main-diagonal colors, got {ctx.ss.ell}")
    return LemmaVerdict(lid, True, not ctx.rainbow_free, "rainbow solution must exist")


def _check_jump_diagonal_relation(ctx: _Ctx) -> LemmaVerdict:
    lid = "jump-diagonal-relation"
    ok, why = ctx.target_hypothesis()
    if not ok:
        return _na(lid, why)
    dims = ctx.dims
    for p, q in ctx.off_palette_jumps():
        t = diagonal_index(q - p, dims)
        b = diagonal_index(q, dims)
        if 2 * dims.m - t != b:
            return LemmaVerdict(lid, True, False, f"jump {p}->{q}: 2m-t={2*dims.m-t} != b={b}")
    return LemmaVerdict(lid, True, True)


def _check_pair_exclusion(ctx: _Ctx) -> LemmaVerdict:
    lid = "pair-exclusion"
    ok, why = ctx.target_hypothesis(min_m=4)
    if not ok:
        return _na(lid, why)
    if not ctx.mask.defined:
        return _na(lid, "W undefined")
    w = ctx.mask.w
    s2 = ctx.mask.s2 or 0
    nh = sum(1 for p in ctx.pairs if p.kind == "horizontal")
    nv = sum(1 for p in ctx.pairs if p.kind == "vertical")
    h_in_w = any(p.kind == "horizontal" and p.cells() & w for p in ctx.pairs)
    v_in_w = any(p.kind == "vertical" and p.cells() & w for p in ctx.pairs)
    if h_in_w and nv > 2 * s2 - 2:
        return LemmaVerdict(lid, True, False, f"{nv} vertical pairs > {2*s2-2}")
    if v_in_w and nh > 2 * s2 - 2:
        return LemmaVerdict(lid, True, False, f"{nh} horizontal pairs > {2*s2-2}")
    return LemmaVerdict(lid, True, True)


LEMMA_CHECKS: dict[str, Callable[[_Ctx], LemmaVerdict]] = {
    "s-doubling": _check_s_doubling,
    "s2-power-bound": _check_s2_power,
    "main-palette-cap": _check_palette_cap,
    "one-extra-color": _check_one_extra_color,
    "noncontributing-cap": _check_noncontributing_cap,
    "palette-at-least-three": _check_palette_at_least_three,
    "no-disjoint-corners": _check_no_disjoint_corners,
    "offdiagonal-color-budget": _check_offdiag_color_budget,
    "jump-distance-lower": _check_jump_distance_lower,
    "jump-distance-upper": _check_jump_distance_upper,
    "no-offdiagonal-jumps": _check_no_offdiag_jumps,
    "consecutive-contributing-pairs": _check_consecutive_contributing,
    "pair-count-cap": _check_pair_count_cap,
    "every-offdiagonal-contributes": _check_every_offdiag_contributes,
    "no-jumps-three-palette": _check_no_jumps_three_palette,
    "small-block-palette": _check_small_block_palette,
    "three-palette-rainbow": _check_three_palette_rainbow,
    "jump-diagonal-relation": _check_jump_diagonal_relation,
    "pair-exclusion": _check_pair_exclusion,
}


def lemma_suite(c: Coloring, interval: bool = False) -> list[LemmaVerdict]:
    """Evaluate every registered structural law on one coloring. Laws whose
    hypotheses fail report applicable=False with the reason."""
    ctx = _Ctx(c, interval)
    return [check(ctx) for check in LEMMA_CHECKS.values()]


def check_lemma(name: str, c: Coloring, interval: bool = False) -> LemmaVerdict:
    if name not in LEMMA_CHECKS:
        raise KeyError(name)
    return LEMMA_CHECKS[name](_Ctx(c, interval))


# ---------------------------------------------------------------------------
# report


def relabel_main_palette_first(c: Coloring) -> Coloring:
    """Permute colors so the main-diagonal palette becomes 1..ell in order
    of first appearance along the diagonal, remaining colors numbered by
    first appearance row-major."""
    relabel: dict[int, int] = {}
    for col in c.main_diagonal_colors():
        if col not in relabel:
            relabel[col] = len(relabel) + 1
    for col in c.cells:
        if col not in relabel:
            relabel[col] = len(relabel) + 1
    for col in range(1, c.r + 1):  # colors unused by a non-exact coloring
        if col not in relabel:
            relabel[col] = len(relabel) + 1
    return Coloring(c.dims, tuple(relabel[x] for x in c.cells), c.r)


def structure_report(c: Coloring, interval: bool = False) -> dict:
    """JSON-ready structural report for one coloring."""
    ctx = _Ctx(c, interval)
    diag_entries = []
    for k in sorted(ctx.cmap.diagonals):
        d = ctx.cmap.diagonals[k]
        diag_entries.append(
            {
                "k": k,
                "palette": sorted(d.palette),
                "status": "contributing" if d.contributing else "non-contributing",
                "contributed": sorted(d.contributed_colors),
                "extra": sorted(d.extra_colors),
            }
        )
    return {
        "m": c.dims.m,
        "n": c.dims.n,
        "r": c.r,
        "exact": ctx.exact,
        "rainbow_free": ctx.rainbow_free,
        "s_sequence": list(ctx.ss.values),
        "main_palette": sorted(ctx.cmap.main_palette),
        "diagonals": diag_entries,
        "pairs": [
            {
                "kind": p.kind,
                "alpha": [p.alpha.i, p.alpha.j],
                "beta": [p.beta.i, p.beta.j],
                "colors": list(p.colors),
            }
            for p in ctx.pairs
        ],
        "corners": [
            {
                "vertical": [[x.i, x.j] for x in (cr.vertical.alpha, cr.vertical.beta)],
                "horizontal": [[x.i, x.j] for x in (cr.horizontal.alpha, cr.horizontal.beta)],
                "strict_colors": cr.strict_colors,
            }
            for cr in ctx.corners
        ],
        "verdicts": [
            {
                "lemma": v.lemma_id,
                "applicable": v.applicable,
                "holds": v.holds,
                "detail": v.detail,
            }
            for v in lemma_suite(c, interval)
        ],
    }


def structure_report_json(c: Coloring, interval: bool = False) -> str:
    return json.dumps(structure_report(c, interval), indent=2) + "\n"
