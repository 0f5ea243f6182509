"""Solution indexes: precomputed triples with fast rainbow lookup.

Two flavors share one duck-typed interface:

* GridSolutionIndex -- component-wise sums inside [m]x[n]; triples are held
  as flat numpy index arrays so rainbow checks vectorize.
* IntervalSolutionIndex -- integer sums a + b = c inside [n], modeled on a
  1-by-n grid. The grid equation has no solutions when m = 1, so intervals
  need their own index.

Both expose: dims, triples(), cell_triples(), find_rainbow(cells).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .coloring import Coloring
from .grid import GridDims, GridPoint, SolutionTriple, enumerate_solutions


def _ordered_pairs(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """All ordered (x, y) with x, y >= 1 and x + y <= limit."""
    xs, ys = [], []
    for x in range(1, limit):
        cnt = limit - x
        xs.append(np.full(cnt, x, dtype=np.int32))
        ys.append(np.arange(1, cnt + 1, dtype=np.int32))
    if not xs:
        empty = np.empty(0, dtype=np.int32)
        return empty, empty
    return np.concatenate(xs), np.concatenate(ys)


class GridSolutionIndex:
    """Flat-index arrays (alpha, beta, gamma) of every unordered solution."""

    def __init__(self, dims: GridDims):
        self.dims = dims
        m, n = dims.m, dims.n
        ri1, ri2 = _ordered_pairs(m)
        cj1, cj2 = _ordered_pairs(n)
        if ri1.size == 0 or cj1.size == 0:
            self.alpha = self.beta = self.gamma = np.empty(0, dtype=np.int32)
            self.degenerate = np.empty(0, dtype=bool)
        else:
            i1 = ri1[:, None]
            i2 = ri2[:, None]
            j1 = cj1[None, :]
            j2 = cj2[None, :]
            # keep the lexicographically ordered representative of each pair
            keep = (i1 < i2) | ((i1 == i2) & (j1 <= j2))
            af = ((i1 - 1) * n + (j1 - 1)) + np.zeros_like(keep, dtype=np.int32)
            bf = ((i2 - 1) * n + (j2 - 1)) + np.zeros_like(keep, dtype=np.int32)
            gf = ((i1 + i2 - 1) * n + (j1 + j2 - 1)) + np.zeros_like(keep, dtype=np.int32)
            deg = (i1 == i2) & (j1 == j2)
            self.alpha = af[keep]
            self.beta = bf[keep]
            self.gamma = gf[keep]
            self.degenerate = deg[keep]
        self._triples: list[SolutionTriple] | None = None

    def __len__(self) -> int:
        return int(self.alpha.size)

    def triples(self) -> list[SolutionTriple]:
        if self._triples is None:
            self._triples = enumerate_solutions(self.dims)
        return self._triples

    def cell_triples(self) -> list[list[int]]:
        """Per flat cell, ids of the triples it participates in."""
        out: list[list[int]] = [[] for _ in range(self.dims.cell_count)]
        for t, trip in enumerate(self.triples()):
            for p in {trip.alpha, trip.beta, trip.gamma}:
                out[self.dims.flat(p)].append(t)
        return out

    def find_rainbow(self, cells: Sequence[int]) -> Optional[SolutionTriple]:
        if self.alpha.size == 0:
            return None
        col = np.asarray(cells, dtype=np.int32)
        ca = col[self.alpha]
        cb = col[self.beta]
        cg = col[self.gamma]
        hits = np.flatnonzero(
            ~self.degenerate & (ca != cb) & (ca != cg) & (cb != cg)
        )
        if hits.size == 0:
            return None
        k = int(hits[0])
        return SolutionTriple.of(
            self.dims.point(int(self.alpha[k])), self.dims.point(int(self.beta[k]))
        )


class IntervalSolutionIndex:
    """Schur triples a + b = c in [n], on a 1-by-n carrier grid."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"interval length must be positive, got {n}")
        self.n = n
        self.dims = GridDims(1, n)
        self._triples: list[SolutionTriple] | None = None

    def __len__(self) -> int:
        return sum(self.n - 2 * a + 1 for a in range(1, self.n // 2 + 1))

    def triples(self) -> list[SolutionTriple]:
        if self._triples is None:
            self._triples = [
                SolutionTriple(
                    GridPoint(1, a), GridPoint(1, b), GridPoint(1, a + b), a == b
                )
                for a in range(1, self.n // 2 + 1)
                for b in range(a, self.n - a + 1)
            ]
        return self._triples

    def cell_triples(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for t, trip in enumerate(self.triples()):
            for p in {trip.alpha, trip.beta, trip.gamma}:
                out[p.j - 1].append(t)
        return out

    def find_rainbow(self, cells: Sequence[int]) -> Optional[SolutionTriple]:
        # One vectorized sweep per value of a keeps memory flat even for
        # n around 10^4.
        col = np.asarray(cells, dtype=np.int32)
        n = self.n
        for a in range(1, n // 2 + 1):
            ca = col[a - 1]
            cb = col[a:n - a]  # b in [a+1, n-a]; b == a is degenerate
            cc = col[2 * a : n]
            hits = np.flatnonzero((cb != ca) & (cc != ca) & (cb != cc))
            if hits.size:
                b = a + 1 + int(hits[0])
                return SolutionTriple(
                    GridPoint(1, a), GridPoint(1, b), GridPoint(1, a + b), False
                )
        return None


SolutionIndex = GridSolutionIndex | IntervalSolutionIndex


@lru_cache(maxsize=64)
def grid_index(m: int, n: int) -> GridSolutionIndex:
    return GridSolutionIndex(GridDims(m, n))


@lru_cache(maxsize=64)
def interval_index(n: int) -> IntervalSolutionIndex:
    return IntervalSolutionIndex(n)


def solution_index(dims: GridDims) -> GridSolutionIndex:
    return grid_index(dims.m, dims.n)


def find_rainbow_solution(c: Coloring, index: SolutionIndex) -> Optional[SolutionTriple]:
    if index.dims != c.dims:
        raise ValueError("solution index built for different dimensions")
    return index.find_rainbow(c.cells)


def is_rainbow_free(c: Coloring, index: SolutionIndex) -> bool:
    """True iff no solution triple is rainbow under c."""
    return find_rainbow_solution(c, index) is None
