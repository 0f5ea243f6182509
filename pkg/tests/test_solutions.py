"""Solution indexes against brute-force enumeration and rainbow scans."""

import random

from schurgrid.coloring import Coloring, is_rainbow
from schurgrid.grid import GridDims, enumerate_solutions
from schurgrid.solutions import (
    GridSolutionIndex,
    IntervalSolutionIndex,
    find_rainbow_solution,
    grid_index,
    interval_index,
    is_rainbow_free,
    solution_index,
)


def test_grid_index_matches_enumeration():
    for m in range(1, 6):
        for n in range(m, 7):
            d = GridDims(m, n)
            idx = GridSolutionIndex(d)
            expected = enumerate_solutions(d)
            assert len(idx) == len(expected)
            got = {
                (int(a), int(b), int(g), bool(x))
                for a, b, g, x in zip(idx.alpha, idx.beta, idx.gamma, idx.degenerate)
            }
            want = {
                (d.flat(t.alpha), d.flat(t.beta), d.flat(t.gamma), t.degenerate)
                for t in expected
            }
            assert got == want


def test_interval_triples_brute_force():
    for n in range(1, 15):
        idx = IntervalSolutionIndex(n)
        want = {
            (a, b, a + b)
            for a in range(1, n + 1)
            for b in range(a, n + 1)
            if a + b <= n
        }
        got = {(t.alpha.j, t.beta.j, t.gamma.j) for t in idx.triples()}
        assert got == want
        assert len(idx) == len(want)


def _random_coloring(d: GridDims, r: int, rng: random.Random) -> Coloring:
    cells = [rng.randint(1, r) for _ in range(d.cell_count)]
    cells[: r] = list(range(1, r + 1))  # keep it exact
    rng.shuffle(cells)
    return Coloring(d, tuple(cells), r)


def test_grid_find_rainbow_matches_triple_scan():
    rng = random.Random(7)
    for m, n in [(2, 3), (3, 3), (3, 5), (4, 4)]:
        d = GridDims(m, n)
        idx = solution_index(d)
        for _ in range(50):
            c = _random_coloring(d, rng.randint(2, d.cell_count), rng)
            found = find_rainbow_solution(c, idx)
            slow = [t for t in enumerate_solutions(d) if is_rainbow(t, c)]
            assert (found is None) == (not slow)
            if found is not None:
                assert is_rainbow(found, c)


def test_interval_find_rainbow_matches_triple_scan():
    rng = random.Random(11)
    for n in [5, 8, 12, 20]:
        d = GridDims(1, n)
        idx = interval_index(n)
        for _ in range(50):
            c = _random_coloring(d, rng.randint(2, n), rng)
            found = idx.find_rainbow(c.cells)
            slow = [t for t in idx.triples() if is_rainbow(t, c)]
            assert (found is None) == (not slow)
            if found is not None:
                assert is_rainbow(found, c)


def test_cell_triples_cover_every_triple():
    d = GridDims(3, 4)
    idx = solution_index(d)
    per_cell = idx.cell_triples()
    trips = idx.triples()
    for t_id, t in enumerate(trips):
        for p in {t.alpha, t.beta, t.gamma}:
            assert t_id in per_cell[d.flat(p)]


def test_caches_return_same_object():
    assert grid_index(3, 4) is grid_index(3, 4)
    assert interval_index(9) is interval_index(9)


def test_single_row_grid_is_trivially_rainbow_free():
    d = GridDims(1, 6)
    c = Coloring(d, (1, 2, 3, 4, 5, 6), 6)
    assert is_rainbow_free(c, solution_index(d))
    # the same cells seen as [6] with a + b = c do admit a rainbow
    assert not is_rainbow_free(c, interval_index(6))
