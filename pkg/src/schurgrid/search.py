"""Exact decision of rainbow-free r-coloring existence, and rb computation.

The engine walks restricted growth strings over a fixed cell order, so each
color-permutation class is visited exactly once. A branch dies as soon as
an assignment completes a rainbow triple, or when the cells left cannot
cover the colors still unused. The incident-triple lists per cell are
precomputed; the inner loop touches only the triples completed by the cell
just assigned.

Multi-worker runs split the tree at a shallow depth into independent
prefix tasks executed in separate processes; exhaustion requires all tasks
to finish, witness discovery cancels the rest.
"""

from __future__ import annotations

import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Iterator, Optional

from .certificates import ENGINE_VERSION, INTERVAL_ENGINE_VERSION, Certificate
from .coloring import Coloring
from .constructions import closed_form_rb_grid, closed_form_rb_interval
from .grid import GridDims
from .solutions import SolutionIndex, interval_index, solution_index


class BudgetExceeded(Exception):
    """Search stopped by a node or time cap; the result is indeterminate."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget exceeded after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    threads: int = 1


_NO_BUDGET = SearchBudget()
_FLUSH_EVERY = 4096


def assignment_order(dims: GridDims, order: str = "row") -> list[int]:
    """Flat cell ids in assignment order. "row" is plain row-major;
    "diagonal" colors the main diagonal first, then diagonals outward,
    which triggers main-diagonal contradictions early."""
    if order == "row":
        return list(range(dims.cell_count))
    if order == "diagonal":
        from .grid import diagonal_cells

        ks = sorted(range(1, dims.diagonal_count + 1), key=lambda k: (abs(k - dims.m), k))
        return [dims.flat(p) for k in ks for p in diagonal_cells(k, dims)]
    raise ValueError(f"unknown assignment order {order!r}")


def _build_checks(index: SolutionIndex, order: list[int]) -> list[list[tuple[int, int]]]:
    """checks[p] lists the (flat, flat) partner cells of every non-degenerate
    triple completed by the cell assigned at position p."""
    dims = index.dims
    pos_of = {cell: p for p, cell in enumerate(order)}
    checks: list[list[tuple[int, int]]] = [[] for _ in order]
    for t in index.triples():
        if t.degenerate:
            continue
        cells = [dims.flat(t.alpha), dims.flat(t.beta), dims.flat(t.gamma)]
        positions = [pos_of[x] for x in cells]
        last = max(positions)
        others = [c for c, p in zip(cells, positions) if p != last]
        checks[last].append((others[0], others[1]))
    return checks


def _stream(
    order: list[int],
    checks: list[list[tuple[int, int]]],
    r: int,
    prefix: tuple[int, ...],
    stop_depth: Optional[int],
    counter: list[int],
    max_nodes: Optional[int],
    deadline: Optional[float],
) -> Iterator[tuple[int, ...]]:
    """Depth-first walk over canonical colorings. Yields full flat color
    tuples, or consistent prefixes of length stop_depth when set."""
    ncells = len(order)
    colors = [0] * (max(order) + 1)
    used_at = [0] * (ncells + 1)
    choice = [1] * (ncells + 1)
    for p, col in enumerate(prefix):
        colors[order[p]] = col
        used_at[p + 1] = max(used_at[p], col)
    base = len(prefix)
    pos = base
    choice[pos] = 1
    target = ncells if stop_depth is None else stop_depth
    nodes_local = 0
    try:
        while pos >= base:
            if pos == target:
                if stop_depth is not None:
                    yield tuple(colors[order[p]] for p in range(pos))
                elif used_at[pos] == r:
                    yield tuple(colors)
                pos -= 1
                continue
            used = used_at[pos]
            c = choice[pos]
            limit = used + 1 if used < r else r
            placed = False
            while c <= limit:
                newused = used + 1 if c > used else used
                if r - newused > ncells - pos - 1:
                    c += 1
                    continue
                cell = order[pos]
                colors[cell] = c
                nodes_local += 1
                ok = True
                for f1, f2 in checks[pos]:
                    c1 = colors[f1]
                    c2 = colors[f2]
                    if c1 != c2 and c1 != c and c2 != c:
                        ok = False
                        break
                if ok:
                    choice[pos] = c + 1
                    pos += 1
                    used_at[pos] = newused
                    choice[pos] = 1
                    placed = True
                    break
                c += 1
            if not placed:
                pos -= 1
            if nodes_local >= _FLUSH_EVERY:
                counter[0] += nodes_local
                nodes_local = 0
                if max_nodes is not None and counter[0] >= max_nodes:
                    raise BudgetExceeded(counter[0] )
                if deadline is not None and time.monotonic() > deadline:
                    raise BudgetExceeded(counter[0])
    finally:
        counter[0] += nodes_local


def _index_for(dims: GridDims, interval: bool) -> SolutionIndex:
    return interval_index(dims.n) if interval else solution_index(dims)


def _engine(interval: bool) -> str:
    return INTERVAL_ENGINE_VERSION if interval else ENGINE_VERSION


def _subtree_worker(args) -> tuple[str, Optional[tuple[int, ...]], int]:
    order, checks, r, prefix, max_nodes, seconds_left = args
    counter = [0]
    deadline = time.monotonic() + seconds_left if seconds_left is not None else None
    gen = _stream(order, checks, r, prefix, None, counter, max_nodes, deadline)
    try:
        for cells in gen:
            gen.close()
            return ("witness", cells, counter[0])
        return ("exhausted", None, counter[0])
    except BudgetExceeded:
        return ("budget", None, counter[0])


def _run_parallel(
    order: list[int],
    checks: list[list[tuple[int, int]]],
    r: int,
    budget: SearchBudget,
) -> tuple[Optional[tuple[int, ...]], int]:
    """Returns (witness cells or None, nodes). Raises BudgetExceeded if any
    subtree was cut before a witness appeared."""
    ncells = len(order)
    counter = [0]
    depth = 1
    prefixes: list[tuple[int, ...]] = [()]
    while depth < ncells and len(prefixes) < 4 * budget.threads:
        gen = _stream(order, checks, r, (), depth, counter, None, None)
        prefixes = list(gen)
        depth += 1
    if not prefixes:
        return None, counter[0]
    seconds_left = budget.max_seconds
    nodes = counter[0]
    witness: Optional[tuple[int, ...]] = None
    cut = False
    with ProcessPoolExecutor(max_workers=budget.threads) as pool:
        futures = {
            pool.submit(
                _subtree_worker, (order, checks, r, pre, budget.max_nodes, seconds_left)
            )
            for pre in prefixes
        }
        pending = set(futures)
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                status, cells, sub_nodes = fut.result()
                nodes += sub_nodes
                if status == "witness" and witness is None:
                    witness = cells
                elif status == "budget":
                    cut = True
            if witness is not None:
                for fut in pending:
                    fut.cancel()
                break
    if witness is None and cut:
        raise BudgetExceeded(nodes)
    return witness, nodes


def exists_rainbow_free(
    dims: GridDims,
    r: int,
    budget: Optional[SearchBudget] = None,
    order: str = "row",
    interval: bool = False,
) -> Certificate:
    """Witness certificate with a rainbow-free exact r-coloring, or an
    exhaustion certificate stating none exists. Raises BudgetExceeded when
    the budget cut the search before either could be concluded."""
    budget = budget or _NO_BUDGET
    cap = dims.cell_count
    if r == cap + 1:
        # no exact coloring uses more colors than cells, so exhaustion is
        # vacuously true (the convention boundary r = |S| + 1)
        return Certificate("exhaustion", dims, r, None, 0, _engine(interval))
    if not 1 <= r <= cap:
        raise ValueError(f"color count {r} outside [1, {cap + 1}]")
    index = _index_for(dims, interval)
    cell_order = assignment_order(dims, order)
    checks = _build_checks(index, cell_order)
    if budget.threads > 1:
        witness, nodes = _run_parallel(cell_order, checks, r, budget)
    else:
        counter = [0]
        deadline = (
            time.monotonic() + budget.max_seconds if budget.max_seconds else None
        )
        gen = _stream(cell_order, checks, r, (), None, counter, budget.max_nodes, deadline)
        witness = None
        for cells in gen:
            witness = cells
            gen.close()
            break
        nodes = counter[0]
    if witness is not None:
        coloring = Coloring(dims, witness, r)
        return Certificate("witness", dims, r, coloring, nodes, _engine(interval))
    return Certificate("exhaustion", dims, r, None, nodes, _engine(interval))


def enumerate_rainbow_free(
    dims: GridDims,
    r: int,
    budget: Optional[SearchBudget] = None,
    interval: bool = False,
) -> Iterator[Coloring]:
    """Every canonical rainbow-free exact r-coloring, each class once.
    A budget cut raises BudgetExceeded mid-stream (truncation marker)."""
    budget = budget or _NO_BUDGET
    cap = dims.cell_count
    if not 1 <= r <= cap:
        raise ValueError(f"color count {r} outside [1, {cap}]")
    index = _index_for(dims, interval)
    cell_order = assignment_order(dims, "row")
    checks = _build_checks(index, cell_order)
    counter = [0]
    deadline = time.monotonic() + budget.max_seconds if budget.max_seconds else None
    for cells in _stream(
        cell_order, checks, r, (), None, counter, budget.max_nodes, deadline
    ):
        yield Coloring(dims, cells, r)


def _partitions_into_blocks(n_items: int, r: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of n_items ordered items into exactly r blocks,
    as restricted growth strings, with no search pruning."""
    assign: list[int] = []

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == n_items:
            if used == r:
                yield tuple(assign)
            return
        for b in range(1, min(used + 1, r) + 1):
            assign.append(b)
            yield from rec(i + 1, used + 1 if b > used else used)
            assign.pop()

    yield from rec(0, 0)


def naive_oracle(dims: GridDims, r: int, interval: bool = False) -> Certificate:
    """Reference decision by unpruned enumeration of all exact r-colorings
    (set partitions into r blocks), each checked by a plain triple scan.
    Test-only; hard-capped at 10 cells."""
    cap = dims.cell_count
    if cap > 10:
        raise ValueError(f"naive oracle capped at 10 cells, got {cap}")
    if not 1 <= r <= cap:
        raise ValueError(f"color count {r} outside [1, {cap}]")
    index = _index_for(dims, interval)
    trips = [
        (dims.flat(t.alpha), dims.flat(t.beta), dims.flat(t.gamma))
        for t in index.triples()
        if not t.degenerate
    ]
    examined = 0
    for cells in _partitions_into_blocks(cap, r):
        examined += 1
        rainbow = False
        for a, b, g in trips:
            ca, cb, cg = cells[a], cells[b], cells[g]
            if ca != cb and ca != cg and cb != cg:
                rainbow = True
                break
        if not rainbow:
            coloring = Coloring(dims, cells, r)
            return Certificate("witness", dims, r, coloring, examined, _engine(interval))
    return Certificate("exhaustion", dims, r, None, examined, _engine(interval))


@dataclass
class RbResult:
    dims: GridDims
    rb_value: Optional[int]
    witness: Optional[Certificate]  # for rb - 1
    exhaustion: Optional[Certificate]  # for rb
    complete: bool = True
    lo: Optional[int] = None  # bracketing bounds when the budget cut the run
    hi: Optional[int] = None
    interval: bool = False


def _rb_scan(
    dims: GridDims,
    budget: Optional[SearchBudget],
    interval: bool,
    guess: int,
    fetch=None,
    record=None,
) -> RbResult:
    """fetch(r) may supply a precomputed Certificate (cache hook); record(cert)
    is called for every freshly computed one."""
    cap = dims.cell_count
    certs: dict[int, Certificate] = {}

    def cert_at(rr: int) -> Certificate:
        if rr not in certs:
            cached = fetch(rr) if fetch is not None else None
            if cached is not None:
                certs[rr] = cached
            elif rr > cap:
                # no exact coloring with more colors than cells exists, so
                # the exhaustion claim is vacuously true (convention case)
                certs[rr] = Certificate("exhaustion", dims, rr, None, 0, _engine(interval))
            else:
                certs[rr] = exists_rainbow_free(dims, rr, budget, interval=interval)
                if record is not None:
                    record(certs[rr])
        return certs[rr]

    r = max(2, min(guess, cap + 1))
    try:
        if cert_at(r).kind == "witness":
            while cert_at(r).kind == "witness":
                r += 1
        else:
            while r > 2 and cert_at(r - 1).kind == "exhaustion":
                r -= 1
        witness = cert_at(r - 1)
        assert witness.kind == "witness", "monotonicity violated by the engine"
        return RbResult(dims, r, witness, cert_at(r), True, r, r, interval)
    except BudgetExceeded:
        lo = max((rr + 1 for rr, c in certs.items() if c.kind == "witness"), default=2)
        hi = min((rr for rr, c in certs.items() if c.kind == "exhaustion"), default=cap + 1)
        wit = certs.get(lo - 1) if certs.get(lo - 1, None) and certs[lo - 1].kind == "witness" else None
        exh = certs.get(hi) if certs.get(hi, None) and certs[hi].kind == "exhaustion" else None
        return RbResult(dims, None, wit, exh, False, lo, hi, interval)


def rb_search(
    dims: GridDims,
    budget: Optional[SearchBudget] = None,
    fetch=None,
    record=None,
) -> RbResult:
    """Exact rainbow number of the grid, with witness and exhaustion
    certificates. Scans r outward from the closed-form prediction."""
    return _rb_scan(dims, budget, False, closed_form_rb_grid(dims), fetch, record)


def rb_search_interval(
    n: int,
    budget: Optional[SearchBudget] = None,
    fetch=None,
    record=None,
) -> RbResult:
    """Exact rainbow number of [n] for a + b = c, via the 1-by-n carrier."""
    return _rb_scan(
        GridDims(1, n), budget, True, closed_form_rb_interval(n), fetch, record
    )
