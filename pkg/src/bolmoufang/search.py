"""Exhaustive loop enumeration and constrained backtracking model search.

Loops of order n correspond to reduced Latin squares (row 0 and column 0
fixed to the identity permutation), so both the enumerator and the finder
walk free cells in row-major order trying values in ascending order; the
first completed table is therefore the lexicographically least one.

Required laws prune the search: every assignment of a law's variables is
one *instance*, and each pending instance watches the first table cell its
evaluation gets stuck on.  Filling a watched cell re-evaluates the watcher,
which either fails the branch, moves to a deeper blocking cell, or
completes.  Watches go stale across backtracking, so completed tables are
always re-validated through the evaluator before being reported; forbidden
laws are only ever refuted on completed tables.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from .evaluate import Law, holds, law_for
from .loops import FiniteLoop, Witness

_EMPTY = -1
_OK, _BLOCKED, _VIOLATED = 0, 1, 2


def reduced_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All reduced Latin squares of order n, in lexicographic row-major order."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        yield ((0,),)
        return
    table = [[_EMPTY] * n for _ in range(n)]
    for j in range(n):
        table[0][j] = j
        table[j][0] = j
    full = (1 << n) - 1
    row_used = [1 << i for i in range(n)]
    col_used = [1 << i for i in range(n)]
    row_used[0] = col_used[0] = full
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        r, c = cells[k]
        avail = full & ~(row_used[r] | col_used[c])
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            table[r][c] = v
            row_used[r] |= 1 << v
            col_used[c] |= 1 << v
            yield from rec(k + 1)
            row_used[r] &= ~(1 << v)
            col_used[c] &= ~(1 << v)
            table[r][c] = _EMPTY

    yield from rec(0)


def enumerate_loops(n: int) -> Iterator[FiniteLoop]:
    """Every normalized loop of order n exactly once, lexicographically."""
    for table in reduced_tables(n):
        yield FiniteLoop(np.array(table))


@dataclass(frozen=True)
class SearchSpec:
    """What to look for: order, laws to satisfy, laws to violate."""

    order: int
    require: tuple[Law, ...] = ()
    forbid: tuple[Law, ...] = ()
    mode: str = "minimal"  # "minimal" or "first"
    threads: int = 1

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")
        if self.mode not in ("minimal", "first"):
            raise ValueError(f"mode must be 'minimal' or 'first', got {self.mode!r}")
        if self.threads < 1:
            raise ValueError(f"thread budget must be positive, got {self.threads}")
        object.__setattr__(self, "require", tuple(law_for(t) for t in self.require))
        object.__setattr__(self, "forbid", tuple(law_for(t) for t in self.forbid))
        overlap = {l.name for l in self.require} & {l.name for l in self.forbid}
        if overlap:
            raise ValueError(f"require and forbid overlap: {sorted(overlap)}")


@dataclass(frozen=True)
class Found:
    """A loop satisfying the spec, with one witness per forbidden law."""

    loop: FiniteLoop
    witnesses: dict[str, Witness] = field(default_factory=dict)


@dataclass(frozen=True)
class ExhaustedOrder:
    """No loop of this order satisfies the spec; node count for the record."""

    order: int
    nodes: int


SearchResult = Found | ExhaustedOrder


class _Instance:
    __slots__ = ("law", "env")

    def __init__(self, law: Law, env: tuple[int, ...]) -> None:
        self.law = law
        self.env = env


class _Search:
    """Backtracking state over a fixed set of free cells."""

    def __init__(self, n: int, require: Sequence[Law], row1=None, cells=None) -> None:
        self.n = n
        self.nodes = 0
        self.table = [[_EMPTY] * n for _ in range(n)]
        for j in range(n):
            self.table[0][j] = j
            self.table[j][0] = j
        full = (1 << n) - 1
        self.full = full
        self.row_used = [1 << i for i in range(n)]
        self.col_used = [1 << i for i in range(n)]
        self.row_used[0] = self.col_used[0] = full
        if row1 is not None:
            for c in range(1, n):
                v = row1[c]
                self.table[1][c] = v
                self.row_used[1] |= 1 << v
                self.col_used[c] |= 1 << v
        self.cells = cells if cells is not None else [
            (r, c) for r in range(1, n) for c in range(1, n)
        ]
        self.instances = [
            _Instance(law, env)
            for law in require
            for env in product(range(n), repeat=len(law.variables))
        ]
        self.waiting: dict[tuple[int, int], list[_Instance]] = defaultdict(list)
        self.feasible = self._init_watches()

    def _evaluate(self, inst: _Instance):
        table, env = self.table, inst.env
        results: list[int] = []
        last = None
        for a, b in inst.law.ops:
            av = env[a] if a >= 0 else results[-a - 1]
            bv = env[b] if b >= 0 else results[-b - 1]
            v = table[av][bv]
            if v == _EMPTY:
                return _BLOCKED, (av, bv)
            last = (av, bv)
            results.append(v)
        ls, rs = inst.law.lhs_slot, inst.law.rhs_slot
        lv = env[ls] if ls >= 0 else results[-ls - 1]
        rv = env[rs] if rs >= 0 else results[-rs - 1]
        return (_OK, last) if lv == rv else (_VIOLATED, None)

    def _init_watches(self) -> bool:
        self.waiting = defaultdict(list)
        for inst in self.instances:
            status, cell = self._evaluate(inst)
            if status == _VIOLATED:
                return False
            if status == _BLOCKED:
                self.waiting[cell].append(inst)
            # _OK here means decided by the fixed prefix alone: drop it.
        return True

    def _assign(self, r: int, c: int, v: int) -> bool:
        self.table[r][c] = v
        self.row_used[r] |= 1 << v
        self.col_used[c] |= 1 << v
        self.nodes += 1
        fired = self.waiting.pop((r, c), None)
        if not fired:
            return True
        keep = []
        moved = []
        for inst in fired:
            status, cell = self._evaluate(inst)
            if status == _VIOLATED:
                for other in reversed(moved):
                    self.waiting[other].pop()
                self.waiting[(r, c)] = fired
                self._unassign(r, c, v)
                return False
            if cell == (r, c):
                keep.append(inst)
            elif cell is not None:
                self.waiting[cell].append(inst)
                moved.append(cell)
        if keep:
            self.waiting[(r, c)] = keep
        return True

    def _unassign(self, r: int, c: int, v: int) -> None:
        self.table[r][c] = _EMPTY
        self.row_used[r] &= ~(1 << v)
        self.col_used[c] &= ~(1 << v)

    def leaves(self) -> Iterator[list[list[int]]]:
        """Complete tables under this state, in lexicographic order."""
        if not self.feasible:
            return
        cells = self.cells

        def rec(k: int):
            if k == len(cells):
                yield self.table
                return
            r, c = cells[k]
            avail = self.full & ~(self.row_used[r] | self.col_used[c])
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                if self._assign(r, c, v):
                    yield from rec(k + 1)
                    self._unassign(r, c, v)

        yield from rec(0)


def _check_candidate(table, spec: SearchSpec) -> Found | None:
    """Full evaluator re-validation of a completed table."""
    loop = FiniteLoop(np.array(table))
    if not all(holds(loop, law) for law in spec.require):
        return None  # watch gaps can leak candidates; never trust pruning
    witnesses: dict[str, Witness] = {}
    for law in spec.forbid:
        ev = holds(loop, law)
        if ev.holds:
            return None
        witnesses[law.name] = ev.witness
    return Found(loop, witnesses)


def _run_unit(spec: SearchSpec, row1) -> tuple[Found | None, int]:
    n = spec.order
    cells = [(r, c) for r in range(2, n) for c in range(1, n)]
    search = _Search(n, spec.require, row1=row1, cells=cells)
    for table in search.leaves():
        found = _check_candidate(table, spec)
        if found is not None:
            return found, search.nodes
    return None, search.nodes


def find(spec: SearchSpec) -> SearchResult:
    """Search order `spec.order` exhaustively; deterministic in minimal mode.

    Work splits into independent units, one per valid completion of row 1;
    units are generated and resolved in lexicographic order, so the first
    hit is the least satisfying table.
    """
    n = spec.order
    if n == 1:
        found = _check_candidate([[0]], spec)
        return found if found is not None else ExhaustedOrder(1, 0)

    gen = _Search(n, spec.require, cells=[(1, c) for c in range(1, n)])
    units = (list(table[1]) for table in gen.leaves())
    total_nodes = 0

    if spec.threads == 1:
        for row1 in units:
            found, nodes = _run_unit(spec, row1)
            total_nodes += nodes
            if found is not None:
                return found
        return ExhaustedOrder(n, total_nodes + gen.nodes)

    with ThreadPoolExecutor(max_workers=spec.threads) as pool:
        pending: list = []
        dry = False

        def top_up() -> None:
            nonlocal dry
            while not dry and len(pending) < 2 * spec.threads:
                row1 = next(units, None)
                if row1 is None:
                    dry = True
                    return
                pending.append(pool.submit(_run_unit, spec, row1))

        top_up()
        while pending:
            found, nodes = pending.pop(0).result()
            total_nodes += nodes
            if found is not None:
                return found
            top_up()
    return ExhaustedOrder(n, total_nodes + gen.nodes)


def find_minimal(
    require: Sequence,
    forbid: Sequence,
    max_order: int = 16,
    mode: str = "minimal",
    threads: int = 1,
) -> Found | None:
    """First order in 1..max_order admitting a model, or None if none does."""
    if max_order < 1:
        raise ValueError(f"order cap must be positive, got {max_order}")
    for n in range(1, max_order + 1):
        result = find(SearchSpec(n, tuple(require), tuple(forbid), mode, threads))
        if isinstance(result, Found):
            return result
    return None
