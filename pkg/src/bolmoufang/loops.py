"""Finite loops as normalized Cayley tables.

A loop of order n is stored as an n x n table over 0..n-1 whose rows and
columns are permutations (a Latin square) and whose element 0 is two-sided
neutral.  Left and right division tables are precomputed since the identity
evaluator and the inverse-property predicates hit them in inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np


class NotLatinError(ValueError):
    """Some row or column of the table repeats an element."""


class NoNeutralError(ValueError):
    """The table has no two-sided neutral element."""


@dataclass(frozen=True)
class Witness:
    """A variable assignment at which an identity fails, with both side values."""

    identity: str
    x: int
    y: int | None
    z: int | None
    lhs_value: int
    rhs_value: int

    @property
    def assignment(self) -> tuple[int, ...]:
        return tuple(v for v in (self.x, self.y, self.z) if v is not None)

    def __str__(self) -> str:
        vars_ = " ".join(f"{n}={v}" for n, v in zip("xyz", self.assignment))
        return f"{self.identity} fails at {vars_}: lhs={self.lhs_value} rhs={self.rhs_value}"


class FiniteLoop:
    """Immutable Cayley table with neutral 0 and derived division tables."""

    __slots__ = ("order", "table", "left_div", "right_div")

    def __init__(self, table) -> None:
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.size == 0:
            raise NotLatinError(f"table must be square and nonempty, got shape {t.shape}")
        n = t.shape[0]
        ref = np.arange(n)
        if not ((np.sort(t, axis=1) == ref).all() and (np.sort(t, axis=0) == ref[:, None]).all()):
            raise NotLatinError("rows and columns must each be a permutation of 0..n-1")
        if not ((t[0] == ref).all() and (t[:, 0] == ref).all()):
            raise NoNeutralError("element 0 is not two-sided neutral (use from_table to relabel)")
        self.order = n
        self.table = t
        self.left_div = np.argsort(t, axis=1)  # left_div[a, b] = a \ b
        self.right_div = np.argsort(t, axis=0)  # right_div[b, a] = b / a
        for arr in (self.table, self.left_div, self.right_div):
            arr.setflags(write=False)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def ldiv(self, a: int, b: int) -> int:
        """The unique c with a * c = b."""
        return int(self.left_div[a, b])

    def rdiv(self, b: int, a: int) -> int:
        """The unique c with c * a = b."""
        return int(self.right_div[b, a])

    def left_inverse(self, a: int) -> int:
        """e / a."""
        return self.rdiv(0, a)

    def right_inverse(self, a: int) -> int:
        """a \\ e."""
        return self.ldiv(a, 0)

    def opposite(self) -> "FiniteLoop":
        """The loop with transposed table; satisfies exactly the duals."""
        return FiniteLoop(self.table.T)

    def is_associative(self) -> bool:
        t = self.table
        x, y, z = np.indices((self.order,) * 3)
        return bool((t[t[x, y], z] == t[x, t[y, z]]).all())

    def is_commutative(self) -> bool:
        return bool((self.table == self.table.T).all())

    def has_left_inverse_property(self) -> bool:
        """e/x * (x*y) = y for all x, y."""
        t = self.table
        linv = self.right_div[0]
        return bool((t[linv[:, None], t] == np.arange(self.order)[None, :]).all())

    def has_right_inverse_property(self) -> bool:
        """(y*x) * x\\e = y for all x, y."""
        t = self.table
        rinv = self.left_div[:, 0]
        x, y = np.indices((self.order,) * 2)
        return bool((t[t[y, x], rinv[x]] == y).all())

    def has_two_sided_inverses(self) -> bool:
        """e/x = x\\e for all x."""
        return bool((self.right_div[0] == self.left_div[:, 0]).all())

    def powers_associative_upto(self, k: int) -> bool:
        """All bracketings of every m-fold power agree, for every m <= k."""
        if k < 3:
            raise ValueError(f"degree bound must be at least 3, got {k}")
        for a in range(self.order):
            values: list[set[int]] = [set(), {a}]
            for m in range(2, k + 1):
                vm = {
                    self.mul(u, v)
                    for s in range(1, m)
                    for u in values[s]
                    for v in values[m - s]
                }
                if len(vm) > 1:
                    return False
                values.append(vm)
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteLoop)
            and self.order == other.order
            and bool((self.table == other.table).all())
        )

    def __hash__(self) -> int:
        return hash((self.order, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteLoop(order={self.order})"

    def __str__(self) -> str:
        return format_loop(self)


def from_table(rows) -> FiniteLoop:
    """Validate a Cayley table, relabeling elements so the neutral becomes 0."""
    t = np.asarray(rows, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.size == 0:
        raise NotLatinError(f"table must be square and nonempty, got shape {t.shape}")
    n = t.shape[0]
    ref = np.arange(n)
    if not ((np.sort(t, axis=1) == ref).all() and (np.sort(t, axis=0) == ref[:, None]).all()):
        raise NotLatinError("rows and columns must each be a permutation of 0..n-1")
    neutral = [e for e in range(n) if (t[e] == ref).all() and (t[:, e] == ref).all()]
    if not neutral:
        raise NoNeutralError("no two-sided neutral element")
    e = neutral[0]
    if e != 0:
        perm = ref.copy()
        perm[0], perm[e] = e, 0  # swap the labels 0 and e
        t = perm[t[perm][:, perm]]
    return FiniteLoop(t)


def parse_loop_text(text: str) -> FiniteLoop:
    """Parse the .loop format: order on the first line, then the table rows."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("empty .loop input")
    try:
        n = int(lines[0])
        rows = [[int(v) for v in line.split()] for line in lines[1 : n + 1]]
    except ValueError as exc:
        raise ValueError(f"malformed .loop input: {exc}") from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} entries")
    return from_table(rows)


def format_loop(loop: FiniteLoop, comment: str | None = None) -> str:
    """Render a loop in the .loop format."""
    width = len(str(loop.order - 1))
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(str(loop.order))
    for row in loop.table:
        out.append(" ".join(f"{v:>{width}}" for v in row))
    return "\n".join(out) + "\n"


def read_loop_file(path) -> FiniteLoop:
    return parse_loop_text(Path(path).read_text())


def write_loop_file(path, loop: FiniteLoop, comment: str | None = None) -> None:
    Path(path).write_text(format_loop(loop, comment))
