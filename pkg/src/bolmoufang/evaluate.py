"""Decide whether a finite loop satisfies an identity or a named variety's law.

Evaluation is exhaustive over all assignments of the law's variables (n^3
for the three-variable identities) and vectorized with numpy.  On failure
the lexicographically first witness is reported, so golden tests stay
deterministic.  Each side of a law compiles once into a short sequence of
product instructions; shared subterms are computed once per assignment
grid, which matters when profiling a loop against all 60 identities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .loops import FiniteLoop, Witness
from .terms import (
    App,
    Identity,
    IdentityName,
    PATTERNS,
    Term,
    Var,
    _build,
    _parse_term,
    decode_name,
    encode_name,
    enumerate_all,
    leaves,
)

ALL_NAMES: tuple[IdentityName, ...] = tuple(enumerate_all())
NAME_INDEX = {str(n): i for i, n in enumerate(ALL_NAMES)}


class Variety(enum.Enum):
    """The 15 equational classes the 60 identities turn out to define."""

    GR = "GR"
    EL = "EL"
    ML = "ML"
    LB = "LB"
    RB = "RB"
    CL = "CL"
    LC = "LC"
    RC = "RC"
    LA = "LA"
    RA = "RA"
    FL = "FL"
    LN = "LN"
    MN = "MN"
    RN = "RN"
    PA3 = "3PA"

    def __str__(self) -> str:
        return self.value


VARIETY_ORDER: tuple[Variety, ...] = tuple(Variety)
VARIETY_INDEX = {v: i for i, v in enumerate(VARIETY_ORDER)}

# Defining laws.  Ten of the varieties are defined by one of the 60
# identities; the other five use shorter laws in fewer variables.
VARIETY_LAW_STRINGS: dict[Variety, str] = {
    Variety.GR: "x(yz)=(xy)z",
    Variety.EL: "x(y(zx))=((xy)z)x",
    Variety.ML: "(xy)(zx)=(x(yz))x",
    Variety.LB: "x(y(xz))=(x(yx))z",
    Variety.RB: "x((yz)y)=((xy)z)y",
    Variety.CL: "x(y(yz))=((xy)y)z",
    Variety.LC: "(xx)(yz)=(x(xy))z",
    Variety.RC: "x((yz)z)=(xy)(zz)",
    Variety.LA: "x(xy)=(xx)y",
    Variety.RA: "x(yy)=(xy)y",
    Variety.FL: "x(yx)=(xy)x",
    Variety.LN: "(xx)(yz)=((xx)y)z",
    Variety.MN: "x((yy)z)=(x(yy))z",
    Variety.RN: "x(y(zz))=(xy)(zz)",
    Variety.PA3: "x(xx)=(xx)x",
}

VARIETY_IDENTITY: dict[Variety, IdentityName] = {
    Variety.EL: IdentityName("D", 1, 5),
    Variety.ML: IdentityName("D", 3, 4),
    Variety.LB: IdentityName("B", 1, 4),
    Variety.RB: IdentityName("E", 2, 5),
    Variety.CL: IdentityName("C", 1, 5),
    Variety.LC: IdentityName("A", 3, 4),
    Variety.RC: IdentityName("F", 2, 3),
    Variety.LN: IdentityName("A", 3, 5),
    Variety.MN: IdentityName("C", 2, 4),
    Variety.RN: IdentityName("F", 1, 3),
}

DUAL_VARIETY: dict[Variety, Variety] = {
    Variety.GR: Variety.GR, Variety.EL: Variety.EL, Variety.ML: Variety.ML,
    Variety.CL: Variety.CL, Variety.FL: Variety.FL, Variety.MN: Variety.MN,
    Variety.PA3: Variety.PA3, Variety.LB: Variety.RB, Variety.RB: Variety.LB,
    Variety.LC: Variety.RC, Variety.RC: Variety.LC, Variety.LA: Variety.RA,
    Variety.RA: Variety.LA, Variety.LN: Variety.RN, Variety.RN: Variety.LN,
}


@dataclass(frozen=True)
class Law:
    """A pair of terms (lhs = rhs) plus a display tag, compiled for evaluation.

    Operand encoding in ops: k >= 0 is the k-th distinct variable, k < 0 is
    the result of instruction -k-1.  The two slots name each side's value.
    """

    name: str
    lhs: Term
    rhs: Term
    variables: tuple[str, ...]
    ops: tuple[tuple[int, int], ...]
    lhs_slot: int
    rhs_slot: int

    @classmethod
    def from_terms(cls, name: str, lhs: Term, rhs: Term) -> "Law":
        variables = []
        for v in leaves(lhs) + leaves(rhs):
            if v not in variables:
                variables.append(v)
        ops: list[tuple[int, int]] = []
        memo: dict[Term, int] = {}

        def compile_term(t: Term) -> int:
            if isinstance(t, Var):
                return variables.index(t.name)
            if t in memo:
                return memo[t]
            a, b = compile_term(t.left), compile_term(t.right)
            ops.append((a, b))
            memo[t] = -len(ops)
            return memo[t]

        ls, rs = compile_term(lhs), compile_term(rhs)
        return cls(name, lhs, rhs, tuple(variables), tuple(ops), ls, rs)

    @classmethod
    def from_identity(cls, ident: Identity, name: str | None = None) -> "Law":
        return cls.from_terms(name or str(encode_name(ident)), ident.lhs, ident.rhs)

    @classmethod
    def from_name(cls, name: IdentityName) -> "Law":
        return cls.from_identity(decode_name(name), str(name))

    @classmethod
    def from_string(cls, name: str, text: str) -> "Law":
        lhs, rhs = text.split("=")
        return cls.from_terms(name, _parse_term(lhs), _parse_term(rhs))

    def __str__(self) -> str:
        return f"{self.lhs}={self.rhs}"


VARIETY_LAWS: dict[Variety, Law] = {
    v: Law.from_string(v.value, s) for v, s in VARIETY_LAW_STRINGS.items()
}


def law_for(target) -> Law:
    """Coerce an Identity, IdentityName, Variety, or name string into a Law."""
    if isinstance(target, Law):
        return target
    if isinstance(target, Variety):
        return VARIETY_LAWS[target]
    if isinstance(target, Identity):
        return Law.from_identity(target)
    if isinstance(target, IdentityName):
        return Law.from_name(target)
    if isinstance(target, str):
        try:
            return VARIETY_LAWS[Variety(target.upper())]
        except ValueError:
            return Law.from_name(IdentityName.from_string(target))
    raise TypeError(f"cannot interpret {target!r} as a law")


def _eval_sides(table: np.ndarray, law: Law) -> tuple[np.ndarray, np.ndarray]:
    """Both side values over the flattened n^k assignment grid."""
    n = table.shape[0]
    k = len(law.variables)
    grids = np.indices((n,) * k).reshape(k, -1)
    results: list[np.ndarray] = []

    def src(s: int) -> np.ndarray:
        return grids[s] if s >= 0 else results[-s - 1]

    for a, b in law.ops:
        results.append(table[src(a), src(b)])
    return src(law.lhs_slot), src(law.rhs_slot)


@dataclass(frozen=True)
class Evaluation:
    """Outcome of checking one law on one loop; falsy when the law fails."""

    holds: bool
    witness: Witness | None

    def __bool__(self) -> bool:
        return self.holds


def holds(loop: FiniteLoop, target) -> Evaluation:
    """Check a law on every assignment; report the lexicographically first failure."""
    law = law_for(target)
    lhs, rhs = _eval_sides(loop.table, law)
    diff = np.flatnonzero(lhs != rhs)
    if diff.size == 0:
        return Evaluation(True, None)
    first = int(diff[0])
    assignment = np.unravel_index(first, (loop.order,) * len(law.variables))
    xyz = list(int(v) for v in assignment) + [None, None]
    return Evaluation(
        False,
        Witness(
            identity=law.name,
            x=xyz[0],
            y=xyz[1],
            z=xyz[2],
            lhs_value=int(lhs[first]),
            rhs_value=int(rhs[first]),
        ),
    )


def evaluate_at(loop: FiniteLoop, target, assignment: tuple[int, ...]) -> tuple[int, int]:
    """Both side values of a law at one concrete assignment."""
    law = law_for(target)
    if len(assignment) != len(law.variables):
        raise ValueError(f"{law.name} takes {len(law.variables)} variables")
    results: list[int] = []

    def src(s: int) -> int:
        return assignment[s] if s >= 0 else results[-s - 1]

    for a, b in law.ops:
        results.append(loop.mul(src(a), src(b)))
    return src(law.lhs_slot), src(law.rhs_slot)


def satisfies_variety(loop: FiniteLoop, variety: Variety | str) -> bool:
    """Whether the loop lies in the variety (its defining law holds everywhere)."""
    v = variety if isinstance(variety, Variety) else Variety(variety)
    return holds(loop, VARIETY_LAWS[v]).holds


@dataclass(frozen=True)
class Profile:
    """Satisfaction bits of one loop over all 60 identities and 15 varieties."""

    loop_id: str
    identity_bits: np.ndarray  # (60,) bool, aligned with ALL_NAMES
    variety_bits: np.ndarray  # (15,) bool, aligned with VARIETY_ORDER

    def holds_identity(self, name: IdentityName | str) -> bool:
        key = str(name if isinstance(name, IdentityName) else IdentityName.from_string(name))
        return bool(self.identity_bits[NAME_INDEX[key]])

    def holds_variety(self, variety: Variety | str) -> bool:
        v = variety if isinstance(variety, Variety) else Variety(variety)
        return bool(self.variety_bits[VARIETY_INDEX[v]])

    def satisfied_identities(self) -> list[str]:
        return [str(n) for n, b in zip(ALL_NAMES, self.identity_bits) if b]

    def satisfied_varieties(self) -> list[str]:
        return [v.value for v, b in zip(VARIETY_ORDER, self.variety_bits) if b]


# Side value of bracketing k, given the three pairwise leaf products.
# Bracketings of a word w0 w1 w2 w3:
#   1: w0(w1(w2 w3))   2: w0((w1 w2)w3)   3: (w0 w1)(w2 w3)
#   4: (w0(w1 w2))w3   5: ((w0 w1)w2)w3
def _pattern_sides(tables: np.ndarray, rows: np.ndarray, pattern: tuple[int, ...], grids) -> list:
    w = [grids[v] for v in pattern]

    def prod(a, b):
        if a.ndim == 1 and b.ndim == 1:
            return tables[:, a, b]
        if a.ndim == 1:
            a = np.broadcast_to(a, b.shape)
        if b.ndim == 1:
            b = np.broadcast_to(b, a.shape)
        return tables[rows, a, b]

    p01, p12, p23 = prod(w[0], w[1]), prod(w[1], w[2]), prod(w[2], w[3])
    return [
        prod(w[0], prod(w[1], p23)),
        prod(w[0], prod(p12, w[3])),
        prod(p01, p23),
        prod(prod(w[0], p12), w[3]),
        prod(prod(p01, w[2]), w[3]),
    ]


def profile_tables(tables: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Identity and variety bits for a stack of Cayley tables of one order.

    Takes an (m, n, n) array; returns ((m, 60), (m, 15)) boolean arrays.
    The five bracketings of each variable pattern are evaluated once and
    compared pairwise, so each table costs well under 60 full evaluations.
    """
    tables = np.asarray(tables)
    m, n = tables.shape[0], tables.shape[1]
    rows = np.arange(m)[:, None]
    grids = np.indices((n, n, n)).reshape(3, -1)
    identity_bits = np.empty((m, 60), dtype=bool)
    col = 0
    for pattern in PATTERNS.values():
        sides = _pattern_sides(tables, rows, pattern, grids)
        for i in range(5):
            for j in range(i + 1, 5):
                identity_bits[:, col] = (sides[i] == sides[j]).all(axis=1)
                col += 1

    variety_bits = np.empty((m, 15), dtype=bool)
    x, y, z = grids
    assoc_l = tables[rows, tables[:, x, y], np.broadcast_to(z, (m, z.size))]
    assoc_r = tables[rows, np.broadcast_to(x, (m, x.size)), tables[:, y, z]]
    pair = np.indices((n, n)).reshape(2, -1)
    px, py = pair
    diag = np.arange(n)
    for idx, v in enumerate(VARIETY_ORDER):
        if v in VARIETY_IDENTITY:
            variety_bits[:, idx] = identity_bits[:, NAME_INDEX[str(VARIETY_IDENTITY[v])]]
        elif v is Variety.GR:
            variety_bits[:, idx] = (assoc_l == assoc_r).all(axis=1)
        elif v is Variety.LA:
            variety_bits[:, idx] = (
                tables[rows, px, tables[:, px, py]] == tables[rows, tables[:, px, px], py]
            ).all(axis=1)
        elif v is Variety.RA:
            variety_bits[:, idx] = (
                tables[rows, px, tables[:, py, py]] == tables[rows, tables[:, px, py], py]
            ).all(axis=1)
        elif v is Variety.FL:
            variety_bits[:, idx] = (
                tables[rows, px, tables[:, py, px]] == tables[rows, tables[:, px, py], px]
            ).all(axis=1)
        else:  # 3PA
            variety_bits[:, idx] = (
                tables[rows, diag, tables[:, diag, diag]]
                == tables[rows, tables[:, diag, diag], diag]
            ).all(axis=1)
    return identity_bits, variety_bits


def profile(loop: FiniteLoop, loop_id: str = "") -> Profile:
    """Satisfaction bits of one loop over the 60 identities and 15 varieties."""
    identity_bits, variety_bits = profile_tables(loop.table[None, :, :])
    return Profile(loop_id, identity_bits[0], variety_bits[0])
