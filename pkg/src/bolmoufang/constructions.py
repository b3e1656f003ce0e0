"""Builders for the concrete loops the classification rests on.

Small groups (cyclic, dihedral, symmetric on 3 points, direct products),
the Chein double M(G,2), and a catalog of ten reference loops: the eight
numbered counterexamples 6.1-6.8 distinguishing the varieties, plus the
two order-5/6 curiosities 3.1 and 3.2 about power associativity and
inverse properties.  Each catalog entry carries its claims as data so the
whole catalog can be re-verified mechanically (`reproduce examples` in the
CLI).
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import product

import numpy as np

from .evaluate import Variety
from .loops import FiniteLoop, parse_loop_text


class FiniteGroup(FiniteLoop):
    """A finite loop whose table is associative."""

    def __init__(self, table) -> None:
        super().__init__(table)
        if not self.is_associative():
            raise ValueError("table is not associative")

    def inverse(self, a: int) -> int:
        return self.right_inverse(a)


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with the usual addition table."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    i = np.arange(n)
    return FiniteGroup((i[:, None] + i[None, :]) % n)


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order: rotations first, then reflections.

    Element a*m + i is s^a r^i; the product rule (s^a r^i)(s^b r^j) =
    s^(a+b) r^(j + (-1)^b i) fixes one concrete presentation for good.
    """
    if order < 2 or order % 2:
        raise ValueError(f"dihedral groups have even order >= 2, got {order}")
    m = order // 2
    table = np.zeros((order, order), dtype=np.int64)
    for a, i, b, j in product((0, 1), range(m), (0, 1), range(m)):
        rot = (j + i if b == 0 else j - i) % m
        table[a * m + i, b * m + j] = ((a + b) % 2) * m + rot
    return FiniteGroup(table)


def symmetric_group_3() -> FiniteGroup:
    """S3 with elements ordered as the lexicographic permutations of (0,1,2)."""
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    index = {p: k for k, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms
    ]
    return FiniteGroup(table)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs, flattened as a*|H| + b."""
    nh = h.order
    ga, gb = np.divmod(np.arange(g.order * nh), nh)
    table = g.table[np.ix_(ga, ga)] * nh + h.table[np.ix_(gb, gb)]
    return FiniteGroup(table)


def chein_double(group: FiniteGroup) -> FiniteLoop:
    """The Moufang loop M(G,2) of order 2|G| on pairs (g, bit).

    (g,0)(h,0) = (gh,0), (g,0)(h,1) = (hg,1), (g,1)(h,0) = (g h^-1, 1),
    (g,1)(h,1) = (h^-1 g, 0); pairs flatten to g + |G|*bit.  The double is
    associative exactly when G is abelian.
    """
    m = group.order
    g = group.table
    inv = np.array([group.inverse(a) for a in range(m)])
    table = np.zeros((2 * m, 2 * m), dtype=np.int64)
    table[:m, :m] = g
    table[:m, m:] = g.T + m
    table[m:, :m] = g[:, inv] + m
    table[m:, m:] = g[inv, :].T
    return FiniteLoop(table)


@dataclass(frozen=True)
class ExampleClaims:
    """Machine-checkable claims attached to one catalog loop."""

    order: int
    satisfies: tuple[Variety, ...] = ()
    violates: tuple[Variety, ...] = ()
    # (variety, assignment) pairs quoting a concrete failing instance
    violation_witnesses: tuple[tuple[Variety, tuple[int, ...]], ...] = ()
    two_sided_inverses: bool | None = None
    left_inverse_property: bool | None = None
    right_inverse_property: bool | None = None
    lip_witness: tuple[int, int] | None = None  # (x, y) with e/x * (x*y) != y
    rip_witness: tuple[int, int] | None = None  # (x, y) with (y*x) * x\e != y
    powers_associative: tuple[tuple[int, bool], ...] = ()  # (degree bound, expected)


EXAMPLE_IDS = ("3.1", "3.2", "6.1", "6.2", "6.3", "6.4", "6.5", "6.6", "6.7", "6.8")

CLAIMS: dict[str, ExampleClaims] = {
    "3.1": ExampleClaims(
        order=6,
        satisfies=(Variety.PA3,),
        powers_associative=((3, True), (4, False)),
    ),
    "3.2": ExampleClaims(
        order=5,
        two_sided_inverses=True,
        left_inverse_property=False,
        right_inverse_property=False,
        lip_witness=(1, 2),
        rip_witness=(1, 2),
    ),
    "6.1": ExampleClaims(
        order=16,
        satisfies=(Variety.EL,),
        violates=(Variety.GR,),
    ),
    "6.2": ExampleClaims(
        order=12,
        satisfies=(Variety.ML,),
        violates=(Variety.LN, Variety.MN),
    ),
    "6.3": ExampleClaims(
        order=12,
        satisfies=(Variety.CL,),
        violates=(Variety.FL, Variety.LB),
        violation_witnesses=((Variety.FL, (8, 9)), (Variety.LB, (5, 8, 5))),
    ),
    "6.4": ExampleClaims(
        order=8,
        satisfies=(Variety.LB,),
        violates=(Variety.FL, Variety.RA),
        violation_witnesses=((Variety.FL, (1, 2)), (Variety.RA, (6, 4))),
    ),
    "6.5": ExampleClaims(
        order=12,
        satisfies=(Variety.LC,),
        violates=(Variety.RN, Variety.RA),
        violation_witnesses=((Variety.RN, (1, 2, 3)), (Variety.RA, (1, 2))),
    ),
    "6.6": ExampleClaims(
        order=5,
        satisfies=(Variety.FL,),
        violates=(Variety.LA,),
        violation_witnesses=((Variety.LA, (1, 2)),),
    ),
    "6.7": ExampleClaims(
        order=6,
        satisfies=(Variety.LN,),
        violates=(Variety.MN, Variety.PA3),
        violation_witnesses=((Variety.MN, (1, 2, 3)), (Variety.PA3, (1,))),
    ),
    "6.8": ExampleClaims(
        order=6,
        satisfies=(Variety.MN,),
        violates=(Variety.PA3,),
        violation_witnesses=((Variety.PA3, (1,)),),
    ),
}

_cache: dict[str, FiniteLoop] = {}


def example_loop(example_id: str) -> FiniteLoop:
    """One of the ten reference loops, by its catalog id ('3.1' .. '6.8')."""
    if example_id not in EXAMPLE_IDS:
        raise KeyError(f"unknown example id {example_id!r}; choose from {EXAMPLE_IDS}")
    if example_id not in _cache:
        if example_id == "6.1":
            _cache[example_id] = chein_double(dihedral_group(8))
        elif example_id == "6.2":
            _cache[example_id] = chein_double(symmetric_group_3())
        else:
            name = f"example_{example_id.replace('.', '_')}.loop"
            text = resources.files("bolmoufang.data").joinpath(name).read_text()
            _cache[example_id] = parse_loop_text(text)
    return _cache[example_id]
