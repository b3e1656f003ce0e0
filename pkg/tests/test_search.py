from itertools import permutations

import numpy as np
import pytest

from bolmoufang.constructions import cyclic_group, example_loop
from bolmoufang.evaluate import holds
from bolmoufang.loops import FiniteLoop
from bolmoufang.search import (
    ExhaustedOrder,
    Found,
    SearchSpec,
    enumerate_loops,
    find,
    find_minimal,
    reduced_tables,
)

# ---------------------------------------------------------------------------
# Independent oracle: assemble reduced squares row by row from explicit
# permutations, checking columns as we go.  No bitmasks, no shared code.


def brute_force_reduced(n):
    if n == 1:
        return [((0,),)]
    rows_by_lead = {
        r: [p for p in permutations(range(n)) if p[0] == r] for r in range(1, n)
    }
    squares = []

    def extend(rows):
        r = len(rows)
        if r == n:
            squares.append(tuple(rows))
            return
        for candidate in rows_by_lead[r]:
            if all(
                len({rows[i][c] for i in range(r)} | {candidate[c]}) == r + 1
                for c in range(1, n)
            ):
                extend(rows + [candidate])

    extend([tuple(range(n))])
    return squares


REDUCED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 4, 5: 56, 6: 9408}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    expected = brute_force_reduced(n)
    got = list(reduced_tables(n))
    assert len(got) == REDUCED_COUNTS[n]
    assert got == sorted(expected)  # same set, lexicographic order


def test_order_six_count():
    assert sum(1 for _ in reduced_tables(6)) == REDUCED_COUNTS[6]


def test_enumeration_is_lexicographic_and_duplicate_free():
    tables = list(reduced_tables(5))
    assert tables == sorted(tables)
    assert len(set(tables)) == len(tables)


def test_first_table_small_orders():
    # order <= 3 the least reduced square is the cyclic table; at order 4
    # it is the Klein table (row 1 = 1 0 3 2 beats the cyclic 1 2 3 0)
    for n in (1, 2, 3):
        first = next(reduced_tables(n))
        assert first == tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    assert next(reduced_tables(4)) == (
        (0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0),
    )


def test_enumerate_loops_yields_valid_loops():
    loops = list(enumerate_loops(4))
    assert len(loops) == 4
    assert all(isinstance(L, FiniteLoop) for L in loops)


def test_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(0)
    with pytest.raises(ValueError):
        SearchSpec(3, mode="fastest")
    with pytest.raises(ValueError):
        SearchSpec(3, threads=0)
    with pytest.raises(ValueError):
        SearchSpec(3, require=("FL",), forbid=("FL",))


def test_find_flexible_not_left_alternative():
    result = find(SearchSpec(5, require=("FL",), forbid=("LA",)))
    assert isinstance(result, Found)
    # independent re-validation through the evaluator
    assert holds(result.loop, "FL").holds
    ev = holds(result.loop, "LA")
    assert not ev.holds
    w = result.witnesses["LA"]
    assert w.lhs_value != w.rhs_value
    assert result.loop == example_loop("6.6")  # the least such table


@pytest.mark.parametrize("n", [2, 3, 4])
def test_no_flexible_not_left_alternative_below_five(n):
    assert isinstance(find(SearchSpec(n, require=("FL",), forbid=("LA",))), ExhaustedOrder)


def test_find_minimal_mode_agrees_with_enumeration():
    result = find(SearchSpec(5, require=("FL",), forbid=("LA",)))
    first = next(
        L
        for L in enumerate_loops(5)
        if holds(L, "FL").holds and not holds(L, "LA").holds
    )
    assert result.loop == first


def test_find_unconstrained_returns_least_reduced_table():
    for n in range(1, 6):
        result = find(SearchSpec(n))
        assert result.loop.table.tolist() == [list(r) for r in next(reduced_tables(n))]
    # which is the cyclic table only up to order 3
    assert find(SearchSpec(3)).loop == cyclic_group(3)
    assert find(SearchSpec(4)).loop != cyclic_group(4)


def test_find_trivial_order_with_every_identity():
    from bolmoufang.terms import enumerate_all

    result = find(SearchSpec(1, require=tuple(enumerate_all())))
    assert isinstance(result, Found)
    assert result.loop.order == 1


def test_find_requires_and_forbids_simultaneously():
    result = find(SearchSpec(6, require=("LN",), forbid=("MN", "3PA")))
    assert isinstance(result, Found)
    assert holds(result.loop, "LN").holds
    assert not holds(result.loop, "MN").holds
    assert set(result.witnesses) == {"MN", "3PA"}


def test_parallel_equals_serial_in_minimal_mode():
    serial = find(SearchSpec(5, require=("FL",), forbid=("LA",), threads=1))
    parallel = find(SearchSpec(5, require=("FL",), forbid=("LA",), threads=4))
    assert serial.loop == parallel.loop

    serial_x = find(SearchSpec(4, require=("FL",), forbid=("LA",), threads=1))
    parallel_x = find(SearchSpec(4, require=("FL",), forbid=("LA",), threads=4))
    assert serial_x == parallel_x  # including node counts


def test_first_found_mode_returns_valid_result():
    result = find(SearchSpec(5, require=("FL",), forbid=("LA",), mode="first", threads=3))
    assert isinstance(result, Found)
    assert holds(result.loop, "FL").holds
    assert not holds(result.loop, "LA").holds


def test_node_counts_are_deterministic():
    a = find(SearchSpec(4, require=("FL",), forbid=("LA",)))
    b = find(SearchSpec(4, require=("FL",), forbid=("LA",)))
    assert a == b


def test_find_minimal_known_orders():
    assert find_minimal(("MN",), ("3PA",), max_order=8).loop.order == 6
    assert find_minimal(("LN",), ("MN",), max_order=8).loop.order == 6
    assert find_minimal(("FL",), ("LA",), max_order=8).loop.order == 5


def test_find_minimal_none_for_equivalent_identities():
    # A23 defines the same variety as associativity itself
    assert find_minimal(("GR",), ("A23",), max_order=6) is None


def test_find_minimal_rejects_bad_cap():
    with pytest.raises(ValueError):
        find_minimal((), (), max_order=0)


def test_search_accepts_identity_names_and_laws():
    from bolmoufang.terms import IdentityName

    result = find(SearchSpec(5, require=(IdentityName.from_string("B45"),), forbid=("A45",)))
    assert isinstance(result, Found)
    assert result.loop == example_loop("6.6")
