from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bolmoufang.constructions import cyclic_group, example_loop
from bolmoufang.evaluate import (
    ALL_NAMES,
    NAME_INDEX,
    VARIETY_IDENTITY,
    VARIETY_LAWS,
    VARIETY_ORDER,
    Variety,
    evaluate_at,
    holds,
    law_for,
    profile,
    profile_tables,
    satisfies_variety,
)
from bolmoufang.loops import from_table
from bolmoufang.search import enumerate_loops
from bolmoufang.terms import App, Var, dual_name

# ---------------------------------------------------------------------------
# Independent oracle: interpret terms recursively, loop over assignments in
# plain Python.  Everything the numpy path reports is checked against this.


def naive_eval(loop, term, env):
    if isinstance(term, Var):
        return env[term.name]
    return loop.mul(naive_eval(loop, term.left, env), naive_eval(loop, term.right, env))


def naive_holds(loop, law):
    law = law_for(law)
    for values in product(range(loop.order), repeat=len(law.variables)):
        env = dict(zip(law.variables, values))
        if naive_eval(loop, law.lhs, env) != naive_eval(loop, law.rhs, env):
            return False, values
    return True, None


SMALL_LOOPS = [L for n in range(1, 5) for L in enumerate_loops(n)]


@pytest.mark.parametrize("example_id", ["3.1", "3.2", "6.4", "6.6", "6.7", "6.8"])
def test_holds_matches_naive_oracle_on_examples(example_id):
    loop = example_loop(example_id)
    for name in ALL_NAMES:
        expected, _ = naive_holds(loop, name)
        assert holds(loop, name).holds == expected, f"{example_id} {name}"


def test_holds_matches_naive_oracle_on_small_catalog():
    for loop in SMALL_LOOPS:
        for name in ALL_NAMES[::7]:  # a spread of patterns and bracketings
            assert holds(loop, name).holds == naive_holds(loop, name)[0]


def test_varieties_match_naive_oracle():
    for loop in [example_loop(i) for i in ("3.1", "6.4", "6.6", "6.7", "6.8")]:
        for v in VARIETY_ORDER:
            assert satisfies_variety(loop, v) == naive_holds(loop, VARIETY_LAWS[v])[0]


def test_witness_is_lexicographically_first():
    loop = example_loop("6.7")
    ev = holds(loop, "C24")
    assert not ev.holds
    law = law_for("C24")
    first = next(
        values
        for values in product(range(loop.order), repeat=3)
        if naive_eval(loop, law.lhs, dict(zip("xyz", values)))
        != naive_eval(loop, law.rhs, dict(zip("xyz", values)))
    )
    assert ev.witness.assignment == first


def test_witness_values_reproduce():
    loop = example_loop("6.3")
    ev = holds(loop, "B14")
    lhs, rhs = evaluate_at(loop, "B14", ev.witness.assignment)
    assert (lhs, rhs) == (ev.witness.lhs_value, ev.witness.rhs_value)
    assert lhs != rhs


def test_quoted_failures():
    # flexibility fails at (8, 9) on the order-12 C-loop
    lhs, rhs = evaluate_at(example_loop("6.3"), Variety.FL, (8, 9))
    assert lhs != rhs
    # right alternativity fails at (6, 4) on the order-8 left Bol loop
    lhs, rhs = evaluate_at(example_loop("6.4"), Variety.RA, (6, 4))
    assert lhs != rhs
    assert not holds(example_loop("6.4"), Variety.RA).holds


def test_trivial_loop_satisfies_everything():
    loop = from_table([[0]])
    assert all(holds(loop, n).holds for n in ALL_NAMES)
    assert all(satisfies_variety(loop, v) for v in VARIETY_ORDER)


def test_extra_loop_claims():
    loop = example_loop("6.1")
    assert satisfies_variety(loop, "EL")
    assert not satisfies_variety(loop, "GR")


def test_mn_not_3pa_claims():
    loop = example_loop("6.8")
    assert satisfies_variety(loop, "MN")
    assert not satisfies_variety(loop, "3PA")
    lhs, rhs = evaluate_at(loop, "3PA", (1,))
    assert lhs != rhs


def test_groups_satisfy_every_variety():
    G = cyclic_group(3)
    assert all(satisfies_variety(G, v) for v in VARIETY_ORDER)


def test_profile_of_z2_is_all_true():
    prof = profile(cyclic_group(2))
    assert prof.identity_bits.all() and prof.variety_bits.all()


def test_profile_of_moufang_s3_double():
    prof = profile(example_loop("6.2"))
    assert prof.holds_variety("ML")
    assert not prof.holds_variety("LN")
    assert not prof.holds_variety("MN")
    assert not prof.holds_variety("GR")


def test_profile_of_lc_example():
    prof = profile(example_loop("6.5"))
    assert prof.holds_variety("LC")
    assert not prof.holds_variety("RN")
    lhs, rhs = evaluate_at(example_loop("6.5"), "F13", (1, 2, 3))
    assert lhs != rhs


def test_profile_matches_holds():
    for example_id in ("6.4", "6.7"):
        loop = example_loop(example_id)
        prof = profile(loop)
        for name in ALL_NAMES:
            assert prof.holds_identity(name) == holds(loop, name).holds
        for v in VARIETY_ORDER:
            assert prof.holds_variety(v) == satisfies_variety(loop, v)


def test_variety_bits_cohere_with_identity_bits():
    for loop in [example_loop(i) for i in ("6.1", "6.3", "6.5")] + SMALL_LOOPS[-10:]:
        prof = profile(loop)
        for v, name in VARIETY_IDENTITY.items():
            assert prof.holds_variety(v) == prof.holds_identity(name)


def test_group_bit_implies_all_bits():
    for n in range(1, 6):
        tables = np.array([L.table for L in enumerate_loops(n)])
        idbits, varbits = profile_tables(tables)
        gr = varbits[:, 0]
        assert gr.any()  # the catalog always contains groups
        assert idbits[gr].all() and varbits[gr].all()


@given(st.sampled_from(SMALL_LOOPS), st.sampled_from(ALL_NAMES))
def test_duality_coherence_sampled(loop, name):
    assert holds(loop, name).holds == holds(loop.opposite(), dual_name(name)).holds
