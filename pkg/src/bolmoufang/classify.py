"""Reproduction of the classification artifacts, with machine-checkable certificates.

Three artifacts are verified against computation:

* the identity -> variety table (``table3``): identities expected to be
  equivalent must agree on every cataloged loop, and identities in
  different classes must be separated by a concrete loop;
* the separation matrix (``table2``): each nonempty cell names a reference
  loop lying in the row variety but not the column variety (primed entries
  mean the opposite loop);
* the inclusion lattice (``figure1``): 19 containments between the 15
  varieties, every non-containment certified by a counterexample loop.

Equivalences and inclusions are validated *empirically*, by exhausting all
normalized loops up to a finite order (default 6, about 9470 tables); the
certificates say so explicitly.  Separations are exact: a counterexample
loop settles the question for good.
"""

from __future__ import annotations

import hashlib
import inspect
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .constructions import CLAIMS, EXAMPLE_IDS, example_loop
from .evaluate import (
    ALL_NAMES,
    DUAL_VARIETY,
    NAME_INDEX,
    VARIETY_INDEX,
    VARIETY_ORDER,
    Profile,
    Variety,
    evaluate_at,
    holds,
    profile,
    profile_tables,
    satisfies_variety,
)
from .loops import FiniteLoop
from .search import SearchSpec, Found, find, reduced_tables
from .terms import IdentityName

# ---------------------------------------------------------------------------
# Expected classification: which variety each of the 60 identities defines.
# 3PA is not the class of any identity; it only appears in the lattice.

_CLASS_TABLE = {
    "A12": "GR", "A13": "LA", "A14": "LC", "A15": "LC", "A23": "GR",
    "A24": "GR", "A25": "GR", "A34": "LC", "A35": "LN", "A45": "LA",
    "B12": "GR", "B13": "GR", "B14": "LB", "B15": "ML", "B23": "EL",
    "B24": "GR", "B25": "GR", "B34": "GR", "B35": "GR", "B45": "FL",
    "C12": "LA", "C13": "GR", "C14": "LC", "C15": "CL", "C23": "GR",
    "C24": "MN", "C25": "RC", "C34": "GR", "C35": "GR", "C45": "RA",
    "D12": "GR", "D13": "GR", "D14": "GR", "D15": "EL", "D23": "ML",
    "D24": "FL", "D25": "GR", "D34": "ML", "D35": "GR", "D45": "GR",
    "E12": "FL", "E13": "GR", "E14": "GR", "E15": "ML", "E23": "GR",
    "E24": "GR", "E25": "RB", "E34": "EL", "E35": "GR", "E45": "GR",
    "F12": "RA", "F13": "RN", "F14": "GR", "F15": "RC", "F23": "RC",
    "F24": "GR", "F25": "RC", "F34": "GR", "F35": "RA", "F45": "GR",
}

EXPECTED_CLASS: dict[IdentityName, Variety] = {
    IdentityName.from_string(k): Variety(v) for k, v in _CLASS_TABLE.items()
}

# The 19 containments of the inclusion lattice (sub, super).
INCLUSION_EDGES: tuple[tuple[Variety, Variety], ...] = tuple(
    (Variety(a), Variety(b))
    for a, b in [
        ("GR", "EL"), ("EL", "ML"), ("EL", "CL"), ("ML", "LB"), ("ML", "RB"),
        ("CL", "LC"), ("CL", "RC"), ("ML", "FL"), ("LB", "LA"), ("RB", "RA"),
        ("LC", "LA"), ("RC", "RA"), ("LC", "LN"), ("LC", "MN"), ("RC", "MN"),
        ("RC", "RN"), ("FL", "3PA"), ("LA", "3PA"), ("RA", "3PA"),
    ]
)

# Separation matrix: entry n means reference loop 6.n lies in the row
# variety but not the column variety; a prime means its opposite loop.
_SEPARATION_TEXT = """
     GR  EL  ML  CL  LB  RB  LC  RC  LA  FL  RA  LN  MN  RN
GR    .   .   .   .   .   .   .   .   .   .   .   .   .   .
EL    1   .   .   .   .   .   .   .   .   .   .   .   .   .
ML    2   2   .   2   .   .   2   2   .   .   .   2   2   2'
CL    3   3   3   .   3   3'  .   .   .   3   .   .   .   .
LB    2   2   4   2   .   4   2   2   .   4   4   2   2   2'
RB    2   2   4'  2   4'  .   2   2   4'  4'  .   2   2   2'
LC    3   3   3   5   3   3'  .   5   .   3   5   .   .   5
RC    3   3   3   5'  3   3'  5'  .   5'  3   .   5'  .   .
LA    2   2   3   2   3   3'  2   2   .   4   5   2   2   2'
FL    2   2   6   2   6   6'  2   2   6   .   6'  2   2   2'
RA    2   2   3   2   3   3'  2   2   5'  4'  .   2   2   2'
LN    3   3   3   7   3   3'  7   7   7   3   7   .   7   5
MN    3   3   3   8   3   3'  8   8   8   3   8   5'  .   5
RN    3   3   3   7'  3   3'  7'  7'  7'  3   7'  5'  7'  .
"""


def _parse_separations(text: str) -> dict[tuple[Variety, Variety], str]:
    lines = text.strip().splitlines()
    columns = [Variety(tag) for tag in lines[0].split()]
    cells: dict[tuple[Variety, Variety], str] = {}
    for line in lines[1:]:
        parts = line.split()
        row = Variety(parts[0])
        for col, entry in zip(columns, parts[1:]):
            if entry != ".":
                cells[(row, col)] = entry
    return cells


SEPARATIONS: dict[tuple[Variety, Variety], str] = _parse_separations(_SEPARATION_TEXT)


def classify_identity(name: IdentityName | str) -> Variety:
    """The variety an identity defines, per the shipped classification."""
    if isinstance(name, str):
        name = IdentityName.from_string(name)
    return EXPECTED_CLASS[name]


def transitive_closure(
    edges=INCLUSION_EDGES,
) -> set[tuple[Variety, Variety]]:
    """All containments implied by the edge list (irreflexive)."""
    closure = set(edges)
    changed = True
    while changed:
        changed = False
        for a, b in list(closure):
            for c, d in list(closure):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    return closure


def _inclusion_path(sub: Variety, super_: Variety) -> list[Variety] | None:
    """Shortest edge path sub -> super, for certificate evidence."""
    frontier = [[sub]]
    seen = {sub}
    while frontier:
        path = frontier.pop(0)
        if path[-1] == super_:
            return path
        for a, b in INCLUSION_EDGES:
            if a == path[-1] and b not in seen:
                seen.add(b)
                frontier.append(path + [b])
    return None


# ---------------------------------------------------------------------------
# Certificates and reports


@dataclass(frozen=True)
class Certificate:
    """One machine-checked claim, with enough evidence to re-check it."""

    kind: str
    claim: str
    ok: bool
    evidence: dict

    def record(self) -> dict:
        return {"kind": self.kind, "ok": self.ok, "claim": self.claim, **self.evidence}


@dataclass
class Report:
    title: str
    certificates: list[Certificate]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.certificates)

    def failures(self) -> list[Certificate]:
        return [c for c in self.certificates if not c.ok]

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"{self.title}: {len(self.certificates)} certificates"]
        if verbose:
            lines.extend(
                f"  [{'ok' if c.ok else 'FAIL'}] {c.claim}" for c in self.certificates
            )
        else:
            by_kind: dict[str, int] = {}
            for c in self.certificates:
                by_kind[c.kind] = by_kind.get(c.kind, 0) + 1
            lines.extend(f"  {kind}: {count}" for kind, count in sorted(by_kind.items()))
        for c in self.failures():
            lines.append(f"  MISMATCH: {c.claim}")
        lines.append("CONSISTENT" if self.ok else f"INCONSISTENT ({len(self.failures())} failures)")
        return "\n".join(lines)

    def to_records(self) -> str:
        return "\n".join(json.dumps(c.record(), sort_keys=True) for c in self.certificates)

    def raise_if_failed(self, exc: type["VerificationError"]) -> "Report":
        if not self.ok:
            raise exc(f"{self.title}: {len(self.failures())} mismatches", self.failures())
        return self


class VerificationError(Exception):
    """A verified artifact disagrees with the shipped expectation."""

    def __init__(self, message: str, failures: list[Certificate]):
        super().__init__(message)
        self.failures = failures


class ClassificationMismatch(VerificationError):
    pass


class InclusionViolated(VerificationError):
    pass


class CellMismatch(VerificationError):
    pass


# ---------------------------------------------------------------------------
# The loop catalog: all normalized loops up to an order bound, profiled once.

DEFAULT_CACHE_DIR = Path("~/.cache/bolmoufang").expanduser()


@dataclass(frozen=True)
class OrderProfiles:
    """Profiles of every normalized loop of one order, in enumeration order."""

    order: int
    tables: np.ndarray  # (m, n, n)
    identity_bits: np.ndarray  # (m, 60)
    variety_bits: np.ndarray  # (m, 15)

    @property
    def count(self) -> int:
        return self.tables.shape[0]

    def loop(self, index: int) -> FiniteLoop:
        return FiniteLoop(self.tables[index])

    def ref(self, index: int) -> str:
        return f"catalog order {self.order} #{index}"


_MEMO: dict[int, OrderProfiles] = {}

# Version stamp for the disk cache: any change to the enumerator or the
# profiler invalidates previously cached catalogs.
_CATALOG_VERSION = hashlib.sha256(
    (inspect.getsource(reduced_tables) + inspect.getsource(profile_tables)).encode()
).hexdigest()[:12]


def _profile_order(n: int, cache_dir: Path | None) -> OrderProfiles:
    if n in _MEMO:
        return _MEMO[n]
    cache_file = None
    if cache_dir is not None:
        cache_file = Path(cache_dir) / f"catalog-order{n}-{_CATALOG_VERSION}.npz"
        if cache_file.exists():
            data = np.load(cache_file)
            result = OrderProfiles(n, data["tables"], data["identity_bits"], data["variety_bits"])
            _MEMO[n] = result
            return result
    tables = np.array(list(reduced_tables(n)), dtype=np.int64)
    identity_bits, variety_bits = profile_tables(tables)
    result = OrderProfiles(n, tables.astype(np.int8), identity_bits, variety_bits)
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        np.savez_compressed(
            cache_file,
            tables=result.tables,
            identity_bits=identity_bits,
            variety_bits=variety_bits,
        )
    _MEMO[n] = result
    return result


def catalog_profiles(max_order: int, cache_dir: Path | str | None = None) -> list[OrderProfiles]:
    """Profiles of every normalized loop of order 1..max_order."""
    if max_order < 1:
        raise ValueError(f"order bound must be positive, got {max_order}")
    cache = Path(cache_dir) if cache_dir is not None else None
    return [_profile_order(n, cache) for n in range(1, max_order + 1)]


def _inverse_property_flags(tables: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(LIP, two-sided-inverse) flags for a stack of tables of one order."""
    m, n = tables.shape[0], tables.shape[1]
    rows = np.arange(m)[:, None, None]
    is_e = tables == 0
    linv = is_e.argmax(axis=1)  # linv[m, x] = e/x
    rinv = is_e.argmax(axis=2)  # rinv[m, x] = x\e
    lip = (tables[rows, linv[:, :, None], tables] == np.arange(n)[None, None, :]).all(axis=(1, 2))
    return lip, (linv == rinv).all(axis=1)


# ---------------------------------------------------------------------------
# Reference loop pool: the ten catalog examples and their opposites.

_pool_cache: list[tuple[str, FiniteLoop]] | None = None
_pool_profiles_cache: list[tuple[str, Profile]] | None = None

_POOL_ORDER = ("6.1", "6.2", "6.3", "6.4", "6.5", "6.6", "6.7", "6.8", "3.1", "3.2")


def reference_pool() -> list[tuple[str, FiniteLoop]]:
    """The ten reference loops and their opposites, with stable names."""
    global _pool_cache
    if _pool_cache is None:
        pool = [(f"example {i}", example_loop(i)) for i in _POOL_ORDER]
        pool += [(f"opposite(example {i})", example_loop(i).opposite()) for i in _POOL_ORDER]
        _pool_cache = pool
    return _pool_cache


def _pool_profiles() -> list[tuple[str, Profile]]:
    global _pool_profiles_cache
    if _pool_profiles_cache is None:
        _pool_profiles_cache = [(ref, profile(loop, ref)) for ref, loop in reference_pool()]
    return _pool_profiles_cache


# ---------------------------------------------------------------------------
# Artifact verification


def verify_table3(
    max_order: int = 6,
    cache_dir: Path | str | None = None,
    search_fallback: bool = True,
) -> Report:
    """Check the identity -> variety classification.

    Same-class identity pairs must agree on every loop of order <=
    max_order; different-class pairs must be separated by a reference
    loop, a catalog loop, or a fresh model search.
    """
    catalog = catalog_profiles(max_order, cache_dir)
    idbits = np.concatenate([c.identity_bits for c in catalog], axis=0)
    refs = [(c, i) for c in catalog for i in range(c.count)]
    exhausted = f"exhausted all normalized loops of order <= {max_order}"
    certificates: list[Certificate] = []

    names = [str(n) for n in ALL_NAMES]
    classes = {n: EXPECTED_CLASS[n].value for n in ALL_NAMES}
    for a in range(60):
        for b in range(a + 1, 60):
            na, nb = ALL_NAMES[a], ALL_NAMES[b]
            ca, cb = classes[na], classes[nb]
            if ca == cb:
                diff = np.flatnonzero(idbits[:, a] != idbits[:, b])
                ok = diff.size == 0
                evidence = {"identities": [names[a], names[b]], "class": ca, "method": exhausted}
                if not ok:
                    order_profiles, index = refs[int(diff[0])]
                    evidence["counterexample"] = order_profiles.ref(index)
                    evidence["table"] = order_profiles.tables[index].tolist()
                certificates.append(
                    Certificate(
                        "equivalence",
                        f"{names[a]} and {names[b]} (both {ca}) agree on every loop of order <= {max_order}",
                        ok,
                        evidence,
                    )
                )
            else:
                certificates.append(
                    _separation_certificate(na, nb, ca, cb, idbits, a, b, refs, max_order, search_fallback)
                )
    return Report(f"identity classification (table3, orders <= {max_order})", certificates)


def _separation_certificate(
    na, nb, ca, cb, idbits, a, b, refs, max_order, search_fallback
) -> Certificate:
    evidence = {"identities": [str(na), str(nb)], "classes": [ca, cb]}
    for ref, prof in _pool_profiles():
        ha, hb = prof.holds_identity(na), prof.holds_identity(nb)
        if ha != hb:
            sat, unsat = (str(na), str(nb)) if ha else (str(nb), str(na))
            evidence.update({"source": "pool", "loop": ref, "satisfies": sat, "violates": unsat})
            return Certificate(
                "separation",
                f"{na} ({ca}) vs {nb} ({cb}): {ref} satisfies {sat} but not {unsat}",
                True,
                evidence,
            )
    diff = np.flatnonzero(idbits[:, a] != idbits[:, b])
    if diff.size:
        order_profiles, index = refs[int(diff[0])]
        ha = bool(idbits[int(diff[0]), a])
        sat, unsat = (str(na), str(nb)) if ha else (str(nb), str(na))
        ref = order_profiles.ref(index)
        evidence.update({"source": "catalog", "loop": ref, "satisfies": sat, "violates": unsat})
        return Certificate(
            "separation",
            f"{na} ({ca}) vs {nb} ({cb}): {ref} satisfies {sat} but not {unsat}",
            True,
            evidence,
        )
    if search_fallback:
        for first, second in ((na, nb), (nb, na)):
            for order in range(1, max_order + 1):
                result = find(SearchSpec(order, require=(first,), forbid=(second,)))
                if isinstance(result, Found):
                    evidence.update(
                        {
                            "source": "search",
                            "loop": f"search result of order {order}",
                            "table": result.loop.table.tolist(),
                            "satisfies": str(first),
                            "violates": str(second),
                        }
                    )
                    return Certificate(
                        "separation",
                        f"{na} ({ca}) vs {nb} ({cb}): search found an order-{order} separator",
                        True,
                        evidence,
                    )
    evidence["source"] = "none"
    return Certificate(
        "separation",
        f"{na} ({ca}) vs {nb} ({cb}): no separating loop found up to order {max_order}",
        False,
        evidence,
    )


def verify_figure1(max_order: int = 6, cache_dir: Path | str | None = None) -> Report:
    """Check the inclusion lattice among the 15 varieties.

    Each of the 19 containments must hold on every cataloged loop; every
    ordered pair of varieties with no containment path must have a
    counterexample loop; the containments must form a Hasse diagram
    (no edge implied by the others).
    """
    catalog = catalog_profiles(max_order, cache_dir)
    varbits = np.concatenate([c.variety_bits for c in catalog], axis=0)
    refs = [(c, i) for c in catalog for i in range(c.count)]
    certificates: list[Certificate] = []

    for sub, super_ in INCLUSION_EDGES:
        col_sub, col_super = VARIETY_INDEX[sub], VARIETY_INDEX[super_]
        viol = np.flatnonzero(varbits[:, col_sub] & ~varbits[:, col_super])
        ok = viol.size == 0
        evidence = {
            "sub": sub.value,
            "super": super_.value,
            "method": f"exhausted all normalized loops of order <= {max_order}",
        }
        if not ok:
            order_profiles, index = refs[int(viol[0])]
            loop = order_profiles.loop(index)
            witness = holds(loop, super_).witness
            evidence["counterexample"] = order_profiles.ref(index)
            evidence["witness"] = list(witness.assignment) if witness else None
            evidence["table"] = order_profiles.tables[index].tolist()
        certificates.append(
            Certificate(
                "inclusion",
                f"every {sub} loop of order <= {max_order} is {super_}",
                ok,
                evidence,
            )
        )

    closure = transitive_closure()
    pool = _pool_profiles()
    for a in VARIETY_ORDER:
        for b in VARIETY_ORDER:
            if a == b or (a, b) in closure:
                continue
            evidence = {"sub": a.value, "super": b.value}
            cert = None
            for ref, prof in pool:
                if prof.holds_variety(a) and not prof.holds_variety(b):
                    evidence.update({"source": "pool", "loop": ref})
                    cert = Certificate(
                        "non-inclusion",
                        f"{a} is not contained in {b}: {ref} is {a} but not {b}",
                        True,
                        evidence,
                    )
                    break
            if cert is None:
                col_a, col_b = VARIETY_INDEX[a], VARIETY_INDEX[b]
                sep = np.flatnonzero(varbits[:, col_a] & ~varbits[:, col_b])
                if sep.size:
                    order_profiles, index = refs[int(sep[0])]
                    evidence.update({"source": "catalog", "loop": order_profiles.ref(index)})
                    cert = Certificate(
                        "non-inclusion",
                        f"{a} is not contained in {b}: {order_profiles.ref(index)} is {a} but not {b}",
                        True,
                        evidence,
                    )
                else:
                    evidence["source"] = "none"
                    cert = Certificate(
                        "non-inclusion",
                        f"{a} vs {b}: no loop found in {a} but outside {b}",
                        False,
                        evidence,
                    )
            certificates.append(cert)

    # Hasse property: no edge follows from the others by transitivity, and
    # the closure is antisymmetric (a genuine partial order).
    redundant = [
        (a, b)
        for a, b in INCLUSION_EDGES
        if any((a, c) in closure and (c, b) in closure for c in VARIETY_ORDER if c not in (a, b))
    ]
    cyclic = [(a, b) for a, b in closure if (b, a) in closure]
    certificates.append(
        Certificate(
            "structure",
            "the 19 containments are the Hasse diagram of a partial order",
            not redundant and not cyclic,
            {
                "redundant_edges": [[a.value, b.value] for a, b in redundant],
                "cycles": [[a.value, b.value] for a, b in cyclic],
            },
        )
    )
    return Report(f"inclusion lattice (figure1, orders <= {max_order})", certificates)


def verify_table2() -> Report:
    """Check the separation matrix cell by cell.

    Nonempty cells point at a reference loop (primed = its opposite) that
    must satisfy the row variety and violate the column variety; empty
    off-diagonal cells must be containments derivable from the lattice.
    """
    closure = transitive_closure()
    columns = [v for v in VARIETY_ORDER if v is not Variety.PA3]
    certificates: list[Certificate] = []
    for row in columns:
        for col in columns:
            if row == col:
                continue
            entry = SEPARATIONS.get((row, col))
            if entry is None:
                path = _inclusion_path(row, col)
                certificates.append(
                    Certificate(
                        "cell-empty",
                        f"cell ({row},{col}) empty: every {row} loop is {col}",
                        (row, col) in closure and path is not None,
                        {
                            "row": row.value,
                            "col": col.value,
                            "path": [v.value for v in path] if path else None,
                        },
                    )
                )
                continue
            example_id = "6." + entry.rstrip("'")
            primed = entry.endswith("'")
            loop = example_loop(example_id)
            ref = f"example {example_id}"
            if primed:
                loop = loop.opposite()
                ref = f"opposite(example {example_id})"
            sat = satisfies_variety(loop, row)
            unsat_ev = holds(loop, col)
            ok = sat and not unsat_ev.holds
            evidence = {
                "row": row.value,
                "col": col.value,
                "entry": entry,
                "loop": ref,
                "satisfies_row": bool(sat),
                "violates_col": bool(not unsat_ev.holds),
            }
            if unsat_ev.witness is not None:
                evidence["witness"] = list(unsat_ev.witness.assignment)
            certificates.append(
                Certificate(
                    "cell",
                    f"cell ({row},{col}) = {entry}: {ref} is {row} but not {col}",
                    ok,
                    evidence,
                )
            )
    return Report("separation matrix (table2)", certificates)


def verify_examples() -> Report:
    """Re-check every documented claim about the ten reference loops."""
    certificates: list[Certificate] = []
    for example_id in EXAMPLE_IDS:
        claims = CLAIMS[example_id]
        loop = example_loop(example_id)
        certificates.append(
            Certificate(
                "structure",
                f"example {example_id} is a loop of order {claims.order}",
                loop.order == claims.order,
                {"example": example_id, "order": loop.order},
            )
        )
        for variety in claims.satisfies:
            certificates.append(
                Certificate(
                    "caption",
                    f"example {example_id} is {variety}",
                    satisfies_variety(loop, variety),
                    {"example": example_id, "variety": variety.value, "expected": True},
                )
            )
        for variety in claims.violates:
            ev = holds(loop, variety)
            certificates.append(
                Certificate(
                    "caption",
                    f"example {example_id} is not {variety}",
                    not ev.holds,
                    {
                        "example": example_id,
                        "variety": variety.value,
                        "expected": False,
                        "witness": list(ev.witness.assignment) if ev.witness else None,
                    },
                )
            )
        for variety, assignment in claims.violation_witnesses:
            lhs, rhs = evaluate_at(loop, variety, assignment)
            certificates.append(
                Certificate(
                    "witness",
                    f"example {example_id}: {variety} fails at {assignment} ({lhs} != {rhs})",
                    lhs != rhs,
                    {
                        "example": example_id,
                        "variety": variety.value,
                        "assignment": list(assignment),
                        "lhs": lhs,
                        "rhs": rhs,
                    },
                )
            )
        if claims.two_sided_inverses is not None:
            certificates.append(
                Certificate(
                    "caption",
                    f"example {example_id} two-sided inverses: {claims.two_sided_inverses}",
                    loop.has_two_sided_inverses() == claims.two_sided_inverses,
                    {"example": example_id},
                )
            )
        if claims.left_inverse_property is not None:
            certificates.append(
                Certificate(
                    "caption",
                    f"example {example_id} left inverse property: {claims.left_inverse_property}",
                    loop.has_left_inverse_property() == claims.left_inverse_property,
                    {"example": example_id},
                )
            )
        if claims.right_inverse_property is not None:
            certificates.append(
                Certificate(
                    "caption",
                    f"example {example_id} right inverse property: {claims.right_inverse_property}",
                    loop.has_right_inverse_property() == claims.right_inverse_property,
                    {"example": example_id},
                )
            )
        if claims.lip_witness is not None:
            x, y = claims.lip_witness
            got = loop.mul(loop.left_inverse(x), loop.mul(x, y))
            certificates.append(
                Certificate(
                    "witness",
                    f"example {example_id}: e/{x} * ({x}*{y}) = {got} != {y}",
                    got != y,
                    {"example": example_id, "x": x, "y": y, "value": got},
                )
            )
        if claims.rip_witness is not None:
            x, y = claims.rip_witness
            got = loop.mul(loop.mul(y, x), loop.right_inverse(x))
            certificates.append(
                Certificate(
                    "witness",
                    f"example {example_id}: ({y}*{x}) * {x}\\e = {got} != {y}",
                    got != y,
                    {"example": example_id, "x": x, "y": y, "value": got},
                )
            )
        for bound, expected in claims.powers_associative:
            certificates.append(
                Certificate(
                    "caption",
                    f"example {example_id} powers associative up to {bound}: {expected}",
                    loop.powers_associative_upto(bound) == expected,
                    {"example": example_id, "bound": bound, "expected": expected},
                )
            )
    return Report("reference loop claims (examples)", certificates)


def verify_lemma_regressions(max_order: int = 6, cache_dir: Path | str | None = None) -> Report:
    """Structural facts about LC loops and inverse properties, over the catalog.

    Every LC loop must be left alternative, have the left inverse property,
    be middle nuclear square, and satisfy C14; every loop satisfying C14
    must satisfy A34; every loop with the left inverse property must have
    two-sided inverses.
    """
    catalog = catalog_profiles(max_order, cache_dir)
    certificates: list[Certificate] = []
    lc = VARIETY_INDEX[Variety.LC]
    la = VARIETY_INDEX[Variety.LA]
    mn = VARIETY_INDEX[Variety.MN]
    c14, a34 = NAME_INDEX["C14"], NAME_INDEX["A34"]
    checks = {
        "every LC loop is left alternative": lambda c, lip, ts: (
            ~(c.variety_bits[:, lc] & ~c.variety_bits[:, la])
        ),
        "every LC loop has the left inverse property": lambda c, lip, ts: (
            ~(c.variety_bits[:, lc] & ~lip)
        ),
        "every LC loop is middle nuclear square": lambda c, lip, ts: (
            ~(c.variety_bits[:, lc] & ~c.variety_bits[:, mn])
        ),
        "every LC loop satisfies C14": lambda c, lip, ts: (
            ~(c.variety_bits[:, lc] & ~c.identity_bits[:, c14])
        ),
        "every loop satisfying C14 satisfies A34": lambda c, lip, ts: (
            ~(c.identity_bits[:, c14] & ~c.identity_bits[:, a34])
        ),
        "every loop with the left inverse property has two-sided inverses": (
            lambda c, lip, ts: ~(lip & ~ts)
        ),
    }
    results = {claim: (True, None) for claim in checks}
    for order_profiles in catalog:
        lip, two_sided = _inverse_property_flags(order_profiles.tables.astype(np.int64))
        for claim, fn in checks.items():
            good = fn(order_profiles, lip, two_sided)
            bad = np.flatnonzero(~good)
            if bad.size and results[claim][1] is None:
                results[claim] = (False, order_profiles.ref(int(bad[0])))
    for claim, (ok, counterexample) in results.items():
        evidence = {"method": f"exhausted all normalized loops of order <= {max_order}"}
        if counterexample:
            evidence["counterexample"] = counterexample
        certificates.append(Certificate("regression", f"{claim} (order <= {max_order})", ok, evidence))
    return Report(f"structure regressions (orders <= {max_order})", certificates)
