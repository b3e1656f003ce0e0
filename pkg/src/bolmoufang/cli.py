"""Command-line front end.

Subcommands: ``name`` (canonicalize an identity), ``dual`` (dual identity),
``check`` / ``profile`` (evaluate identities on a .loop file), ``find``
(constrained model search), ``enumerate`` (loop enumeration), and
``reproduce`` (re-verify the classification artifacts).

Exit codes: 0 on success, 1 when a verification or check fails, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import classify
from .evaluate import (
    ALL_NAMES,
    VARIETY_ORDER,
    Variety,
    holds,
    law_for,
    profile,
    satisfies_variety,
)
from .loops import format_loop, read_loop_file
from .search import ExhaustedOrder, Found, SearchSpec, find, find_minimal
from .terms import (
    Identity,
    IdentityName,
    IdentitySyntaxError,
    NotBolMoufangError,
    decode_name,
    dual_name,
    dual_term,
    encode_name,
    parse_identity,
)


class UsageError(Exception):
    pass


def _parse_name_or_identity(text: str) -> IdentityName:
    try:
        return IdentityName.from_string(text)
    except ValueError:
        pass
    try:
        return encode_name(parse_identity(text))
    except (IdentitySyntaxError, NotBolMoufangError) as exc:
        raise UsageError(f"{text!r} is neither an identity name nor an identity: {exc}")


def _cmd_name(args) -> int:
    try:
        ident = parse_identity(args.identity)
    except (IdentitySyntaxError, NotBolMoufangError) as exc:
        raise UsageError(str(exc))
    name = encode_name(ident)
    variety = classify.classify_identity(name)
    print(f"{name} ({variety}-loop class)")
    print(decode_name(name))
    return 0


def _cmd_dual(args) -> int:
    name = _parse_name_or_identity(args.identity)
    dual = dual_name(name)
    print(f"{dual}  {dual_term(decode_name(name))}")
    return 0


def _targets_for_check(args) -> list:
    if args.identity:
        return [law_for(IdentityName.from_string(args.identity))]
    if args.variety:
        try:
            return [law_for(Variety(args.variety.upper()))]
        except ValueError:
            raise UsageError(f"unknown variety {args.variety!r}")
    return [law_for(n) for n in ALL_NAMES] + [law_for(v) for v in VARIETY_ORDER]


def _cmd_check(args) -> int:
    loop = read_loop_file(args.loop_file)
    failures = 0
    for law in _targets_for_check(args):
        ev = holds(loop, law)
        if ev.holds:
            print(f"{law.name}: holds")
        else:
            failures += 1
            print(f"{law.name}: FAILS ({ev.witness})")
    return 1 if failures else 0


def _cmd_profile(args) -> int:
    loop = read_loop_file(args.loop_file)
    prof = profile(loop, str(args.loop_file))
    print(f"loop of order {loop.order}: {args.loop_file}")
    for letter in "ABCDEF":
        bits = " ".join(
            f"{name}{'+' if prof.holds_identity(name) else '-'}"
            for name in map(str, ALL_NAMES)
            if name.startswith(letter)
        )
        print(f"  {bits}")
    varieties = " ".join(
        f"{v.value}{'+' if prof.holds_variety(v) else '-'}" for v in VARIETY_ORDER
    )
    print(f"  {varieties}")
    return 0


def _laws_from_tokens(tokens: str) -> tuple:
    laws = []
    for token in tokens.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            laws.append(law_for(token))
        except ValueError:
            raise UsageError(f"unknown identity or variety {token!r}")
    return tuple(laws)


def _cmd_find(args) -> int:
    if (args.order is None) == (args.max_order is None):
        raise UsageError("give exactly one of --order or --max-order")
    require = _laws_from_tokens(args.require or "")
    forbid = _laws_from_tokens(args.forbid or "")
    mode = "minimal" if args.minimal else "first"
    try:
        if args.order is not None:
            result = find(SearchSpec(args.order, require, forbid, mode, args.threads))
        else:
            result = find_minimal(require, forbid, args.max_order, mode, args.threads)
            if result is None:
                print(f"no loop up to order {args.max_order} satisfies the constraints")
                return 0
    except ValueError as exc:
        raise UsageError(str(exc))
    if isinstance(result, ExhaustedOrder):
        print(f"exhausted order {result.order}: no loop satisfies the constraints "
              f"({result.nodes} nodes)")
        return 0
    lines = [f"satisfies {law.name}" for law in require]
    lines += [str(w) for w in result.witnesses.values()]
    text = format_loop(result.loop, comment="\n".join(lines) if lines else None)
    print(text, end="")
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    return 0


def _cmd_enumerate(args) -> int:
    from .search import enumerate_loops

    if args.order < 1:
        raise UsageError(f"order must be positive, got {args.order}")
    if args.count_only:
        print(sum(1 for _ in enumerate_loops(args.order)))
        return 0
    for i, loop in enumerate(enumerate_loops(args.order)):
        print(format_loop(loop, comment=f"loop {i}"))
    return 0


def _cmd_reproduce(args) -> int:
    if args.artifact == "examples":
        report = classify.verify_examples()
    elif args.artifact == "table2":
        report = classify.verify_table2()
    elif args.artifact == "table3":
        report = classify.verify_table3(args.max_order, cache_dir=args.cache_dir)
    else:
        report = classify.verify_figure1(args.max_order, cache_dir=args.cache_dir)
    if args.format == "records":
        print(report.to_records())
    else:
        print(report.to_text(verbose=args.verbose))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bolmoufang",
        description="Classify, evaluate, and search for loops of Bol-Moufang type.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("name", help="canonical Xij name and variety of an identity")
    p.add_argument("identity", help="e.g. 'x((yy)z)=((xy)y)z'")
    p.set_defaults(fn=_cmd_name)

    p = sub.add_parser("dual", help="dual of an identity or identity name")
    p.add_argument("identity", help="an Xij name like C25, or an identity string")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("check", help="check identities or a variety on a .loop file")
    p.add_argument("loop_file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--identity", help="one Xij name")
    g.add_argument("--variety", help="one variety tag, e.g. ML")
    g.add_argument("--all", action="store_true", help="all 60 identities and 15 varieties")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("profile", help="full 60+15 satisfaction report for a .loop file")
    p.add_argument("loop_file")
    p.set_defaults(fn=_cmd_profile)

    p = sub.add_parser("find", help="search for a loop satisfying/violating given laws")
    p.add_argument("--order", type=int, help="search exactly this order")
    p.add_argument("--max-order", type=int, help="search orders 1..M for the least example")
    p.add_argument("--require", help="comma-separated Xij names or variety tags")
    p.add_argument("--forbid", help="comma-separated Xij names or variety tags")
    p.add_argument("--minimal", action="store_true", help="lexicographically minimal table")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output", help="also write the .loop result to this file")
    p.set_defaults(fn=_cmd_find)

    p = sub.add_parser("enumerate", help="enumerate all normalized loops of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("reproduce", help="re-verify a classification artifact")
    p.add_argument("artifact", choices=["examples", "table2", "table3", "figure1"])
    p.add_argument("--max-order", type=int, default=6)
    p.add_argument("--cache-dir", default=str(classify.DEFAULT_CACHE_DIR))
    p.add_argument("--no-cache", dest="cache_dir", action="store_const", const=None)
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.add_argument("--verbose", action="store_true", help="print every certificate")
    p.set_defaults(fn=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
