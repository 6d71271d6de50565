"""Command-line front end.

Subcommands: compute, construct {urb, prescribed, linform},
check {sidon, coincide, sandor}, generate sandor, reconstruct,
search modular, verify.  Exit codes: 0 success, 2 validation/input error,
1 broken internal invariant (a bug, never expected).  All structured
output is JSON with sorted keys; runs are deterministic given flags and
seed.  REPBASIS_BUDGET overrides the enumeration guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import coincide, construct, intset, linforms, modular, oracle, repfn, sidon
from .errors import InternalError, RepbasisError


def _iroot(n: int, q: int) -> int:
    """floor(n ** (1/q)) for n >= 0, exactly."""
    if q < 1:
        raise ValueError("root index must be >= 1")
    if q == 1 or n < 2:
        return n
    x = 1 << (-(-n.bit_length() // q) + 1)
    while True:
        y = ((q - 1) * x + n // x ** (q - 1)) // q
        if y >= x:
            return x
        x = y


def _parse_phi(spec: str):
    if spec == "log":
        return construct.log2_plus_4
    if spec.startswith("poly:"):
        theta = Fraction(spec[len("poly:"):])
        if theta <= 0:
            raise ValueError("poly sparsity exponent must be positive")
        p, q = theta.numerator, theta.denominator

        def phi(x: int) -> int:
            if x < 1:
                raise ValueError("sparsity budget defined for x >= 1 only")
            return _iroot(x ** p, q) + 4

        return phi
    raise ValueError(f"unknown sparsity budget {spec!r}; use 'log' or 'poly:THETA'")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _print_json(obj) -> None:
    print(_dump(obj))


def _write_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump(obj) + "\n")


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# command handlers


def _cmd_compute(args) -> int:
    a = intset.read_set_file(args.set_path)
    window = (args.window[0], args.window[1])
    fn = {"ordered": repfn.ordered, "unordered": repfn.unordered,
          "restricted": repfn.restricted}[args.kind]
    table = fn(a, args.order, window)
    _print_json(table.to_json())
    return 0


def _cmd_construct_urb(args) -> int:
    phi = _parse_phi(args.phi) if args.phi else None
    trace = construct.urb_trace(args.steps, phi)
    final = trace[-1]
    counts = oracle.enum_unordered_counts(final.elements, 2)
    max_count = max(counts.values())
    prefix = construct.urb_certified_prefix(final)
    oracle_ok = max_count <= 1 and all(
        counts.get(n, 0) == 1 for n in range(-prefix, prefix + 1)
    )
    if not oracle_ok:
        raise InternalError("oracle recount contradicts the construction")
    if args.out:
        intset.write_set_file(args.out, final.elements)
    if args.report:
        _write_json(args.report, {
            "format": 1,
            "kind": "urb",
            "steps": [
                {"k": s.k, "d": s.d_k, "b": s.b_k, "c": s.c_k} for s in trace
            ],
            "certified_prefix": prefix,
            "max_pair_count": max_count,
            "oracle_ok": oracle_ok,
            "sparsity_checked": phi is not None,
        })
    print(f"urb: steps={final.k} card={len(final.elements)} "
          f"unique on |n| <= {prefix}")
    return 0


def _cmd_construct_prescribed(args) -> int:
    f = construct.target_from_json(_load_json(args.target))
    trace = construct.fundrep_trace(f, args.order, args.steps)
    final = trace[-1]
    if args.out:
        intset.write_set_file(args.out, final.elements)
    if args.report:
        _write_json(args.report, {
            "format": 1,
            "kind": "prescribed",
            "order": args.order,
            "steps": [
                {"k": s.k, "u": s.schedule[-1], "planted": s.planted,
                 "d": s.d_k, "c": s.c_k}
                for s in trace[1:]
            ],
            "card": len(final.elements),
            "oracle_ok": True,  # fundrep_trace ends with an oracle recheck
        })
    print(f"prescribed: order={args.order} steps={final.k} "
          f"card={len(final.elements)}")
    return 0


def _cmd_construct_linform(args) -> int:
    phi = linforms.BinaryForm(args.u1, args.u2)
    trace = linforms.urb_form_trace(phi, args.steps)
    final = trace[-1][1]
    counts = linforms.rep_counts(phi, final)
    certified_below = abs(linforms.next_missing(phi, final))
    if args.out:
        intset.write_set_file(args.out, final)
    if args.report:
        _write_json(args.report, {
            "format": 1,
            "kind": "linform",
            "u1": args.u1,
            "u2": args.u2,
            "steps": [{"k": i + 1, "b": b} for i, (b, _) in enumerate(trace)],
            "card": len(final),
            "max_count": max(counts.values()),
            "certified_below": certified_below,
        })
    print(f"linform({args.u1},{args.u2}): card={len(final)} "
          f"unique on |n| < {certified_below}")
    return 0


def _cmd_check_sidon(args) -> int:
    a = intset.read_set_file(args.set_path)
    if args.generalized:
        witness = sidon.first_generalized_collision(a, args.order)
    else:
        witness = sidon.first_collision(a, args.order)
    if witness is None:
        print(f"sidon(order {args.order}"
              f"{', generalized' if args.generalized else ''}): yes")
    else:
        print(f"sidon(order {args.order}"
              f"{', generalized' if args.generalized else ''}): no")
        print(f"collision: {witness[0]} vs {witness[1]}")
    return 0


def _cmd_check_coincide(args) -> int:
    pair = coincide.pair_from_json(_load_json(args.pair))
    if not coincide.check_congruence(pair):
        print("congruence: no")
        return 0
    a, b = coincide.synthesize_pair(pair)
    bad = coincide.verify_pair(a, b, args.horizon)
    if bad is None:
        print(f"coincide: yes (checked n in ({2 * pair.n0}, {args.horizon}])")
    else:
        print(f"coincide: no (first disagreement at n = {bad})")
    return 0


def _cmd_check_sandor(args) -> int:
    bad = coincide.sandor_verify(args.n, args.head, args.horizon)
    if bad is None:
        print("coincide: yes")
    else:
        print(f"coincide: no (first disagreement at n = {bad})")
    return 0


def _cmd_generate_sandor(args) -> int:
    a, b = coincide.sandor_generate(args.n, args.head, args.horizon)
    if args.out_a:
        intset.write_set_file(args.out_a, a)
    if args.out_b:
        intset.write_set_file(args.out_b, b)
    print("A:", " ".join(str(x) for x in a.elements))
    print("B:", " ".join(str(x) for x in b.elements))
    return 0


def _cmd_reconstruct(args) -> int:
    table = repfn.RepTable.from_json(_load_json(args.table))
    a = repfn.reconstruct_ordered(table, args.order)
    if args.out:
        intset.write_set_file(args.out, a)
    print("set:", " ".join(str(x) for x in a.elements))
    return 0


def _cmd_search_modular(args) -> int:
    found = modular.search_bounded_basis(
        args.m, args.order, args.bound, budget=args.budget, seed=args.seed
    )
    if found is None:
        _print_json({"format": 1, "found": False, "m": args.m,
                     "note": "budget exhausted; not a nonexistence proof"})
    else:
        counts = modular.rep_mod(found, args.order)
        obj = {"format": 1, "found": True,
               "max_count": max(counts.values())}
        obj.update(modular.residue_to_json(found))
        _print_json(obj)
    return 0


def _cmd_verify(args) -> int:
    a = intset.read_set_file(args.set_path)
    window = (args.window[0], args.window[1])
    report = oracle.equivalence_suite(a, args.order, window)
    if report.ok:
        print("verify: clean")
        return 0
    m = report.mismatch
    print(f"verify: MISMATCH mode={m.mode} n={m.n} "
          f"fast={m.fast_value} oracle={m.oracle_value}", file=sys.stderr)
    return 1


# ---------------------------------------------------------------------------
# parser wiring


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="repbasis",
        description="Exact representation functions of integer sets and "
                    "constructive inverse problems.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="count representations on a window")
    c.add_argument("--set", dest="set_path", required=True)
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--kind", choices=["ordered", "unordered", "restricted"],
                   default="unordered")
    c.add_argument("--window", nargs=2, type=int, required=True,
                   metavar=("LO", "HI"))
    c.set_defaults(func=_cmd_compute)

    con = sub.add_parser("construct", help="run one of the set constructions")
    consub = con.add_subparsers(dest="what", required=True)

    urb = consub.add_parser("urb", help="unique representation basis prefix")
    urb.add_argument("--steps", type=int, required=True)
    urb.add_argument("--phi", help="sparsity budget: 'log' or 'poly:THETA'")
    urb.add_argument("--out")
    urb.add_argument("--report")
    urb.set_defaults(func=_cmd_construct_urb)

    pre = consub.add_parser("prescribed",
                            help="basis realizing a prescribed count function")
    pre.add_argument("--order", type=int, required=True)
    pre.add_argument("--steps", type=int, required=True)
    pre.add_argument("--target", required=True, help="target function JSON")
    pre.add_argument("--out")
    pre.add_argument("--report")
    pre.set_defaults(func=_cmd_construct_prescribed)

    lin = consub.add_parser("linform",
                            help="unique representation basis for a binary form")
    lin.add_argument("--u1", type=int, required=True)
    lin.add_argument("--u2", type=int, required=True)
    lin.add_argument("--steps", type=int, required=True)
    lin.add_argument("--out")
    lin.add_argument("--report")
    lin.set_defaults(func=_cmd_construct_linform)

    chk = sub.add_parser("check", help="run a certification check")
    chksub = chk.add_subparsers(dest="what", required=True)

    sid = chksub.add_parser("sidon", help="collision-freeness of h-fold sums")
    sid.add_argument("--set", dest="set_path", required=True)
    sid.add_argument("--order", type=int, required=True)
    sid.add_argument("--generalized", action="store_true")
    sid.set_defaults(func=_cmd_check_sidon)

    coi = chksub.add_parser("coincide", help="eventual pair-count coincidence")
    coi.add_argument("--pair", required=True, help="pair JSON file")
    coi.add_argument("--horizon", type=int, required=True)
    coi.set_defaults(func=_cmd_check_coincide)

    san = chksub.add_parser("sandor", help="partition coincidence check")
    san.add_argument("--N", dest="n", type=int, required=True)
    san.add_argument("--head", required=True, help="bit string on [0, 2N-1]")
    san.add_argument("--horizon", type=int, required=True)
    san.set_defaults(func=_cmd_check_sandor)

    gen = sub.add_parser("generate", help="materialize a constructed object")
    gensub = gen.add_subparsers(dest="what", required=True)
    gsan = gensub.add_parser("sandor", help="partition halves up to a horizon")
    gsan.add_argument("--N", dest="n", type=int, required=True)
    gsan.add_argument("--head", required=True)
    gsan.add_argument("--horizon", type=int, required=True)
    gsan.add_argument("--out-a", dest="out_a")
    gsan.add_argument("--out-b", dest="out_b")
    gsan.set_defaults(func=_cmd_generate_sandor)

    rec = sub.add_parser("reconstruct",
                         help="recover a set from its ordered count table")
    rec.add_argument("--table", required=True, help="count table JSON file")
    rec.add_argument("--order", type=int, required=True)
    rec.add_argument("--out")
    rec.set_defaults(func=_cmd_reconstruct)

    sea = sub.add_parser("search", help="randomized searches")
    seasub = sea.add_subparsers(dest="what", required=True)
    smod = seasub.add_parser("modular", help="bounded-count basis mod m")
    smod.add_argument("--m", type=int, required=True)
    smod.add_argument("--order", type=int, required=True)
    smod.add_argument("--bound", type=int, required=True)
    smod.add_argument("--budget", type=int, default=20_000)
    smod.add_argument("--seed", type=int, default=0)
    smod.set_defaults(func=_cmd_search_modular)

    ver = sub.add_parser("verify", help="brute-force spot check of a set file")
    ver.add_argument("--set", dest="set_path", required=True)
    ver.add_argument("--order", type=int, required=True)
    ver.add_argument("--window", nargs=2, type=int, required=True,
                     metavar=("LO", "HI"))
    ver.set_defaults(func=_cmd_verify)

    return p


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except (RepbasisError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
