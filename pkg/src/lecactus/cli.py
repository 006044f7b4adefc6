"""Command line front end.

Exit codes: 0 when the poset is LE-cactus (or a sweep found no disagreement),
1 when it is not (or a sweep disagreed), 2 on usage errors and exceeded
budgets, 3 when ``classify --xval`` finds the two routes disagreeing.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence

from .classify import (
    DEFAULT_MAX_EXTENSIONS,
    BlockSequence,
    BudgetExceeded,
    InadmissibleBlock,
    Verdict,
    census,
    classify_chain_union_sum,
    is_le_cactus_bruteforce,
)
from .dynamics import evacuation, promotion
from .expr import parse_block, parse_expression
from .ospart import evacuation_perm, from_linear_extension, promotion_perm
from .poset import Poset, PosetError, chain_union, enumerate_linear_extensions, partitions

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2, 3


def _pmap(fn: Callable, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * threads))))


def _emit(text: str, out) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _verdict_text(expr: str, v: Verdict) -> str:
    lines = [f"poset: {expr}", f"verdict: {'LE-cactus' if v.is_le_cactus else 'not LE-cactus'}",
             f"method: {v.method}"]
    if v.witness:
        w = v.witness
        lines.append(f"witness: (t{w.i} q{{{w.j},{w.k}}})^2 moves extension {list(w.extension)}")
    for key in sorted(v.stats):
        lines.append(f"{key}: {v.stats[key]}")
    return "\n".join(lines)


def cmd_check(args, out) -> int:
    if args.file:
        with open(args.file) as fh:
            P = Poset.from_text(fh.read())
        expr = args.file
    else:
        if args.expr is None:
            raise PosetError("give a poset expression or --file")
        P = parse_expression(args.expr)
        expr = args.expr
    path = args.path
    if path == "auto":
        path = "ospart" if P.chain_of is not None and P.blocks is not None else "generic"
    v = is_le_cactus_bruteforce(P, args.max_extensions, path=path)
    _emit(v.to_json(expr) if args.json else _verdict_text(expr, v), out)
    return EXIT_OK if v.is_le_cactus else EXIT_NO


def _parse_blocks(text: str) -> BlockSequence:
    tokens = [tok for tok in text.replace(">", " ").split()]
    if not tokens:
        raise InadmissibleBlock("no blocks given")
    return BlockSequence(tuple(parse_block(tok) for tok in tokens))


def cmd_classify(args, out) -> int:
    seq = _parse_blocks(" ".join(args.blocks))
    v = classify_chain_union_sum(seq)
    brute = None
    if args.xval:
        brute = is_le_cactus_bruteforce(seq.poset(), args.max_extensions)
    rows = [
        {"triple": list(t), "compatible": ok, "regime": rule}
        for t, ok, rule in v.triples
    ]
    if args.json:
        payload = {"blocks": str(seq), "triples": rows, "verdict": v.is_le_cactus,
                   "method": "cross-validated" if brute else v.method}
        if brute:
            payload["bruteforce"] = brute.to_dict(str(seq))
            payload["agree"] = brute.is_le_cactus == v.is_le_cactus
        _emit(json.dumps(payload, sort_keys=True), out)
    else:
        lines = [f"blocks: {seq}", "p\tn\tq\tcompatible\tregime"]
        lines += [f"{r['triple'][0]}\t{r['triple'][1]}\t{r['triple'][2]}\t{r['compatible']}\t{r['regime']}"
                  for r in rows]
        lines.append(f"verdict: {'LE-cactus' if v.is_le_cactus else 'not LE-cactus'}")
        if brute:
            lines.append(f"brute-force: {'LE-cactus' if brute.is_le_cactus else 'not LE-cactus'}")
            lines.append(f"agree: {brute.is_le_cactus == v.is_le_cactus}")
        _emit("\n".join(lines), out)
    if brute is not None and brute.is_le_cactus != v.is_le_cactus:
        return EXIT_DISAGREE
    return EXIT_OK if v.is_le_cactus else EXIT_NO


def _census_row(args) -> dict:
    mus, xval, cap = args
    seq = BlockSequence(mus)
    v = classify_chain_union_sum(seq)
    row = {"poset": str(seq), "sizes": list(seq.sizes), "closed_form": v.is_le_cactus}
    if xval:
        b = is_le_cactus_bruteforce(seq.poset(), cap)
        row["bruteforce"] = b.is_le_cactus
        row["extensions"] = b.stats["extensions"]
    return row


def cmd_enumerate(args, out) -> int:
    if not 1 <= args.size <= args.limit:
        raise PosetError(f"size must lie in [1, {args.limit}] (raise --limit to go further)")
    seqs = census(args.size)
    rows = _pmap(_census_row, [(s.mus, args.xval, args.max_extensions) for s in seqs], args.threads)
    yes = sum(r["closed_form"] for r in rows)
    summary = {"size": args.size, "posets": len(rows), "le_cactus": yes, "not_le_cactus": len(rows) - yes}
    if args.xval:
        summary["disagreements"] = sum(r["closed_form"] != r["bruteforce"] for r in rows)
    if args.json:
        _emit(json.dumps({"summary": summary, "rows": rows}, sort_keys=True), out)
    else:
        header = ["index", "poset", "sizes", "closed_form"] + (["bruteforce"] if args.xval else [])
        lines = ["\t".join(header)]
        for idx, r in enumerate(rows):
            cells = [str(idx), r["poset"], ",".join(map(str, r["sizes"])), str(r["closed_form"])]
            if args.xval:
                cells.append(str(r["bruteforce"]))
            lines.append("\t".join(cells))
        lines.append("# " + " ".join(f"{k}={summary[k]}" for k in sorted(summary)))
        _emit("\n".join(lines), out)
    return EXIT_OK if not summary.get("disagreements") else EXIT_NO


def _xval_one(args):
    mus, cap = args
    seq = BlockSequence(mus)
    closed = classify_chain_union_sum(seq)
    brute = is_le_cactus_bruteforce(seq.poset(), cap)
    return (str(seq), closed.is_le_cactus, brute.is_le_cactus,
            brute.stats["extensions"], brute.stats["triples"], sum(seq.sizes))


def commutation_sweep(max_n: int) -> dict:
    """Promotion/evacuation on chain unions against their block permutations."""
    cases = checks = bad = 0
    first = None
    for n in range(1, max_n + 1):
        for lam in partitions(n):
            if len(lam) < 2 and n > 1:
                continue
            D = chain_union(lam)
            cases += 1
            for g in enumerate_linear_extensions(D):
                osp = from_linear_extension(D, g)
                for k in range(1, n + 1):
                    pairs = [(promotion(D, g, k), promotion_perm(k, n))]
                    if k >= 2:
                        pairs.append((evacuation(D, g, k - 1), evacuation_perm(k, n)))
                    for moved, w in pairs:
                        checks += 1
                        if from_linear_extension(D, moved) != osp.act(w):
                            bad += 1
                            if first is None:
                                first = {"lambda": list(lam), "extension": list(g.labels), "k": k}
    return {"posets": cases, "checks": checks, "disagreements": bad, "first": first}


def run_xval(max_size: int, threads: int = 1, cap: int = DEFAULT_MAX_EXTENSIONS) -> dict:
    items = [(s.mus, cap) for size in range(1, max_size + 1) for s in census(size)]
    results = _pmap(_xval_one, items, threads)
    bad = [(r[5], idx, r) for idx, r in enumerate(results) if r[1] != r[2]]
    classifier = {
        "posets": len(results),
        "extensions": sum(r[3] for r in results),
        "relation_checks": sum(r[3] * r[4] for r in results),
        "le_cactus": sum(r[2] for r in results),
        "disagreements": len(bad),
        "first": None,
    }
    if bad:
        _, _, worst = min(bad)  # smallest size, then census order
        classifier["first"] = {"poset": worst[0], "closed_form": worst[1], "bruteforce": worst[2]}
    return {
        "max_size": max_size,
        "classifier_vs_bruteforce": classifier,
        "ospart_commutation": commutation_sweep(min(max_size, 6)),
    }


def _xval_text(report: dict) -> str:
    c = report["classifier_vs_bruteforce"]
    o = report["ospart_commutation"]
    lines = [
        f"max_size: {report['max_size']}",
        "sweep\tposets\textensions\tchecks\tdisagreements",
        f"classifier-vs-bruteforce\t{c['posets']}\t{c['extensions']}\t{c['relation_checks']}\t{c['disagreements']}",
        f"ospart-commutation\t{o['posets']}\t-\t{o['checks']}\t{o['disagreements']}",
        f"le_cactus: {c['le_cactus']} of {c['posets']}",
    ]
    if c["first"]:
        lines.append(f"counterexample: {json.dumps(c['first'], sort_keys=True)}")
    if o["first"]:
        lines.append(f"commutation counterexample: {json.dumps(o['first'], sort_keys=True)}")
    return "\n".join(lines)


def cmd_xval(args, out) -> int:
    if args.max_size < 1:
        raise PosetError("max size must be positive")
    if args.max_size > args.limit:
        raise PosetError(f"max size {args.max_size} exceeds --limit {args.limit}")
    report = run_xval(args.max_size, args.threads, args.max_extensions)
    _emit(json.dumps(report, sort_keys=True) if args.json else _xval_text(report), out)
    total = report["classifier_vs_bruteforce"]["disagreements"] + report["ospart_commutation"]["disagreements"]
    return EXIT_OK if total == 0 else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lecactus",
        description="Bender-Knuth dynamics on linear extensions and the LE-cactus property.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-extensions", type=int, default=DEFAULT_MAX_EXTENSIONS,
                        help="refuse posets with more linear extensions (default: %(default)s)")
    common.add_argument("--threads", type=int, default=1, help="worker processes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="brute-force LE-cactus check of one poset")
    p.add_argument("expr", nargs="?", help="poset expression, e.g. 'A3 > A1'")
    p.add_argument("--file", help="read the poset from a text file instead")
    p.add_argument("--path", choices=["generic", "ospart", "auto"], default="generic")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", parents=[common], help="closed-form verdict for a block sequence")
    p.add_argument("blocks", nargs="*", help="blocks bottom to top, e.g. 'D[1,1,1] D[1]'")
    p.add_argument("--xval", action="store_true", help="also run brute force")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("enumerate", parents=[common], help="census of chain-union ordinal sums")
    p.add_argument("size", type=int)
    p.add_argument("--xval", action="store_true", help="also run brute force on each poset")
    p.add_argument("--limit", type=int, default=9)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("xval", parents=[common], help="cross-validate classifier and brute force")
    p.add_argument("max_size", type=int, nargs="?", default=8)
    p.add_argument("--limit", type=int, default=8)
    p.set_defaults(func=cmd_xval)
    return parser


def main(argv: Iterable[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (PosetError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
