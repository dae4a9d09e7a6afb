"""Command-line interface.

Exit codes: 0 finished without obstruction, 2 obstruction found, 1 error.
"""

from __future__ import annotations

import argparse
import sys
import time

from ..fibercheck.criteria import CriterionError, ManifoldInput, check_epi
from ..fibercheck.search import BudgetExceeded, ObstructionFound, escalate, search_obstruction
from ..grouptheory.abelian import PhiClass, infinite_cyclic_phi
from ..grouptheory.epimorphisms import (
    NoneUpToBound, enumerate_epimorphisms, separability_witness,
)
from ..grouptheory.perms import (
    CATALOG_CEILING, group_by_name, group_catalog, group_from_generators, trivial_group,
)
from ..laurent.poly import normalize_unit
from .corpus import ENTRIES, NORM_SOURCE, corpus_entry
from .parser import PresentationSemanticError, PresentationSyntaxError, load_presentation
from .report import (
    build_report, dumps, input_record, result_record, verdict_record, write_json_atomic,
)

EXIT_OK, EXIT_ERROR, EXIT_OBSTRUCTION = 0, 1, 2


def _bool(text: str) -> bool:
    v = text.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _order(text: str) -> int:
    n = int(text)
    if not 1 <= n <= CATALOG_CEILING:
        raise argparse.ArgumentTypeError(f"max order must lie in 1..{CATALOG_CEILING}")
    return n


def _add_common(p: argparse.ArgumentParser, search: bool = False):
    p.add_argument("--input", required=True, help="presentation file")
    p.add_argument("--seed", type=int, default=0, help="accepted for scripting; never affects results")
    p.add_argument("--content-monic", type=_bool, nargs="?", const=True, default=False,
                   help="count known integer content in the monic test")
    p.add_argument("--dedupe-conjugacy", type=_bool, nargs="?", const=True, default=False,
                   help="one epimorphism per conjugacy orbit")
    if search:
        p.add_argument("--max-order", type=_order, default=24)
        p.add_argument("--exhaustive", type=_bool, nargs="?", const=True, default=False)
        p.add_argument("--budget-seconds", type=float, default=None)
        p.add_argument("--max-epimorphisms", type=int, default=None)
        p.add_argument("--json", default=None, help="write the report here")
        p.add_argument("--escalate", type=_bool, nargs="?", const=True, default=False,
                       help="on budget exhaustion report ConsistentUpTo for the finished orders")


def _add_group(p: argparse.ArgumentParser):
    p.add_argument("--group", default=None, help="catalog group name such as S3, D4, Z/5, A4")
    p.add_argument("--group-gens", default=None,
                   help="permutation generators in one-line notation, e.g. '1 0 2;1 2 0'")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twistalex", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", help="twisted Alexander data for the epimorphisms onto one group")
    _add_common(p)
    _add_group(p)
    p.add_argument("--alpha", type=int, default=None, help="index into the epimorphism list")

    p = sub.add_parser("search", help="sweep the catalog for a criterion failure")
    _add_common(p, search=True)

    p = sub.add_parser("epis", help="list epimorphisms onto a group")
    _add_common(p)
    _add_group(p)

    p = sub.add_parser("corpus", help="built-in knots and 0-surgeries")
    p.add_argument("action", choices=("list", "run"))
    p.add_argument("labels", nargs="*")
    p.add_argument("--max-order", type=_order, default=6)
    p.add_argument("--dedupe-conjugacy", type=_bool, nargs="?", const=True, default=False)
    p.add_argument("--content-monic", type=_bool, nargs="?", const=True, default=False)
    p.add_argument("--json", default=None)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("witness", help="finite quotient separating an element from a subgroup")
    _add_common(p)
    p.add_argument("--subgroup", action="append", default=[], help="subgroup generator word (repeatable)")
    p.add_argument("--element", required=True, help="word g")
    p.add_argument("--max-order", type=_order, default=24)
    return ap


def _manifold(path) -> ManifoldInput:
    pf = load_presentation(path)
    phi = PhiClass(pf.phi) if pf.phi is not None else infinite_cyclic_phi(pf.presentation)
    return ManifoldInput(pf.presentation, phi, pf.norm, pf.closed, pf.label,
                         "input file" if pf.norm is not None else None)


def _group(args):
    if args.group_gens:
        gens = [[int(x) for x in part.split()] for part in args.group_gens.split(";") if part.strip()]
        return group_from_generators(args.group or "custom", gens)
    if args.group:
        return group_by_name(args.group)
    return trivial_group()


def _print_result(r, out):
    b = r.bundle
    imgs = " ".join("[" + " ".join(map(str, im)) + "]" for im in r.alpha.describe())
    out.write(f"{r.alpha.target.name} {imgs}\n")
    out.write(f"  delta0 = {b.delta0}\n  delta1 = {b.delta1}"
              f"  (content {b.delta1_content if b.delta1_content is not None else 'unknown'})\n")
    if b.column_used is not None:
        out.write(f"  wada   = ({b.wada_num}) / ({b.wada_den})  column {b.column_used}"
                  f"  consistent={b.wada_consistent}\n")
    out.write(f"  div={r.div_phi_G} expected={r.expected_degree} actual={r.actual_degree}"
              f" monic={r.monic} -> {r.status}\n")


def _cmd_delta(args, out) -> int:
    inp = _manifold(args.input)
    G = _group(args)
    epis = enumerate_epimorphisms(inp.presentation, G, dedupe_conjugacy=args.dedupe_conjugacy)
    if args.alpha is not None:
        if not 0 <= args.alpha < len(epis):
            raise ValueError(f"--alpha must lie in 0..{len(epis) - 1}")
        epis = [epis[args.alpha]]
    if not epis:
        out.write(f"no epimorphisms onto {G.name}\n")
    failed = False
    for alpha in epis:
        r = check_epi(inp, alpha, args.content_monic)
        failed |= r.failed
        _print_result(r, out)
    return EXIT_OBSTRUCTION if failed else EXIT_OK


def _cmd_epis(args, out) -> int:
    inp = _manifold(args.input)
    G = _group(args)
    epis = enumerate_epimorphisms(inp.presentation, G, dedupe_conjugacy=args.dedupe_conjugacy)
    for i, alpha in enumerate(epis):
        out.write(f"{i}: " + "  ".join(f"{g}->{p}" for g, p in zip(inp.presentation.generators, alpha.images)) + "\n")
    out.write(f"{len(epis)} epimorphisms onto {G.name}\n")
    return EXIT_OK


def _search_doc(inp: ManifoldInput, args, entry: str):
    start = time.monotonic()
    try:
        if getattr(args, "escalate", False):
            v = escalate(inp, args.max_order, args.budget_seconds, dedupe=args.dedupe_conjugacy,
                         content_monic=args.content_monic)
        else:
            v = search_obstruction(inp, args.max_order, dedupe=args.dedupe_conjugacy,
                                   budget_seconds=getattr(args, "budget_seconds", None),
                                   max_epimorphisms=getattr(args, "max_epimorphisms", None),
                                   exhaustive=getattr(args, "exhaustive", False),
                                   content_monic=args.content_monic)
        results = v.results
    except BudgetExceeded as exc:
        v, results = exc, exc.results
    recs = [result_record(r, entry) for r in results]
    return v, results, recs, time.monotonic() - start


def _cmd_search(args, out) -> int:
    inp = _manifold(args.input)
    v, results, recs, secs = _search_doc(inp, args, inp.label)
    flags = {"max_order": args.max_order, "dedupe_conjugacy": args.dedupe_conjugacy,
             "exhaustive": args.exhaustive, "budget_seconds": args.budget_seconds,
             "content_monic": args.content_monic, "escalate": args.escalate}
    doc = build_report(input_record(inp, **flags), recs, verdict_record(v, results), secs)
    if args.json:
        write_json_atomic(args.json, doc)
    _summary(v, results, out)
    if isinstance(v, BudgetExceeded):
        return EXIT_ERROR
    return EXIT_OBSTRUCTION if isinstance(v, ObstructionFound) else EXIT_OK


def _summary(v, results, out):
    if isinstance(v, ObstructionFound):
        out.write(f"ObstructionFound after {v.counts['epimorphisms']} epimorphisms:\n")
        _print_result(v.witness, out)
    elif isinstance(v, BudgetExceeded):
        out.write(f"BudgetExceeded ({v.reason}) after {v.counts['epimorphisms']} epimorphisms\n")
    else:
        out.write(f"ConsistentUpTo({v.max_order}): {v.counts['epimorphisms']} epimorphisms "
                  f"over {v.counts['groups']} groups\n")


def _cmd_corpus(args, out) -> int:
    if args.action == "list":
        for e in ENTRIES:
            kind = "closed" if e.closed else "exterior"
            out.write(f"{e.label:22s} {kind:8s} fibered={str(e.fibered).lower():5s} genus={e.genus}"
                      f"  Delta={e.expected_delta}\n")
        return EXIT_OK
    labels = args.labels or [e.label for e in ENTRIES]
    entries = [corpus_entry(lb) for lb in labels]
    start = time.monotonic()
    recs, verdicts, any_obstruction = [], {}, False
    for e in entries:
        inp = e.manifold()
        v, results, erecs, _ = _search_doc(inp, args, e.label)
        verdicts[e.label] = verdict_record(v, results, offset=len(recs))
        recs.extend(erecs)
        any_obstruction |= isinstance(v, ObstructionFound)
        triv = results[0].bundle.delta1 if results else None
        oracle = e.oracle() if (e.seifert is not None or e.monodromy is not None) else None
        check = "" if oracle is None else ("  oracle ok" if normalize_unit(triv) == oracle else "  ORACLE MISMATCH")
        out.write(f"== {e.label}: Delta = {triv}{check}\n")
        for r in results:
            out.write(f"  {r.alpha.target.name:6s} {str(r.bundle.delta1):50s} {r.status}\n")
        _summary(v, results, out)
    doc = build_report({"corpus": labels, "max_order": args.max_order,
                        "dedupe_conjugacy": args.dedupe_conjugacy, "content_monic": args.content_monic,
                        "norm_source": NORM_SOURCE},
                       recs, {"kind": "CorpusRun", "entries": verdicts}, time.monotonic() - start)
    if args.json:
        write_json_atomic(args.json, doc)
    return EXIT_OBSTRUCTION if any_obstruction else EXIT_OK


def _cmd_witness(args, out) -> int:
    pf = load_presentation(args.input)
    p = pf.presentation
    A = [p.word(w) for w in args.subgroup]
    g = p.word(args.element)
    res = separability_witness(p, A, g, max_order=args.max_order)
    if isinstance(res, NoneUpToBound):
        out.write(f"no witness up to order {res.max_order} "
                  f"({res.groups_checked} groups, {res.epimorphisms_checked} epimorphisms)\n")
    else:
        a = res.epimorphism
        out.write(f"witness in {a.target.name}: "
                  + "  ".join(f"{x}->{q}" for x, q in zip(p.generators, a.images))
                  + f"; alpha(g) = {res.image_of_g}, |alpha(A)| = {res.subgroup_order}\n")
    return EXIT_OK


COMMANDS = {"delta": _cmd_delta, "search": _cmd_search, "epis": _cmd_epis,
            "corpus": _cmd_corpus, "witness": _cmd_witness}


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return COMMANDS[args.command](args, out)
    except (PresentationSyntaxError, PresentationSemanticError, ValueError, KeyError,
            CriterionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
