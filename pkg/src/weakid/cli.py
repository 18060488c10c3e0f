"""Command-line front end: ``weakid <subcommand> [options]``.

Exit codes: 0 verdict computed, 1 repro mismatch, 2 usage error, 3 budget hit / UNKNOWN.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .bcs import max_centralizer_chain
from .disc import DiscStatus, FreeAbelianGroup, abelian_weak_equals_identity, extend_discrimination, is_discriminating_finite
from .groups import DEFAULT_MAX_ORDER, FiniteGroup, GroupError, make_group
from .homsearch import SearchBudget, resolve_threads
from .repro import SCENARIOS, run_scenario
from .subgroups import BudgetExceeded, quotient, verbal_image
from .weak import SamplingBudget, Status, TSubgroupGens, check_weak, check_weak_modulo, min_height, sample_t_subgroup, verify_weak_star_chain
from .words import WordSyntaxError, parse_word

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

ABOUT = f"""weakid {__version__}
Weak identities in finite and free-abelian groups by exhaustive search.

Conventions:
  words       g1, g2, ...; [x,y] = x*y*x^-1*y^-1; '1' is the identity word
  elements    ids 0..|G|-1, identity is 0, numbered breadth-first from the generators
  permutations compose left to right: (s*t)(p) = t(s(p)); named in cycle notation
  matrices    act on column vectors; named [a b; c d]
  search      copy by copy, variable by variable, ids ascending; the reported witness
              is the canonically least one regardless of --threads
  groups      cyclic:N dihedral:N sym:N alt:N q8 trivial elab:P:K gl:2:P sl:2:P
              prod(A,B) file:PATH   (order cap {DEFAULT_MAX_ORDER} by default)
"""


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    words: list[str] = field(default_factory=list)
    heights: list[int] = field(default_factory=list)
    node_cap: int = 10**8
    time_cap: float = 60.0
    cutoff: int | None = None
    seed: int = 0
    output: str = "text"
    threads: int = 1

    def __post_init__(self):
        if self.node_cap < 1 or self.time_cap <= 0:
            raise ValueError("budgets must be positive")

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(self.node_cap, self.time_cap)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="output", action="store_const", const="json", default="text")
    common.add_argument("--output", choices=["text", "json"], dest="output")
    common.add_argument("--threads", type=int, default=None, help="search workers (env WEAKID_THREADS)")
    common.add_argument("--node-cap", type=int, default=10**8)
    common.add_argument("--time-cap", type=float, default=60.0)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)

    p = argparse.ArgumentParser(prog="weakid", description="Weak identities in groups.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, help, group=True, words=False):
        sp = sub.add_parser(name, help=help, parents=[common])
        if group:
            sp.add_argument("--group", required=True)
        if words:
            sp.add_argument("--word", dest="words", action="append", required=True)
        return sp

    cmd("check", "is the word set weak of the given height", words=True).add_argument("--height", type=int, required=True)
    cmd("height", "least height at which the word set is weak", words=True).add_argument("--cutoff", type=int)
    sp = cmd("check-mod", "weak identities modulo a verbal subgroup", words=True)
    sp.add_argument("--modulo", action="append", default=[])
    sp.add_argument("--height", type=int, required=True)
    cmd("chain", "verify a weak* chain from a JSON file").add_argument("--chain-file", required=True)
    cmd("verbal", "verbal image of a word set", words=True)
    cmd("quotient", "quotient by the verbal image of a word set", words=True)
    cmd("centralizer-chain", "longest centralizer chain").add_argument("--cap", type=int, default=10**6)
    sp = sub.add_parser("disc", help="discrimination checks", parents=[common])
    sp.add_argument("--group")
    sp.add_argument("--free-abelian", type=int, metavar="RANK")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--targets", help="JSON list of flat integer vectors")
    sp = sub.add_parser("abelian", help="weak identity vs identity in Z^r", parents=[common])
    sp.add_argument("--word", required=True)
    sp.add_argument("--rank", type=int, default=1)
    sp = sub.add_parser("sample-tsub", help="sample elements of a verbal subgroup", parents=[common])
    sp.add_argument("--word", dest="words", action="append", required=True)
    sp.add_argument("--count", type=int, default=4)
    sp.add_argument("--factors", type=int, default=2)
    sp.add_argument("--word-len", type=int, default=3)
    sp.add_argument("--vars", type=int, default=3)
    sp = sub.add_parser("repro", help="reproduce a worked example", parents=[common])
    sp.add_argument("name", choices=sorted(SCENARIOS))
    sub.add_parser("about", help="conventions and version", parents=[common])
    return p


def _emit(report: dict, output: str, text: str, out) -> None:
    if output == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def _verdict_text(v: dict) -> str:
    lines = [f"{v['status']} at height {v['height']}"]
    if v.get("modulo"):
        m = v["modulo"]
        lines.append(f"  verbal subgroup order {m['verbal_order']}, quotient order {m['quotient_order']}")
    for entry in v.get("witness") or []:
        a = ", ".join(f"{k}->{x}" for k, x in entry["assignment"].items())
        lines.append(f"  copy {entry['copy']}: {entry['word']}  [{a}]")
    s = v["stats"]
    lines.append(f"  nodes {s['nodes_expanded']}, assignments {s['assignments_tested']}, "
                 f"centralizer prunes {s['prunes_by_centralizer']}")
    return "\n".join(lines)


def _group(args) -> FiniteGroup:
    return make_group(args.group, args.max_order)


def _run(args, out) -> int:
    cfg = RunConfig(
        command=args.command,
        group=getattr(args, "group", None),
        words=getattr(args, "words", None) or [],
        node_cap=args.node_cap,
        time_cap=args.time_cap,
        seed=args.seed,
        output=args.output or "text",
        threads=resolve_threads(args.threads),
    )
    c = cfg.command
    if c == "about":
        _emit({"version": __version__, "about": ABOUT}, cfg.output, ABOUT, out)
        return EXIT_OK
    if c == "check":
        v = check_weak(_group(args), cfg.words, args.height, cfg.budget, cfg.threads)
        d = v.to_dict()
        _emit(d, cfg.output, _verdict_text(d), out)
        return EXIT_UNKNOWN if v.status is Status.UNKNOWN else EXIT_OK
    if c == "height":
        r = min_height(_group(args), cfg.words, args.cutoff, cfg.budget, cfg.threads)
        d = r.to_dict()
        text = f"height {r.height}" if r.height else ("UNKNOWN" if r.unknown else "no height within cutoff")
        _emit(d, cfg.output, text, out)
        return EXIT_UNKNOWN if r.unknown else EXIT_OK
    if c == "check-mod":
        v = check_weak_modulo(_group(args), cfg.words, args.modulo, args.height, cfg.budget, cfg.threads)
        d = v.to_dict()
        _emit(d, cfg.output, _verdict_text(d), out)
        return EXIT_UNKNOWN if v.status is Status.UNKNOWN else EXIT_OK
    if c == "chain":
        with open(args.chain_file) as fh:
            spec = json.load(fh)
        r = verify_weak_star_chain(_group(args), spec["chain"], spec["heights"], cfg.budget, cfg.threads)
        d = r.to_dict()
        text = "\n".join([f"chain {r.status.value}"] + [
            f"step {i}: {s['status']} at height {s['height']}" for i, s in enumerate(d["steps"], 1)
        ])
        _emit(d, cfg.output, text, out)
        return EXIT_UNKNOWN if r.status is Status.UNKNOWN else EXIT_OK
    if c == "verbal":
        G = _group(args)
        H = verbal_image(G, TSubgroupGens.of(cfg.words).words)
        d = {"group": G.label, "order": H.order, "elements": H.to_json(), "names": H.names()}
        _emit(d, cfg.output, f"verbal image of order {H.order}: {', '.join(H.names())}", out)
        return EXIT_OK
    if c == "quotient":
        G = _group(args)
        Q = quotient(G, verbal_image(G, TSubgroupGens.of(cfg.words).words))
        d = Q.to_dict()
        _emit(d, cfg.output, f"quotient of order {Q.group.order} (kernel order {Q.kernel.order})", out)
        return EXIT_OK
    if c == "centralizer-chain":
        ch = max_centralizer_chain(_group(args), args.cap)
        d = {"length": ch.length, "complete": ch.complete, "chain": ch.to_json()}
        text = f"length {ch.length}" + ("" if ch.complete else " (incomplete)") + "\n" + "\n".join(
            f"  {e['added_element'] or '{}'}: |Cen| = {e['centralizer_order']}" for e in d["chain"]
        )
        _emit(d, cfg.output, text, out)
        return EXIT_OK if ch.complete else EXIT_UNKNOWN
    if c == "disc":
        if args.free_abelian:
            targets = json.loads(args.targets or "[]")
            m = extend_discrimination(FreeAbelianGroup(args.free_abelian), args.n, targets)
            d = {"group": f"Z^{args.free_abelian}", "map": m.to_dict()}
            _emit(d, cfg.output, f"separating matrix {m.matrix.tolist()}", out)
            return EXIT_OK
        if not args.group:
            raise GroupError("disc needs --group or --free-abelian")
        v = is_discriminating_finite(_group(args))
        d = v.to_dict()
        text = v.status.value + (f"\n  certificate: {' '.join(d['certificate'])}" if d["certificate"] else "")
        _emit(d, cfg.output, text, out)
        return EXIT_UNKNOWN if v.status is DiscStatus.UNKNOWN else EXIT_OK
    if c == "abelian":
        v = abelian_weak_equals_identity(args.word, FreeAbelianGroup(args.rank))
        d = v.to_dict()
        _emit(d, cfg.output, ("identity: " if v.is_identity else "not weak: ") + v.explanation, out)
        return EXIT_OK
    if c == "sample-tsub":
        b = SamplingBudget(args.factors, args.word_len, args.vars, args.count)
        ws = sample_t_subgroup(cfg.words, b, cfg.seed)
        _emit({"seed": cfg.seed, "samples": [str(w) for w in ws]}, cfg.output, "\n".join(map(str, ws)), out)
        return EXIT_OK
    if c == "repro":
        r = run_scenario(args.name, cfg.threads, cfg.budget)
        text = "\n".join(
            [f"{args.name}: {'PASS' if r['pass'] else 'FAIL'}"]
            + [f"  [{'ok' if row['pass'] else 'XX'}] {row['check']}: expected {row['expected']}, got {row['computed']}"
               for row in r["rows"]]
        )
        _emit(r, cfg.output, text, out)
        return EXIT_OK if r["pass"] else EXIT_MISMATCH
    raise AssertionError(c)


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (GroupError, WordSyntaxError, ValueError, KeyError, OSError) as exc:
        print(f"weakid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"weakid: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
