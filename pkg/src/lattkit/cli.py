"""Command-line entry point: ``lattkit <command> ...``; every command prints JSON."""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import io
from .commutator import (induced_commutator_checks, commutator_from_congruence, commutator_report,
                         equiv_congruence, commutator_grid_report, quotient_mod_equiv, reticulation, spectrum)
from .conditions import ConditionId, check_condition, davey_report
from .lattice import LatticeError
from .rings import (NotARing, baer_bridge_report, check_ring_condition, describe, enumerate_ideals,
                    idempotents, ideal_congruence_correspondence, is_semiprime, prime_ideals,
                    reticulation_ring, ring_verdicts, MAX_CONGRUENCE_RING_SIZE)
from .suites import ACCEPTANCE, SIZE_PARAM, SUITE_ALIASES, SUITES, run_suite, search_grid_without_zero_radical
from .transfer import make_context, transfer_report

CONDITION_CHOICES = ["1", "2", "3", "4", "5", "iv"]
KAPPA_CHOICES = ["one", "fin", "all"]


def _emit(obj, out: str | None = None):
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _condition(args) -> ConditionId | None:
    if args.condition is None:
        return None
    return ConditionId.parse(args.condition, args.kappa)


def cmd_check(args) -> int:
    L = io.load_lattice(io.read_json(args.lattice), dual=args.dual)
    start = time.perf_counter()
    c = _condition(args)
    if c is None:
        rep = davey_report(L)
        out = rep.to_json()
    else:
        r = check_condition(L, c)
        out = {"condition": str(c), "holds": r.holds, "witness": r.witness}
    out["timings"] = {"seconds": round(time.perf_counter() - start, 6)}
    _emit(out, args.out)
    return 0


def cmd_transfer(args) -> int:
    M = io.load_lattice(io.read_json(args.lattice), dual=args.dual)
    theta = io.load_congruence(M, io.read_json(args.congruence))
    rep = transfer_report(make_context(M, theta))
    _emit(rep.to_json(), args.out)
    return 0 if rep.ok else 1


def cmd_spectrum(args) -> int:
    CL = io.load_commutator(io.read_json(args.lattice))
    _emit(spectrum(CL).to_json(CL.base), args.out)
    return 0


def cmd_equiv(args) -> int:
    CL = io.load_commutator(io.read_json(args.lattice))
    eq = equiv_congruence(CL)
    Q = quotient_mod_equiv(CL)
    _emit({"blocks": eq.congruence.to_json(),
           "quotient": Q.to_json(),
           "reticulation": reticulation(CL).to_json()}, args.out)
    return 0


def cmd_grid(args) -> int:
    CL = io.load_commutator(io.read_json(args.lattice))
    rep = commutator_grid_report(CL)
    out = rep.to_json()
    if args.full:
        out["all_checks"] = commutator_report(CL).to_json()
    _emit(out, args.out)
    return 0 if rep.ok else 1


def cmd_comm_from_cong(args) -> int:
    M = io.load_lattice(io.read_json(args.lattice))
    theta = io.load_congruence(M, io.read_json(args.congruence))
    CL = commutator_from_congruence(M, theta)
    checks = induced_commutator_checks(M, theta)
    _emit({"commutator": CL.to_json(), "checks": checks.to_json()}, args.out)
    return 0 if checks.ok else 1


def cmd_ring(args) -> int:
    R = io.load_ring(io.read_json(args.ring))
    IL = enumerate_ideals(R)
    out = {"ring": describe(R), "order": R.n}
    status = 0
    c = _condition(args)
    if c is not None:
        r = check_ring_condition(R, c)
        out.update({"condition": str(c), "holds": r.holds, "witness": r.witness})
    if args.reticulation:
        out["reticulation"] = reticulation_ring(R).to_json()
    if args.bridge:
        rep = baer_bridge_report(R)
        out["bridge"] = rep.to_json()
        if R.n <= MAX_CONGRUENCE_RING_SIZE:
            corr = ideal_congruence_correspondence(R)
            out["congruences"] = corr.to_json()
            status |= not corr.ok
        status |= not rep.ok
    if c is None and not args.reticulation and not args.bridge:
        out.update({"ideals": [I.label for I in IL.ideals],
                    "prime_ideals": [I.label for I in IL.ideals if I in prime_ideals(R)],
                    "idempotents": idempotents(R).to_json(),
                    "semiprime": is_semiprime(R),
                    "verdicts": {str(k): v for k, v in ring_verdicts(R).items()}})
    _emit(out, args.out)
    return int(status)


def _summary_line(s) -> str:
    return (f"{s.suite}: tested={s.tested} hypothesis_met={s.hypothesis_met} held={s.held} "
            f"failed={s.failed} ({s.seconds:.1f}s)")


def cmd_enumerate(args) -> int:
    name = SUITE_ALIASES.get(args.suite, args.suite)
    params = {}
    if args.n is not None:
        params[SIZE_PARAM[name]] = args.n
    s = run_suite(name, params, jobs=args.jobs)
    print(_summary_line(s), file=sys.stderr)
    _emit(s.to_json(), args.out)
    return 0 if s.ok else 1


def cmd_verify_all(args) -> int:
    results = []
    for crit, name, params in ACCEPTANCE:
        s = run_suite(name, params, jobs=args.jobs)
        print(f"[criterion {crit}] {'PASS' if s.ok else 'FAIL'} {_summary_line(s)}", file=sys.stderr)
        results.append({"criterion": crit, **s.to_json()})
    _emit(results, args.out)
    return 0 if all(r["ok"] for r in results) else 1


def cmd_search(args) -> int:
    found = search_grid_without_zero_radical(args.n, args.n)
    if found is None:
        out = {"found": False, "searched": f"commutator tables on lattices with at most {args.n} elements"}
    else:
        i, CL = found
        out = {"found": True, "index": i, "instance": CL.to_json(), "report": commutator_grid_report(CL).to_json()}
    _emit(out, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lattkit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, aliases=()):
        sp = sub.add_parser(name, help=help_, aliases=list(aliases))
        sp.set_defaults(fn=fn)
        sp.add_argument("--out", help="write JSON here instead of stdout")
        return sp

    sp = add("check", cmd_check, "decide a condition on a lattice (all of them when --condition is omitted)")
    sp.add_argument("lattice")
    sp.add_argument("--condition", choices=CONDITION_CHOICES)
    sp.add_argument("--kappa", choices=KAPPA_CHOICES, default="one")
    sp.add_argument("--dual", action="store_true", help="work in the order dual")

    sp = add("transfer", cmd_transfer, "compare a lattice with its quotient by a congruence")
    sp.add_argument("lattice")
    sp.add_argument("--congruence", required=True, help="JSON list of blocks")
    sp.add_argument("--dual", action="store_true")

    for name, fn, help_ in [("spectrum", cmd_spectrum, "primes and radicals of a commutator lattice"),
                            ("equiv", cmd_equiv, "the same-radical congruence and its quotient")]:
        sp = add(name, fn, help_)
        sp.add_argument("lattice", help="lattice JSON with optional commutator triples")

    sp = add("grid", cmd_grid, "the Davey grid on a commutator lattice", aliases=["ourdavey"])
    sp.add_argument("lattice")
    sp.add_argument("--full", action="store_true", help="include every single-structure claim")

    sp = add("comm-from-cong", cmd_comm_from_cong, "the commutator induced by a congruence")
    sp.add_argument("lattice")
    sp.add_argument("--congruence", required=True)

    sp = add("ring", cmd_ring, "ideals, conditions and the ideal-lattice bridge of a finite ring")
    sp.add_argument("ring")
    sp.add_argument("--condition", choices=CONDITION_CHOICES)
    sp.add_argument("--kappa", choices=KAPPA_CHOICES, default="one")
    sp.add_argument("--reticulation", action="store_true")
    sp.add_argument("--bridge", action="store_true")

    sp = add("enumerate", cmd_enumerate, "run one theorem suite exhaustively")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES) + sorted(SUITE_ALIASES))
    sp.add_argument("--n", type=int, help="size bound (its meaning depends on the suite)")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("verify-all", cmd_verify_all, "run the full acceptance matrix")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("search", cmd_search,
             "look for a commutator lattice where the Davey grid breaks although only 0 may fail to be radical")
    sp.add_argument("--n", type=int, default=4)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, json.JSONDecodeError, KeyError, io.FormatError, LatticeError, NotARing, ValueError) as e:
        print(f"lattkit: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
