"""Command-line interface: ``hessmap <command> [options]``.

Exit codes: 0 success, 1 rejected or failed, 2 inconclusive, 3 usage error,
4 budget exceeded.
"""

import argparse
import json
import os
import sys

from .binary import classify_singular_monomial_hessian
from .differential import dhessian, kernel
from .errors import BudgetExceeded, HessmapError
from .families import CounterexampleSpec, verify_counterexample
from .groups import GroupSpec, invariant_space_degree_d
from .hessian import hessian_det, monomial_hessian_analyze
from .jacobian import is_smooth, monomial_jacobian_ideal, standard_monomial_count
from .pipeline import EQUIVALENT, INCONCLUSIVE, explore_monomial_hessian, kayal_check
from .poly import parse
from .exact import parse_rational
from .report import render_markdown, report_json, verify_paper

EXIT_OK, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_text(value):
    if value is None:
        raise UsageError("--input is required")
    if os.path.isfile(value):
        with open(value, encoding="utf-8") as fh:
            return fh.read().strip()
    return value


def _poly(args, value=None):
    return parse(_read_text(args.input if value is None else value), args.nvars)


def _rational_list(text):
    return [parse_rational(t) for t in text.split(",") if t.strip()]


# each handler returns (payload, text, exit code)

def _cmd_hessian(args):
    f = _poly(args)
    h = hessian_det(f)
    payload = {"input": str(f), "hessian": str(h)}
    lines = [f"H = {h}"]
    if f.is_homogeneous() and (f.degree() or 0) >= 3:
        rep = monomial_hessian_analyze(f)
        payload["monomial"] = rep.to_json()
        lines.append(f"monomial: {rep.is_monomial}  question-1 shape: {rep.is_question1_shape}")
    return payload, "\n".join(lines), EXIT_OK


def _cmd_dhess(args):
    f = _poly(args)
    if args.direction is None:
        raise UsageError("dhess needs --direction")
    g = parse(_read_text(args.direction), f.nvars)
    out = dhessian(f, g)
    return {"f": str(f), "g": str(g), "dhessian": str(out)}, f"dH_f(g) = {out}", EXIT_OK


def _cmd_kernel(args):
    f = _poly(args)
    rep = kernel(f, args.degree)
    text = "\n".join([f"dim = {rep.dim}"] + [f"  {b}" for b in rep.basis])
    return {"f": str(f), "dim": rep.dim, "basis": [str(b) for b in rep.basis]}, text, EXIT_OK


def _cmd_kayal(args):
    g = _poly(args)
    cands = None
    if args.candidates:
        cands = [parse(c, g.nvars) for c in _read_text(args.candidates).split(";") if c.strip()]
    r = kayal_check(g, cands)
    code = {EQUIVALENT: EXIT_OK, INCONCLUSIVE: EXIT_INCONCLUSIVE}.get(r.status, EXIT_FAIL)
    lines = [f"{r.status} ({r.stage})"] + [f"  {a} * ({h})^{g.degree()}" for a, h in r.forms]
    if r.note:
        lines.append(f"note: {r.note}")
    return r.to_json(), "\n".join(lines), code


def _cmd_classify(args):
    c = classify_singular_monomial_hessian(_need(args.degree, "--degree"))
    text = f"d={c.d}: {c.verdict}" + (f" ({c.family})" if c.family else "")
    payload = c.to_json()
    if args.trace:
        payload["trace"] = c.trace
        text += "\n" + "\n".join("  " + t for t in c.trace)
    return payload, text, EXIT_OK


def _cmd_counterexample(args):
    spec = CounterexampleSpec(_need(args.n, "--n"), _need(args.d, "--d"), _need(args.q, "--q"))
    rec = verify_counterexample(spec)
    text = (f"n={spec.n} d={spec.d} q={spec.q}: alpha={rec.alpha} shape_ok={rec.hessian_shape_ok} "
            f"singular={rec.singular} -> {'pass' if rec.passed else 'FAIL'}")
    return rec.to_json(), text, EXIT_OK if rec.passed else EXIT_FAIL


def _cmd_invariants(args):
    spec = GroupSpec(_need(args.d, "--d"), _need(args.e, "--e"), _need(args.n, "--n"))
    basis = invariant_space_degree_d(spec, _need(args.degree, "--degree"))
    payload = {"group": spec.to_json(), "degree": args.degree, "basis": [str(b) for b in basis]}
    text = "\n".join([f"dim = {len(basis)}"] + [f"  {b}" for b in basis])
    return payload, text, EXIT_OK


def _cmd_jacobian(args):
    g = _poly(args)
    rep = is_smooth(g)
    payload = {"g": str(g), "smoothness": rep.to_json()}
    text = f"smooth: {rep.is_smooth} (rank {rep.rank}/{rep.full_rank_needed} in degree {rep.witness_degree})"
    ideal = monomial_jacobian_ideal(g)
    if ideal is not None:
        count = standard_monomial_count(ideal)
        payload["jacobian_ring_dim"] = count if count != float("inf") else "infinite"
        text += f"\ndim R(g) = {payload['jacobian_ring_dim']}"
    return payload, text, EXIT_OK


def _cmd_explore(args):
    coeffs = _rational_list(args.coeffs)
    hits = explore_monomial_hessian(_need(args.n, "--n"), _need(args.d, "--d"), coeffs,
                                    _need(args.support, "--support"))
    payload = [h.to_json() for h in hits]
    text = "\n".join(f"{h.poly}  H-exponents={list(h.hessian_report.exponents)} smooth={h.smooth}"
                     for h in hits) or "no hits"
    return payload, text, EXIT_OK


def _cmd_verify(args):
    items = verify_paper()
    ok = all(it["pass"] for it in items)
    return items, render_markdown(items).rstrip("\n"), EXIT_OK if ok else EXIT_FAIL


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


COMMANDS = {
    "hessian": (_cmd_hessian, "Hessian determinant of a polynomial"),
    "dhess": (_cmd_dhess, "differential of the Hessian map at f in direction g"),
    "kernel": (_cmd_kernel, "kernel of the differential of the Hessian map"),
    "kayal": (_cmd_kayal, "three-step test for equivalence to a Fermat form"),
    "classify-binary": (_cmd_classify, "singular binary forms with monomial Hessian"),
    "counterexample": (_cmd_counterexample, "verify one member of the singular counterexample family"),
    "invariants": (_cmd_invariants, "degree-k invariants of G(d,e,n)"),
    "jacobian": (_cmd_jacobian, "smoothness via the Jacobian ideal"),
    "explore": (_cmd_explore, "search for forms with monomial Hessian"),
    "verify-paper": (_cmd_verify, "run the full verification report"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="polynomial text, or a path to a file holding it")
    common.add_argument("--nvars", type=int, help="number of variables (inferred if omitted)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = _Parser(prog="hessmap", description="Exact computations around the Hessian map.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "dhess":
            p.add_argument("--direction", help="direction polynomial g")
        if name in ("kernel", "classify-binary", "invariants"):
            p.add_argument("--degree", type=int)
        if name == "classify-binary":
            p.add_argument("--trace", action="store_true", help="include the forcing trace")
        if name == "kayal":
            p.add_argument("--candidates", help="';'-separated linear forms")
        if name in ("counterexample", "invariants", "explore"):
            p.add_argument("--n", type=int)
            p.add_argument("--d", type=int)
        if name == "counterexample":
            p.add_argument("--q", type=int)
        if name == "invariants":
            p.add_argument("--e", type=int)
        if name == "explore":
            p.add_argument("--coeffs", default="-1,0,1", help="comma-separated coefficient set; write --coeffs=-1,0,1 when it starts with a minus")
            p.add_argument("--support", type=int, default=3, help="maximum number of terms")
    return parser


def _emit(args, payload, text):
    if (args.fmt or "text") == "json":
        out = report_json(payload) if args.command == "verify-paper" else (
            json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out = text + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
        handler = COMMANDS[args.command][0]
        payload, text, code = handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HessmapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args, payload, text)
    return code


if __name__ == "__main__":
    sys.exit(main())
