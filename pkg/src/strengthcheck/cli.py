"""Command-line front end.

Exit codes: 0 success, 1 counterexample / bound violation / arithmetic
failure, 2 usage or configuration error.

Every JSON document has the keys ``query`` or ``check``, ``params``,
``result``, ``passed``, ``counterexamples``, ``notes``, ``seed`` and
``elapsed_ms``. ``elapsed_ms`` is null unless ``--timing`` is given, so
repeated invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import formulas, oracle, verifier
from .errors import BoundViolation, InvariantViolation, PreconditionError

FORMATS = ("table", "json", "csv")

DEFAULT_D_RANGE = (5, 12)
DEFAULT_N_RANGE = (2, 12)


def _degs(text: str) -> list[int]:
    try:
        degs = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return sorted(degs)


def _add_output(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=FORMATS, default="table", help="output format (default: table)")
    p.add_argument("--output", default="-", help="output path (default: stdout)")
    p.add_argument("--timing", action="store_true", help="report elapsed_ms (makes output nondeterministic)")


def _add_dn_ranges(p: argparse.ArgumentParser):
    p.add_argument("--d-min", type=int, default=DEFAULT_D_RANGE[0], help="default: %(default)s")
    p.add_argument("--d-max", type=int, default=DEFAULT_D_RANGE[1], help="default: %(default)s")
    p.add_argument("--n-min", type=int, default=DEFAULT_N_RANGE[0], help="default: %(default)s")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_RANGE[1], help="default: %(default)s")


def _add_oracle_opts(p: argparse.ArgumentParser):
    p.add_argument("--p", type=int, default=oracle.DEFAULT_P, help="prime modulus (default: %(default)s)")
    p.add_argument("--trials", type=int, default=oracle.DEFAULT_TRIALS, help="default: %(default)s")
    p.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED, help="default: %(default)s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strengthcheck",
        description="Dimension counts for joins of varieties of reducible forms, "
        "exhaustive inequality sweeps and a finite-field oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("slrk", help="slice rank of a general form")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_output(p)

    for name, help_ in (("bound", "upper bound on the join dimension"), ("f", "objective F")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--degs", type=_degs, required=True, help="comma-separated, e.g. 1,2")
        _add_output(p)

    p = sub.add_parser("ci-dim", help="dimension of the complete-intersection family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degs", type=_degs, required=True)
    _add_output(p)

    p = sub.add_parser("abcde", help="A and its differences B..E")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    _add_output(p)

    p = sub.add_parser("verify", help="exhaustive sweeps")
    vsub = p.add_subparsers(dest="check", required=True)
    for name in ("minimality", "edcba", "chain", "theta-reduction"):
        q = vsub.add_parser(name)
        _add_dn_ranges(q)
        _add_output(q)
    q = vsub.add_parser("theta")
    q.add_argument("--m-max", type=int, default=9, help="default: %(default)s")
    _add_output(q)
    q = vsub.add_parser("identity")
    q.add_argument("--n-max", type=int, default=4, help="default: %(default)s")
    q.add_argument("--e-max", type=int, default=10, help="default: %(default)s")
    q.add_argument("--deg-max", type=int, default=5, help="default: %(default)s")
    q.add_argument("--len-max", type=int, default=3, help="default: %(default)s")
    _add_output(q)

    p = sub.add_parser("oracle", help="finite-field Terracini oracle")
    osub = p.add_subparsers(dest="mode", required=True)
    q = osub.add_parser("join-dim")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--degs", type=_degs, required=True)
    _add_oracle_opts(q)
    _add_output(q)
    q = osub.add_parser("cross-check")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--max-r", type=int, required=True)
    _add_oracle_opts(q)
    _add_output(q)
    return parser


def _envelope(kind, name, params, result, passed, counterexamples=(), notes=(), seed=None):
    return {
        kind: name,
        "params": params,
        "result": result,
        "passed": passed,
        "counterexamples": list(counterexamples),
        "notes": list(notes),
        "seed": seed,
        "elapsed_ms": None,
    }


def _degree_notes(d):
    if d < formulas.MAIN_THEOREM_MIN_DEGREE:
        return [f"d={d} lies outside the minimality theorem (d >= 5)"]
    return []


def _query(args):
    cmd = args.command
    if cmd == "slrk":
        params = {"d": args.d, "n": args.n}
        return _envelope("query", cmd, params, formulas.generic_slice_rank(args.d, args.n), True)
    if cmd in ("bound", "f"):
        profile = formulas.JoinProfile(args.d, args.n, tuple(args.degs))
        fn = formulas.join_dim_upper_bound if cmd == "bound" else formulas.f_value
        params = {"d": args.d, "n": args.n, "degs": list(profile.degs)}
        return _envelope("query", cmd, params, fn(profile), True, notes=_degree_notes(args.d))
    if cmd == "ci-dim":
        params = {"n": args.n, "degs": args.degs}
        return _envelope("query", cmd, params, formulas.ci_dimension(args.n, args.degs), True)
    if cmd == "abcde":
        rec = formulas.abcde(args.d, args.n, args.l1, args.l2)
        params = {"d": args.d, "n": args.n, "l1": args.l1, "l2": args.l2}
        result = {k: getattr(rec, k) for k in "ABCDE"}
        return _envelope("query", cmd, params, result, True)
    raise AssertionError(f"unhandled command {cmd}")


def _ranges(args):
    if args.d_min > args.d_max or args.n_min > args.n_max:
        raise PreconditionError("empty range")
    return range(args.d_min, args.d_max + 1), range(args.n_min, args.n_max + 1)


def _verify(args):
    check = args.check
    if check == "theta":
        rep = verifier.verify_theta_inequality(args.m_max)
    elif check == "identity":
        rep = verifier.verify_identity_lemma(args.n_max, args.e_max, args.deg_max, args.len_max)
    else:
        fn = {
            "minimality": verifier.verify_minimality,
            "edcba": verifier.verify_edcba,
            "chain": verifier.verify_chain,
            "theta-reduction": verifier.verify_theta_reduction,
        }[check]
        rep = fn(*_ranges(args))
    result = {"instances": rep.instances, "counterexample_count": rep.counterexample_count}
    return _envelope("check", check, rep.params, result, rep.passed, rep.counterexamples, rep.notes)


def _oracle(args):
    base = {"d": args.d, "n": args.n, "p": args.p, "trials": args.trials, "seed": args.seed}
    if args.mode == "join-dim":
        profile = formulas.JoinProfile(args.d, args.n, tuple(args.degs))
        try:
            reports = [oracle.terracini_join_dim(profile, args.p, args.trials, args.seed)]
        except BoundViolation as exc:
            reports = [exc.report]
        params = {**base, "degs": list(profile.degs)}
    else:
        reports = oracle.cross_check(args.d, args.n, args.max_r, args.p, args.trials, args.seed)
        params = {**base, "max_r": args.max_r}
    dicts = [r.as_dict() for r in reports]
    failing = [d for d in dicts if not d["passed"]]
    result = dicts[0] if args.mode == "join-dim" else dicts
    return _envelope("query", f"oracle {args.mode}", params, result,
                     not failing, failing, _degree_notes(args.d), seed=args.seed)


def _render_table(doc) -> str:
    result = doc["result"]
    lines = []
    if "check" in doc:
        status = "PASSED" if doc["passed"] else "FAILED"
        lines.append(f"{doc['check']}: {status}")
        lines.append(f"  params: {json.dumps(doc['params'])}")
        lines.append(f"  instances: {result['instances']}")
        lines.append(f"  counterexamples: {result['counterexample_count']}")
        for cx in doc["counterexamples"]:
            lines.append(f"    {json.dumps(cx['params'])}  lhs={cx['lhs']}  rhs={cx['rhs']}")
    elif isinstance(result, int):
        lines.append(str(result))
    elif doc["query"] == "abcde":
        for k, v in result.items():
            lines.append(f"{k} {'-' if v is None else v}")
    else:
        rows = result if isinstance(result, list) else [result]
        lines.append(f"{'degs':<14}{'bound':>8}{'oracle':>8}{'hl':>8}  equal  passed")
        for r in rows:
            hl = "-" if r["hl_value"] is None else r["hl_value"]
            lines.append(
                f"{','.join(map(str, r['profile']['degs'])):<14}{r['formula_bound']:>8}"
                f"{r['oracle_value']:>8}{hl:>8}  {str(r['equality']):<5}  {r['passed']}"
            )
    for note in doc["notes"]:
        lines.append(f"note: {note}")
    if doc["elapsed_ms"] is not None:
        lines.append(f"elapsed_ms: {doc['elapsed_ms']}")
    return "\n".join(lines) + "\n"


def _render_csv(doc) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    result = doc["result"]
    if "check" in doc:
        w.writerow(["check", "params", "instances", "counterexample_count", "passed", "elapsed_ms"])
        w.writerow([doc["check"], json.dumps(doc["params"]), result["instances"],
                    result["counterexample_count"], doc["passed"], doc["elapsed_ms"]])
    elif doc["query"].startswith("oracle"):
        rows = result if isinstance(result, list) else [result]
        w.writerow(["d", "n", "degs", "formula_bound", "oracle_value", "hl_value",
                    "equality", "passed", "p", "trials", "seed"])
        for r in rows:
            pr = r["profile"]
            w.writerow([pr["d"], pr["n"], ",".join(map(str, pr["degs"])), r["formula_bound"],
                        r["oracle_value"], r["hl_value"], r["equality"], r["passed"],
                        r["p"], r["trials"], r["seed"]])
    else:
        values = result if isinstance(result, dict) else {"result": result}
        w.writerow(["query", *doc["params"], *values])
        w.writerow([doc["query"], *(json.dumps(v) if isinstance(v, list) else v
                                    for v in doc["params"].values()), *values.values()])
    return buf.getvalue()


def render(doc, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        return _render_csv(doc)
    return _render_table(doc)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    t0 = time.perf_counter()
    try:
        if args.command == "verify":
            doc = _verify(args)
        elif args.command == "oracle":
            doc = _oracle(args)
        else:
            doc = _query(args)
    except PreconditionError as exc:
        print(f"strengthcheck: error: {exc}", file=sys.stderr)
        return 2
    except (OverflowError, InvariantViolation) as exc:
        print(f"strengthcheck: arithmetic failure: {exc}", file=sys.stderr)
        return 1
    if args.timing:
        doc["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)

    text = render(doc, args.format)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return 0 if doc["passed"] else 1


def main():
    sys.exit(run())
