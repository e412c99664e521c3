"""Command line front end.

    chitop run PROBLEM [--trace] [--oracle-check] [--project-order x,y,..]
                       [--max-depth N] [--parallel N]
    chitop bounds FAMILY P1 P2 ...
    chitop mmp RUN.json

Every command prints one JSON document (schema in ``data/result.schema.json``).
Work is reported as operation counters rather than wall-clock time so that
output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .bounds import FAMILIES, bound_value
from .errors import ChitopError, PreconditionError, ProblemParseError, ResourceBudgetExceeded
from .eulerchar import EulerConfig, EulerEngine
from .exactmath import gcd_univariate, squarefree_part, univariate_degree
from .mmp import run_ledger
from .polyparse import ProblemFile, parse_problem
from .resultant import common_zero_count, distinct_root_count
from .wps import CyclicQuotientLocus, QuotientEngine, WeightedLocus

EXIT_CODES = {"ok": 0, "parse": 2, "precondition": 3, "resource_budget": 4, "groebner_budget": 4, "internal": 5}


class OracleMismatch(ChitopError):
    code = "oracle_mismatch"


def _config(args, vars) -> EulerConfig:
    cfg = EulerConfig()
    if getattr(args, "project_order", None):
        order = tuple(v for v in args.project_order.replace(",", " ").split())
        if sorted(order) != sorted(vars):
            raise PreconditionError(f"--project-order {order} is not a permutation of {tuple(vars)}")
        cfg.order = order
    if getattr(args, "max_depth", None) is not None:
        cfg.max_depth = args.max_depth
    return cfg


def _add_counters(total: dict, part: dict):
    for k, v in part.items():
        total[k] = total.get(k, 0) + v


def _eval_stratum(config: EulerConfig, rep):
    engine = EulerEngine(config)
    return engine.evaluate_report(rep), engine.counters.as_dict()


def _affine(problem: ProblemFile, cfg: EulerConfig, trace: bool, parallel: int) -> tuple:
    engine = EulerEngine(cfg)
    trivial, reports = engine.plan(problem.vars, problem.gens)
    work = engine.counters.as_dict()
    if trivial is not None:
        return trivial, [], work
    live = [r for r in reports if r.fiber_kind != "empty" and r.multiplier != 0]
    if parallel > 1:
        # each stratum gets its own engine, so counters do not depend on scheduling
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_eval_stratum, [cfg] * len(live), live))
        for rep, (chi, counters) in zip(live, results):
            rep.chi = chi
            _add_counters(work, counters)
    else:
        for rep in live:
            rep.chi = engine.evaluate_report(rep)
        work = engine.counters.as_dict()
    chi = sum(r.multiplier * r.chi for r in live)
    return chi, [r.to_dict() for r in reports] if trace else [], work


def _oracle(name, value, expected) -> dict:
    return {"method": name, "value": value, "agrees": value == expected}


def solve(problem: ProblemFile, args) -> dict:
    """Run one problem and return the result document (without status fields)."""
    trace = getattr(args, "trace", False)
    check = getattr(args, "oracle_check", False)
    parallel = getattr(args, "parallel", 1) or 1
    doc = {"mode": problem.mode, "vars": list(problem.vars)}
    mode = problem.mode

    if mode in ("affine", "quotient", "wps"):
        cfg = _config(args, problem.vars)
        if mode == "affine":
            chi, strata, work = _affine(problem, cfg, trace, parallel)
            if trace:
                doc["trace"] = {"strata": strata}
            if check:
                alt = EulerConfig(**{**cfg.__dict__, "order": tuple(reversed(problem.vars)),
                                     "rank_method": "minors"})
                doc["oracle"] = _oracle("reversed order, minors-ideal rank strata",
                                        EulerEngine(alt).closed(problem.vars, problem.gens), chi)
        elif mode == "quotient":
            m, w = problem.quotient
            CyclicQuotientLocus.of(m, w, problem.vars, problem.gens)  # checks semi-invariance
            q = QuotientEngine(cfg)
            chi = q.quotient_cover(m, w, problem.vars, problem.gens)
            work = q.engine.counters.as_dict()
            if trace:
                doc["trace"] = {"order": m, "action": list(w)}
            if check:
                doc["oracle"] = _oracle("group average", QuotientEngine(cfg, method="average")
                                        .quotient_average(m, w, problem.vars, problem.gens), chi)
        else:
            WeightedLocus.of(problem.weights, problem.gens, problem.vars)  # checks homogeneity
            q = QuotientEngine(cfg)
            log = [] if trace else None
            chi = q.wps(problem.weights, problem.vars, problem.gens, log)
            work = q.engine.counters.as_dict()
            if trace:
                doc["trace"] = {"charts": log}
            if check:
                doc["oracle"] = _oracle("group average charts", QuotientEngine(cfg, method="average")
                                        .wps(problem.weights, problem.vars, problem.gens), chi)
        doc["chi"] = chi
        doc["work"] = work
    elif mode in ("resultant", "roots"):
        gens = problem.gens
        if mode == "resultant":
            value = common_zero_count(gens)
            expected = univariate_degree(gcd_univariate(gens))
            doc["common_zero_count"] = value
            name = "degree of the Euclidean gcd"
        else:
            value = distinct_root_count(gens)
            expected = univariate_degree(squarefree_part(gcd_univariate(gens)))
            doc["distinct_root_count"] = value
            name = "degree of the squarefree gcd"
        doc["value"] = value
        if check:
            doc["oracle"] = _oracle(name, expected, value)
    elif mode == "bounds":
        fam = problem.options.get("family")
        params = problem.options.get("params", "")
        if fam is None:
            raise PreconditionError("bounds mode needs 'option: family = ...'")
        doc["family"] = fam
        doc["parameters"] = [int(p) for p in params.split()]
        doc["value"] = bound_value(fam, *doc["parameters"])
    elif mode == "mmp":
        path = problem.options.get("run")
        if path is None:
            raise PreconditionError("mmp mode needs 'option: run = file.json'")
        base = Path(getattr(args, "problem", ".")).parent
        doc.update(_mmp_doc(base / path))
    if check and "oracle" in doc and not doc["oracle"]["agrees"]:
        raise OracleMismatch(f"oracle disagrees: {doc['oracle']}")
    return doc


def _mmp_doc(path: Path) -> dict:
    try:
        run = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ProblemParseError(f"bad run file: {exc.msg}", exc.lineno, exc.colno) from None
    return {"mode": "mmp", **run_ledger(run)}


def _error_doc(exc: Exception) -> dict:
    code = getattr(exc, "code", "internal") if isinstance(exc, ChitopError) else "internal"
    err = {"code": code, "message": str(exc)}
    if isinstance(exc, ProblemParseError):
        err["line"] = exc.line
        err["column"] = exc.column
    return {"status": "error", "error": err}


def _emit(doc: dict, out):
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chitop", description="Exact Euler characteristics and MMP Betti ledgers.")
    sub = ap.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="solve a problem file")
    run.add_argument("problem")
    run.add_argument("--trace", action="store_true", help="include the stratification")
    run.add_argument("--oracle-check", action="store_true", help="recompute with an independent method")
    run.add_argument("--project-order", help="projection order, e.g. x,y,z")
    run.add_argument("--max-depth", type=int, help="recursion depth limit")
    run.add_argument("--parallel", type=int, default=1, help="worker processes for top-level strata")
    b = sub.add_parser("bounds", help="evaluate a bound constant")
    b.add_argument("family", choices=sorted(FAMILIES))
    b.add_argument("params", nargs="*", type=int)
    m = sub.add_parser("mmp", help="replay and validate an MMP run file")
    m.add_argument("run")
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            try:
                text = Path(args.problem).read_text()
            except OSError as exc:
                raise ProblemParseError(f"cannot read {args.problem}: {exc.strerror}") from None
            doc = solve(parse_problem(text), args)
        elif args.command == "bounds":
            doc = {"mode": "bounds", "family": args.family, "parameters": args.params,
                   "value": bound_value(args.family, *args.params)}
        else:
            try:
                doc = _mmp_doc(Path(args.run))
            except OSError as exc:
                raise ProblemParseError(f"cannot read {args.run}: {exc.strerror}") from None
        doc["status"] = "ok"
    except OracleMismatch as exc:
        _emit(_error_doc(exc), out)
        return 5
    except ChitopError as exc:
        _emit(_error_doc(exc), out)
        return EXIT_CODES.get(exc.code, 5)
    except RecursionError:
        _emit(_error_doc(ResourceBudgetExceeded("Python recursion limit reached")), out)
        return 4
    except Exception as exc:  # noqa: BLE001 - every failure becomes a coded document
        _emit({"status": "error", "error": {"code": "internal", "message": f"{type(exc).__name__}: {exc}"}}, out)
        return 5
    _emit(doc, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
