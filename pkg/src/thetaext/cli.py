"""Command-line front end. Reports go to stdout as JSON; exit 0 ok, 1 failed check, 2 bad input."""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import lab
from .enumeration import InstanceFilter
from .maps import (CONDITIONS, DenseMapInstance, EmptyValue, NotSingleValued, brute_force_extensions, check,
                   construct_extension)
from .mysior import (CertificateError, HullCertificate, SetExpr, claim1_check, claim2_check)
from .operators import (closure, interior, min_hull, min_nbhd, shrink, theta_closure, theta_interior)
from .ordinal import OMEGA, parse_alpha, to_json
from .separation import classify
from .space import FiniteSpace, SpaceError


class UsageError(ValueError):
    pass


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _space(args) -> FiniteSpace:
    if not args.space:
        raise UsageError("--space is required")
    return FiniteSpace.from_dict(_load_json(args.space))


def _instance(args, f_class="continuous") -> DenseMapInstance:
    if not args.instance:
        raise UsageError("--instance is required")
    return DenseMapInstance.from_dict(_load_json(args.instance), f_class=f_class,
                                      f_alpha=args.alpha if args.alpha != 0 else 1)


def _names(text: str | None) -> list[str]:
    if text is None:
        raise UsageError("--set is required")
    return [t.strip() for t in text.split(",") if t.strip()]


def _y_class(text: str | None) -> dict:
    if text is None:
        return {}
    m = re.fullmatch(r"(\w+?)(?:\((\w+)\))?", text.strip())
    if not m:
        raise UsageError(f"bad --y-class {text!r}")
    out = {"y_class": m.group(1)}
    if m.group(2):
        out["y_alpha"] = parse_alpha(m.group(2))
    return out


def _filter_overrides(args) -> dict:
    out = _y_class(args.y_class)
    if args.max_x is not None:
        out["max_x_points"] = args.max_x
    if args.max_y is not None:
        out["max_y_points"] = args.max_y
    if args.alpha_given and "y_alpha" not in out:
        out["y_alpha"] = args.alpha
    if args.f_class:
        out["f_class"] = args.f_class
    if args.homeo:
        out["up_to_homeomorphism"] = True
    return out


# commands return (report, exit code)

def cmd_validate(args):
    try:
        space = _space(args)
    except SpaceError as exc:
        report = {"valid": False, "error": type(exc).__name__, "message": str(exc)}
        if hasattr(exc, "a"):
            report["pair"] = [exc.a, exc.b]
        return report, 1
    return {"valid": True, "space": space.to_dict()}, 0


def cmd_classify(args):
    return classify(_space(args), args.max_n), 0


OPERATORS = {
    "closure": lambda sp, s, a: theta_closure(sp, s, a) if a != 0 else closure(sp, s),
    "interior": lambda sp, s, a: theta_interior(sp, s, a) if a != 0 else interior(sp, s),
    "min_nbhd": lambda sp, s, a: min_nbhd(sp, s),
    "min_hull": lambda sp, s, a: min_hull(sp, s, a),
    "shrink": lambda sp, s, a: shrink(sp, s),
}


def cmd_closure(args):
    space = _space(args)
    s = space.subset(_names(args.set))
    result = OPERATORS[args.op](space, s, args.alpha)
    return {"operator": args.op, "alpha": to_json(args.alpha), "set": s.names(), "result": result.names()}, 0


def cmd_check(args):
    if args.condition not in CONDITIONS:
        raise UsageError(f"unknown condition {args.condition!r}; known: {', '.join(CONDITIONS)}")
    f_class = "theta" if args.condition in ("plus", "plusplus") else "continuous"
    verdict = check(_instance(args, f_class), args.condition, args.alpha)
    return verdict.to_dict(), 0 if verdict.holds else 1


def cmd_extend(args):
    inst = _instance(args, "theta" if args.mode == "theta" else "continuous")
    report = {"mode": args.mode, "alpha": to_json(args.alpha)}
    ok = False
    try:
        ext = construct_extension(inst, args.alpha, args.mode)
        report["constructed"] = ext.to_dict()
        ok = ext.agrees_on_dense and (ext.continuous if args.mode == "continuous" else ext.theta_continuous)
    except (NotSingleValued, EmptyValue) as exc:
        report["constructed"] = None
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
    report["brute_force"] = brute_force_extensions(inst, args.mode, args.alpha if args.alpha != 0 else 1)
    report["exists"] = bool(report["brute_force"])
    return report, 0 if ok else 1


def cmd_verify(args):
    if not args.theorem:
        raise UsageError("--theorem is required")
    report = lab.verify(args.theorem, jobs=args.jobs, **_filter_overrides(args))
    if args.pretty:
        print(f"wall time {report.wall_time:.2f}s", file=sys.stderr)
    return report.to_dict(), 0 if report.ok else 1


def cmd_mine(args):
    if not args.condition:
        raise UsageError("--condition is required")
    flt = InstanceFilter(**_filter_overrides(args))
    matches = list(lab.mine(args.condition, flt, limit=args.limit))
    return {"condition": args.condition, "filter": flt.to_dict(), "count": len(matches),
            "matches": matches}, 1 if matches else 0


def cmd_mysior(args):
    try:
        if args.claim == 1:
            catalog = [SetExpr.from_dict(d) for d in _load_json(args.catalog)] if args.catalog else []
            alpha = 1 if args.alpha_given is False else args.alpha
            report = claim1_check(args.i_max, alpha, catalog)
            ok = report["a"]["verified"] and report["b"]["verified"] and report["c"]["status"] != "fails"
        else:
            cert = HullCertificate.from_dict(_load_json(args.certificate)) if args.certificate else None
            report = claim2_check(cert)
            ok = report["verified"]
    except CertificateError as exc:
        return {"claim": args.claim, "verified": False, "error": type(exc).__name__, "message": str(exc)}, 1
    return report, 0 if ok else 1


COMMANDS = {"validate": cmd_validate, "classify": cmd_classify, "closure": cmd_closure, "check": cmd_check,
            "extend": cmd_extend, "verify": cmd_verify, "mine": cmd_mine, "mysior": cmd_mysior}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thetaext", description=__doc__)
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--space")
    p.add_argument("--instance")
    p.add_argument("--set")
    p.add_argument("--alpha", default=None, help="natural number or omega")
    p.add_argument("--op", choices=sorted(OPERATORS), default="closure")
    p.add_argument("--condition")
    p.add_argument("--mode", choices=["continuous", "theta"], default="continuous")
    p.add_argument("--theorem")
    p.add_argument("--max-x", type=int)
    p.add_argument("--max-y", type=int)
    p.add_argument("--y-class")
    p.add_argument("--f-class", choices=["continuous", "theta", "any"])
    p.add_argument("--homeo", action="store_true", help="enumerate spaces up to homeomorphism")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--claim", type=int, choices=[1, 2], default=1)
    p.add_argument("--i-max", type=int, default=3)
    p.add_argument("--catalog")
    p.add_argument("--certificate")
    p.add_argument("--pretty", action="store_true", help="human-readable summary on stderr")
    return p


def _summary(command: str, report: dict, code: int) -> str:
    status = {0: "ok", 1: "fails"}.get(code, "error")
    keys = [k for k in ("holds", "valid", "result", "violation_count", "count", "exists", "verified") if k in report]
    details = ", ".join(f"{k}={report[k]}" for k in keys)
    return f"{command}: {status}" + (f" ({details})" if details else "")


def run(argv=None) -> int:
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        args.alpha_given = args.alpha is not None
        args.alpha = parse_alpha(args.alpha) if args.alpha is not None else (
            0 if args.command == "closure" else 1)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        report, code = COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError, TypeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(report, indent=2, ensure_ascii=False))
    if args.pretty:
        print(_summary(args.command, report, code), file=sys.stderr)
        print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
