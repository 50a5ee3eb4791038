"""Theorem verification and counterexample mining over enumerated instances."""

from __future__ import annotations

import itertools
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator

from . import kernels
from .enumeration import (DEFAULT_CAP, X_LABELS, Y_LABELS, InstanceFilter, enumerate_topologies,
                          instances_for_x, x_spaces, y_spaces)
from .maps import (DenseMapInstance, check_pairwise, check_plus_alpha, check_plusplus_alpha,
                   check_star, check_star_alpha, extension_maps)
from .operators import closure, theta_closure
from .ordinal import OMEGA, add, parse_alpha, to_json
from .space import FiniteSpace

MAX_STORED = 100


class UnknownTheorem(ValueError):
    def __init__(self, name: str):
        super().__init__(f"unknown theorem {name!r}; known: {', '.join(THEOREMS)}")


class Facts:
    """Lazily computed checker outcomes for one instance."""

    def __init__(self, inst: DenseMapInstance):
        self.inst = inst
        self._memo = {}

    def _get(self, key, compute):
        if key not in self._memo:
            self._memo[key] = compute()
        return self._memo[key]

    def star(self):
        return self._get("star", lambda: check_star(self.inst))

    def star_alpha(self, alpha):
        return self._get(("star_alpha", alpha), lambda: check_star_alpha(self.inst, alpha))

    def plus(self, alpha):
        return self._get(("plus", alpha), lambda: check_plus_alpha(self.inst, alpha))

    def plusplus(self, alpha):
        return self._get(("plusplus", alpha), lambda: check_plusplus_alpha(self.inst, alpha))

    def pairwise(self):
        return self._get("pairwise", lambda: check_pairwise(self.inst))

    def extension(self, mode="continuous", alpha=1):
        """First valid extension as a mapping, or None."""
        def compute():
            found = extension_maps(self.inst, mode, alpha, limit=1)
            if not found:
                return None
            x, y = self.inst.x_space, self.inst.y_space
            return {x.points[i]: y.points[v] for i, v in enumerate(found[0])}
        return self._get(("ext", mode, alpha), compute)

    def non_singleton(self, alpha):
        def compute():
            table = self.inst.y_space.theta_table(alpha)
            for i, t in enumerate(self.inst.traces()):
                v = kernels.hits(table, t)
                if v & (v - 1) or not v:
                    return self.inst.x_space.points[i], self.inst.y_space.names(v)
            return None
        return self._get(("single", alpha), compute)


def _iff(lhs_name, lhs, rhs_name, rhs, witness):
    if lhs and not rhs:
        return [(f"{lhs_name} => {rhs_name}", witness())]
    if rhs and not lhs:
        return [(f"{rhs_name} => {lhs_name}", witness())]
    return []


def _witness(*verdicts, **extra):
    def build():
        out = {v.condition: v.witness for v in verdicts if v is not None and not v.holds}
        out.update(extra)
        return out
    return build


# instance theorems: (facts, alpha) -> list of (direction, witness)

def _extension_needs_star(f: Facts, alpha):
    ext = f.extension()
    if ext is not None and not f.star():
        return [("extension => star", {"extension": ext, "star": f.star().witness})]
    return []


def _star_gives_singletons(f: Facts, alpha):
    if f.star():
        bad = f.non_singleton(alpha)
        if bad is not None:
            return [("star => singleton values", {"point": bad[0], "value": bad[1]})]
    return []


def _extension_iff_star_pair(f: Facts, alpha):
    ext = f.extension()
    rhs = f.star().holds and f.star_alpha(alpha).holds
    return _iff("extension", ext is not None, "star & star_alpha", rhs,
                _witness(f.star(), f.star_alpha(alpha), extension=ext))


def _star_gives_star_alpha(f: Facts, alpha):
    if f.star() and not f.star_alpha(alpha):
        return [("star => star_alpha", {"star_alpha": f.star_alpha(alpha).witness})]
    return []


def _extension_iff_star(f: Facts, alpha):
    ext = f.extension()
    return _iff("extension", ext is not None, "star", f.star().holds,
                _witness(f.star(), extension=ext))


def _theta_extension_iff_plus_pair(f: Facts, alpha):
    ext = f.extension("theta", alpha)
    rhs = f.plus(alpha).holds and f.plusplus(alpha).holds
    return _iff("theta_extension", ext is not None, "plus & plusplus", rhs,
                _witness(f.plus(alpha), f.plusplus(alpha), extension=ext))


def _extension_iff_pairwise(f: Facts, alpha):
    ext = f.extension()
    out = _iff("extension", ext is not None, "pairwise", f.pairwise().holds,
               _witness(f.pairwise(), extension=ext))
    out += _iff("pairwise", f.pairwise().holds, "star", f.star().holds,
                _witness(f.pairwise(), f.star()))
    return out


def _extension_iff_star_regular(f: Facts, alpha):
    return _extension_iff_star(f, alpha)


# space theorems

DEPTHS = (0, 1, 2, OMEGA)


def _composition_law(space: FiniteSpace, alpha):
    out = []
    for m in range(space.full + 1):
        s = space.pset(m)
        for outer, inner in itertools.product(DEPTHS, repeat=2):
            lhs = theta_closure(space, theta_closure(space, s, inner), outer)
            rhs = theta_closure(space, s, add(outer, inner))
            if lhs != rhs:
                out.append(("composition", {"set": s.names(), "outer": to_json(outer),
                                            "inner": to_json(inner), "composed": lhs.names(),
                                            "direct": rhs.names()}))
    return out


def _theta_monotone_space(space: FiniteSpace, alpha):
    out = []
    for m in range(space.full + 1):
        s = space.pset(m)
        for lo, hi in itertools.combinations(DEPTHS, 2):
            if not theta_closure(space, s, lo) <= theta_closure(space, s, hi):
                out.append(("monotone in depth", {"set": s.names(), "lower": to_json(lo),
                                                  "upper": to_json(hi)}))
    return out


MAP_DEPTHS = (1, 2, 3, OMEGA)


def _theta_monotone_map(x: FiniteSpace, y: FiniteSpace, fmap, alpha):
    ok = [kernels.maps_into(x.nbhd, y.theta_table(a), fmap, x.full) < 0 for a in MAP_DEPTHS]
    out = []
    for (i, lo), (j, hi) in itertools.combinations(enumerate(MAP_DEPTHS), 2):
        if ok[i] and not ok[j]:
            out.append((f"theta_{to_json(lo)} => theta_{to_json(hi)}", {}))
    return out


def _collapse_space(y: FiniteSpace, alpha):
    out = []
    for m in range(y.full + 1):
        s = y.pset(m)
        if theta_closure(y, s, alpha) != closure(y, s):
            out.append(("theta closure = closure", {"set": s.names()}))
    return out


def _collapse_map(x: FiniteSpace, y: FiniteSpace, fmap, alpha):
    theta = kernels.maps_into(x.nbhd, y.theta_table(alpha), fmap, x.full) < 0
    cont = kernels.maps_into(x.nbhd, y.nbhd, fmap, x.full) < 0
    if theta and not cont:
        return [("theta_alpha-continuous => continuous", {})]
    return []


@dataclass(frozen=True)
class Theorem:
    id: str
    kind: str  # "instance", "space" or "maps"
    defaults: dict
    check: Callable
    space_check: Callable | None = None
    observe_unless: str | None = None  # y_class outside which mismatches are only observed
    statement: str = ""


THEOREMS = {t.id: t for t in [
    Theorem("prop_1_4", "instance", {}, _extension_needs_star,
            statement="a continuous extension forces condition (*)"),
    Theorem("prop_3_2", "instance", {"y_class": "u_alpha"}, _star_gives_singletons,
            statement="U(alpha) codomain and (*): every candidate value is a singleton"),
    Theorem("thm_3_3", "instance", {"y_class": "u_alpha"}, _extension_iff_star_pair,
            statement="U(alpha) codomain: extension iff (*) and (*_alpha)"),
    Theorem("prop_3_6", "instance", {"y_class": "regular_u_alpha"}, _star_gives_star_alpha,
            statement="regular-U(alpha) codomain: (*) implies (*_alpha)"),
    Theorem("thm_3_7", "instance", {"y_class": "regular_u_alpha"}, _extension_iff_star,
            statement="regular-U(alpha) codomain: extension iff (*)"),
    Theorem("thm_4_2", "instance", {"y_class": "u_alpha", "f_class": "theta"}, _theta_extension_iff_plus_pair,
            statement="U(alpha) codomain, theta_alpha-continuous f: theta_alpha extension iff (+) and (++)"),
    Theorem("thm_1_1", "instance", {"y_class": "discrete"}, _extension_iff_pairwise, observe_unless="discrete",
            statement="compact Hausdorff (finite discrete) codomain: extension iff pairwise condition"),
    Theorem("thm_1_2", "instance", {"y_class": "regular"}, _extension_iff_star_regular,
            statement="regular codomain: extension iff (*)"),
    Theorem("composition_law", "space", {}, None, _composition_law,
            statement="cl_a(cl_b M) = cl_(a+b) M for a, b in {0, 1, 2, omega}"),
    Theorem("theta_monotone", "maps", {}, _theta_monotone_map, _theta_monotone_space,
            statement="closure grows with depth; theta_beta-continuous implies theta_alpha for beta < alpha"),
    Theorem("regular_u_collapse", "maps", {"y_class": "regular_u_alpha"}, _collapse_map, _collapse_space,
            statement="regular-U(alpha) codomain: theta_alpha-continuity is continuity, cl_alpha = cl"),
]}


@dataclass
class VerificationReport:
    theorem: str
    alpha: object
    filter: dict
    instances_checked: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)
    observation_count: int = 0
    observations: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def to_dict(self, include_time: bool = False) -> dict:
        d = {
            "theorem": self.theorem,
            "alpha": to_json(self.alpha),
            "filter": self.filter,
            "instances_checked": self.instances_checked,
            "violation_count": self.violation_count,
            "violations": self.violations,
            "observation_count": self.observation_count,
            "observations": self.observations,
        }
        if include_time:
            d["wall_time"] = self.wall_time
        return d


def resolve(theorem_id: str, flt: InstanceFilter | None = None, **overrides) -> tuple[Theorem, InstanceFilter]:
    try:
        thm = THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None
    if flt is None:
        settings = {**thm.defaults, **overrides}
        if settings.get("f_class") == "theta" and "f_alpha" not in overrides:
            # theta_alpha-continuity of f at the same depth as the codomain
            settings["f_alpha"] = settings.get("y_alpha", 1)
        flt = InstanceFilter(**settings)
    elif overrides:
        flt = replace(flt, **overrides)
    return thm, flt


def _total_maps(x: FiniteSpace, y: FiniteSpace) -> Iterator[list[int]]:
    for values in itertools.product(range(y.n), repeat=x.n):
        yield list(values)


def _shard(args) -> tuple[int, list, int, list]:
    """Run one theorem over the instances of one shard of domain spaces."""
    theorem_id, flt, alpha, xs, cap = args
    thm = THEOREMS[theorem_id]
    count, violations, observed = 0, [], []
    observe = thm.observe_unless
    if thm.kind == "instance":
        ys = y_spaces(flt, cap)
        for x in xs:
            for inst in instances_for_x(x, ys, flt):
                found = thm.check(Facts(inst), alpha)
                if found:
                    target = observed if observe and not _in_class(inst.y_space, observe) else violations
                    for direction, witness in found:
                        target.append((count, {"instance": inst.to_dict(), "direction": direction,
                                               "witness": witness}))
                count += 1
    elif thm.kind == "space":
        for x in xs:
            for direction, witness in thm.space_check(x, alpha):
                violations.append((count, {"space": x.to_dict(), "direction": direction,
                                           "witness": witness}))
            count += 1
    else:
        ys = y_spaces(flt, cap)
        for x in xs:
            for y in ys:
                for fmap in _total_maps(x, y):
                    for direction, witness in thm.check(x, y, fmap, alpha):
                        violations.append((count, {"x_space": x.to_dict(), "y_space": y.to_dict(),
                                                   "map": {x.points[i]: y.points[v] for i, v in enumerate(fmap)},
                                                   "direction": direction, "witness": witness}))
                    count += 1
    return count, violations, len(observed), observed


def _in_class(y: FiniteSpace, y_class: str) -> bool:
    return InstanceFilter(y_class=y_class).y_ok(y)


def verify(theorem_id: str, flt: InstanceFilter | None = None, alpha=None, jobs: int = 1,
           cap: int = DEFAULT_CAP, max_stored: int = MAX_STORED, **overrides) -> VerificationReport:
    """Run a theorem over every enumerated instance of the filter.

    ``alpha`` defaults to the filter's ``y_alpha``. With ``jobs > 1`` the
    domain spaces are split into shards checked in worker processes; the
    merged report is identical to the single-process one.
    """
    start = time.perf_counter()
    thm, flt = resolve(theorem_id, flt, **overrides)
    alpha = flt.y_alpha if alpha is None else parse_alpha(alpha)
    report = VerificationReport(theorem_id, alpha, flt.to_dict())
    xs = x_spaces(flt, cap)
    shards = [(theorem_id, flt, alpha, [x], cap) for x in xs]
    if jobs > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_shard, shards, chunksize=max(1, len(shards) // (4 * jobs))))
    else:
        results = [_shard(s) for s in shards]
    offset = 0
    for count, violations, n_obs, observed in results:
        for local, entry in violations:
            report.violation_count += 1
            if len(report.violations) < max_stored:
                report.violations.append({"ordinal": offset + local, **entry})
        for local, entry in observed:
            report.observation_count += 1
            if len(report.observations) < max_stored:
                report.observations.append({"ordinal": offset + local, **entry})
        offset += count
    report.instances_checked = offset
    if thm.kind == "maps" and thm.space_check is not None:
        # codomain-side half of the theorem, on the codomain spaces alone
        for y in y_spaces(flt, cap):
            for direction, witness in thm.space_check(y, alpha):
                report.violation_count += 1
                if len(report.violations) < max_stored:
                    report.violations.append({"ordinal": None, "space": y.to_dict(),
                                              "direction": direction, "witness": witness})
    report.wall_time = time.perf_counter() - start
    return report


def replay(theorem_id: str, violation: dict, alpha=1, f_class: str = "continuous", f_alpha=1) -> list[dict]:
    """Re-run a theorem check on the object embedded in a report entry."""
    thm = THEOREMS[theorem_id]
    alpha = parse_alpha(alpha)
    if "instance" in violation:
        inst = DenseMapInstance.from_dict(violation["instance"], f_class=f_class, f_alpha=f_alpha)
        found = thm.check(Facts(inst), alpha)
    elif "space" in violation:
        found = thm.space_check(FiniteSpace.from_dict(violation["space"]), alpha)
    else:
        x = FiniteSpace.from_dict(violation["x_space"])
        y = FiniteSpace.from_dict(violation["y_space"])
        fmap = [y.index(violation["map"][p]) for p in x.points]
        found = thm.check(x, y, fmap, alpha)
    return [{"direction": d, "witness": w} for d, w in found]


# mining

_TOKEN = re.compile(r"\s*(?:(?P<op>¬|!|~|∧|&|∨|\||\(|\))|(?P<word>[A-Za-z_][A-Za-z0-9_]*(?:\([A-Za-z0-9]+\))?))")
_ATOMS = ("star", "star_alpha", "plus", "plusplus", "pairwise", "extension_exists",
          "theta_extension_exists", "singleton_values")


def _atom(word: str, default_alpha):
    m = re.fullmatch(r"([a-z_]+?)(?:\((\w+)\)|_(\d+|omega))?", word)
    if not m or m.group(1) not in _ATOMS:
        raise ValueError(f"unknown condition atom {word!r}")
    name = m.group(1)
    alpha = parse_alpha(m.group(2) or m.group(3)) if (m.group(2) or m.group(3)) else default_alpha
    return name, alpha


def _eval_atom(facts: Facts, name: str, alpha) -> bool:
    if name == "star":
        return facts.star().holds
    if name == "star_alpha":
        return facts.star_alpha(alpha).holds
    if name == "plus":
        return facts.plus(alpha).holds
    if name == "plusplus":
        return facts.plusplus(alpha).holds
    if name == "pairwise":
        return facts.pairwise().holds
    if name == "extension_exists":
        return facts.extension() is not None
    if name == "theta_extension_exists":
        return facts.extension("theta", alpha) is not None
    return facts.non_singleton(alpha) is None


def parse_condition(text: str, default_alpha=1) -> Callable[[Facts], bool]:
    """Compile a boolean combination of checker outcomes.

    Atoms: star, star_alpha, plus, plusplus, pairwise, extension_exists,
    theta_extension_exists, singleton_values; depth as ``plus_1`` or
    ``star_alpha(omega)``. Operators: ¬ ! ~ (not), ∧ & (and), ∨ | (or).
    ``and``/``or``/``not`` are accepted as words.
    """
    source = text
    text = text.replace(" and ", " & ").replace(" or ", " | ")
    text = re.sub(r"\bnot\s+", "!", text)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse condition at {text[pos:]!r}")
        tokens.append(m.group("op") or ("atom", _atom(m.group("word"), default_alpha)))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def parse_or(i):
        left, i = parse_and(i)
        while i < len(tokens) and tokens[i] in ("∨", "|"):
            right, i = parse_and(i + 1)
            left = (lambda a, b: lambda f: a(f) or b(f))(left, right)
        return left, i

    def parse_and(i):
        left, i = parse_not(i)
        while i < len(tokens) and tokens[i] in ("∧", "&"):
            right, i = parse_not(i + 1)
            left = (lambda a, b: lambda f: a(f) and b(f))(left, right)
        return left, i

    def parse_not(i):
        if i < len(tokens) and tokens[i] in ("¬", "!", "~"):
            inner, i = parse_not(i + 1)
            return (lambda a: lambda f: not a(f))(inner), i
        if i < len(tokens) and tokens[i] == "(":
            inner, i = parse_or(i + 1)
            if i >= len(tokens) or tokens[i] != ")":
                raise ValueError("unbalanced parentheses in condition")
            return inner, i + 1
        if i < len(tokens) and isinstance(tokens[i], tuple):
            name, alpha = tokens[i][1]
            return (lambda n, a: lambda f: _eval_atom(f, n, a))(name, alpha), i + 1
        raise ValueError(f"condition {source!r} is incomplete")

    expr, end = parse_or(0)
    if end != len(tokens):
        raise ValueError(f"trailing tokens in condition {source!r}")
    return expr


def mine(condition: str, flt: InstanceFilter, alpha=None, cap: int = DEFAULT_CAP,
         limit: int | None = None) -> Iterator[dict]:
    """Yield ``{"ordinal", "instance"}`` for every instance matching the condition."""
    alpha = flt.y_alpha if alpha is None else parse_alpha(alpha)
    pred = parse_condition(condition, alpha)
    ys = y_spaces(flt, cap)
    ordinal = 0
    found = 0
    for x in x_spaces(flt, cap):
        for inst in instances_for_x(x, ys, flt):
            if pred(Facts(inst)):
                yield {"ordinal": ordinal, "instance": inst.to_dict()}
                found += 1
                if limit is not None and found >= limit:
                    return
            ordinal += 1


__all__ = ["THEOREMS", "Theorem", "VerificationReport", "UnknownTheorem", "verify", "replay",
           "mine", "parse_condition", "Facts", "X_LABELS", "Y_LABELS", "enumerate_topologies"]
