"""Betti-number bookkeeping along a run of threefold MMP steps.

A run is a starting state plus a list of steps (divisorial contractions to a
point or to an lci curve, flips, flops).  ``apply_step`` pushes the Betti
vector through one step; ``validate_run`` checks a replayed or user-supplied
sequence of states against every inequality the steps must respect.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .bounds import bound_Dprime, bound_Phi, bound_PhiBar
from .catalog import CatalogEntry, catalog_entry
from .errors import PreconditionError

DIVISORIAL = ("div_to_point", "div_to_curve_lci")
STEP_KINDS = DIVISORIAL + ("flip", "flop")


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise PreconditionError(f"empty interval [{self.lo}, {self.hi}]")

    def shift(self, delta: int) -> "Interval":
        return Interval(self.lo + delta, self.hi + delta)

    def __contains__(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def to_json(self):
        return [self.lo, self.hi]


B3 = Union[int, Interval]


def _lo(x: B3) -> int:
    return x.lo if isinstance(x, Interval) else x


def _hi(x: B3) -> int:
    return x.hi if isinstance(x, Interval) else x


@dataclass(frozen=True)
class BettiVector:
    """b_0..b_6 of a projective threefold; b_3 may be known only up to an interval."""

    b: tuple

    def __init__(self, values: Sequence):
        vals = list(values)
        if len(vals) != 7:
            raise PreconditionError(f"need 7 Betti numbers, got {len(vals)}")
        out = []
        for i, v in enumerate(vals):
            if i == 3 and isinstance(v, (list, tuple, Interval)):
                v = v if isinstance(v, Interval) else Interval(*v)
                if v.lo < 0:
                    raise PreconditionError(f"b3 interval {v} has a negative end")
                if v.lo == v.hi:
                    v = v.lo
            elif not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise PreconditionError(f"b{i} must be a natural number, got {v!r}")
            out.append(v)
        object.__setattr__(self, "b", tuple(out))

    def __getitem__(self, i):
        return self.b[i]

    @property
    def exact(self) -> bool:
        return not isinstance(self.b[3], Interval)

    def chi(self):
        """Alternating sum; an Interval when b3 is."""
        rest = self.b[0] - self.b[1] + self.b[2] + self.b[4] - self.b[5] + self.b[6]
        b3 = self.b[3]
        if isinstance(b3, Interval):
            return Interval(rest - b3.hi, rest - b3.lo)
        return rest - b3

    def to_json(self) -> list:
        return [x.to_json() if isinstance(x, Interval) else x for x in self.b]

    def __str__(self):
        return "(" + ",".join(f"[{x.lo},{x.hi}]" if isinstance(x, Interval) else str(x) for x in self.b) + ")"


@dataclass(frozen=True)
class ThreefoldState:
    betti: BettiVector
    dep: int
    rho: int
    aw: int = 0
    xi: int = 0

    def __post_init__(self):
        for name in ("dep", "rho", "aw", "xi"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise PreconditionError(f"{name} must be a natural number, got {v!r}")

    @classmethod
    def of(cls, betti, dep=0, rho=1, aw=0, xi=0):
        return cls(betti if isinstance(betti, BettiVector) else BettiVector(betti), dep, rho, aw, xi)

    @property
    def chi(self):
        return self.betti.chi()

    def to_dict(self) -> dict:
        chi = self.chi
        return {"betti": self.betti.to_json(), "chi": chi.to_json() if isinstance(chi, Interval) else chi,
                "dep": self.dep, "rho": self.rho, "aw": self.aw, "xi": self.xi}

    @classmethod
    def from_dict(cls, d: dict) -> "ThreefoldState":
        return cls.of(d["betti"], d.get("dep", 0), d.get("rho", 1), d.get("aw", 0), d.get("xi", 0))


@dataclass(frozen=True)
class StepRecord:
    """One step X -> W of a run.

    ``div_to_point`` needs ``chi_e`` or a catalog reference whose sample
    (or ``params``) lets chi(E) be computed; ``div_to_curve_lci`` needs
    ``chi_c``.  ``dep_after``, ``aw_after``, ``xi_after`` override the
    defaults for the invariants of W.
    """

    kind: str
    chi_e: Optional[int] = None
    chi_c: Optional[int] = None
    catalog: Optional[str] = None
    params: Optional[dict] = field(default=None, compare=False)
    dep_after: Optional[int] = None
    aw_after: Optional[int] = None
    xi_after: Optional[int] = None

    def __post_init__(self):
        if self.kind not in STEP_KINDS:
            raise PreconditionError(f"unknown step kind {self.kind!r}")
        if self.kind == "div_to_point" and self.chi_e is None and self.catalog is None:
            raise PreconditionError("a contraction to a point needs chi_e or a catalog entry")
        if self.kind == "div_to_curve_lci" and self.chi_c is None:
            raise PreconditionError("a contraction to a curve needs chi_c")

    @property
    def divisorial(self) -> bool:
        return self.kind in DIVISORIAL

    def exceptional_chi(self) -> int:
        if self.chi_e is not None:
            return self.chi_e
        return chi_e_from_catalog(catalog_entry(self.catalog), self.params)

    def b3_delta(self) -> int:
        if self.kind == "div_to_point":
            return self.exceptional_chi() - 3
        if self.kind == "div_to_curve_lci":
            return self.chi_c - 2
        return 0

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}

    @classmethod
    def from_dict(cls, d: dict) -> "StepRecord":
        known = set(cls.__dataclass_fields__)
        extra = set(d) - known
        if extra:
            raise PreconditionError(f"unknown step fields {sorted(extra)}")
        return cls(**d)


_chi_e_cache: dict = {}


def chi_e_from_catalog(entry: CatalogEntry, params: Optional[dict] = None) -> int:
    """chi of the exceptional divisor for a catalog row instantiated by ``params`` or the row's sample.

    ``params`` (like a sample) holds ``vars``, ``order``, ``action``,
    ``equations`` and ``sigma``.
    """
    from .polyparse import parse_poly
    from .wps import CyclicQuotientLocus, exceptional_divisor_chi

    inst = params or entry.sample
    if inst is None:
        raise PreconditionError(f"catalog row {entry.id!r} has no sample; pass explicit parameters")
    missing = {"vars", "equations", "sigma"} - set(inst)
    if missing:
        raise PreconditionError(f"parameters for {entry.id!r} lack {sorted(missing)}")
    key = json.dumps({k: inst[k] for k in ("vars", "order", "action", "equations", "sigma") if k in inst},
                     sort_keys=True)
    if key not in _chi_e_cache:
        vars = tuple(inst["vars"])
        gens = [parse_poly(e, vars) for e in inst["equations"]]
        order = inst.get("order", 1)
        action = inst.get("action", [0] * len(vars))
        q = CyclicQuotientLocus.of(order, action, vars, gens)
        _chi_e_cache[key] = exceptional_divisor_chi(q, inst["sigma"]).chi_e
    return _chi_e_cache[key]


def apply_step(s: ThreefoldState, step: StepRecord, coarse: bool = False) -> ThreefoldState:
    """State of W after the step X -> W.

    With ``coarse`` a contraction to a point ignores its chi(E) and only uses
    |chi(E) - 1| <= D'(dep), so b3 becomes an interval.
    """
    b = list(s.betti.b)
    dep, rho = s.dep, s.rho
    if step.kind == "flop":
        new_dep = s.dep if step.dep_after is None else step.dep_after
    elif step.kind == "flip":
        if s.dep == 0:
            raise PreconditionError("a Gorenstein terminal threefold (depth 0) has no flips")
        new_dep = s.dep - 1 if step.dep_after is None else step.dep_after
        if new_dep >= s.dep:
            raise PreconditionError(f"a flip must lower the depth, got {s.dep} -> {new_dep}")
        b[3] = Interval(0, _hi(b[3]) + bound_Phi(s.dep))
    else:
        if b[2] == 0 or b[4] == 0 or rho == 0:
            raise PreconditionError("b2, b4 and rho must be positive before a divisorial contraction")
        b[2] -= 1
        b[4] -= 1
        rho -= 1
        if coarse and step.kind == "div_to_point":
            spread = bound_Dprime(s.dep)
            if _hi(b[3]) - 2 + spread < 0:
                raise PreconditionError("b3 would become negative")
            b[3] = Interval(max(0, _lo(b[3]) - 2 - spread), _hi(b[3]) - 2 + spread)
        else:
            delta = step.b3_delta()
            if _hi(b[3]) + delta < 0:
                raise PreconditionError(f"b3 would become negative ({b[3]} + {delta})")
            b[3] = b[3] + delta if isinstance(b[3], int) else Interval(max(0, b[3].lo + delta), b[3].hi + delta)
        new_dep = s.dep if step.dep_after is None else step.dep_after
        if step.kind == "div_to_point" and new_dep > s.dep + 1:
            raise PreconditionError(f"a contraction to a point raises the depth by at most one, got {s.dep} -> {new_dep}")
    xi = min(s.xi, 2 * new_dep) if step.xi_after is None else step.xi_after
    aw = min(s.aw, xi) if step.aw_after is None else step.aw_after
    return ThreefoldState(BettiVector(b), new_dep, rho, aw, xi)


def invert_step(w: ThreefoldState, step: StepRecord, dep: Optional[int] = None,
                aw: Optional[int] = None, xi: Optional[int] = None) -> ThreefoldState:
    """Recover X from W for a divisorial step (the Betti part is determined by the step)."""
    if not step.divisorial:
        raise PreconditionError("only divisorial steps can be inverted")
    b = list(w.betti.b)
    b[2] += 1
    b[4] += 1
    delta = step.b3_delta()
    b[3] = b[3] - delta if isinstance(b[3], int) else b[3].shift(-delta)
    return ThreefoldState(BettiVector(b), w.dep if dep is None else dep, w.rho + 1,
                          w.aw if aw is None else aw, w.xi if xi is None else xi)


def replay(initial: ThreefoldState, steps: Sequence[StepRecord], coarse: bool = False) -> list:
    states = [initial]
    for st in steps:
        states.append(apply_step(states[-1], st, coarse))
    return states


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    code: str
    index: int
    message: str

    def to_dict(self):
        return {"code": self.code, "index": self.index, "message": self.message}


@dataclass
class RunReport:
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set:
        return {v.code for v in self.violations}

    def to_dict(self):
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations],
                "warnings": [w.to_dict() for w in self.warnings]}


def validate_run(states: Sequence[ThreefoldState], steps: Sequence[StepRecord]) -> RunReport:
    """Check a run X_0 -> ... -> X_m against the step rules; violations are returned, not raised."""
    if len(states) != len(steps) + 1:
        raise PreconditionError(f"{len(steps)} steps need {len(steps) + 1} states, got {len(states)}")
    rep = RunReport()
    bad = lambda code, i, msg: rep.violations.append(Violation(code, i, msg))
    x0 = states[0]
    for i, s in enumerate(states):
        for j in (0, 1, 5, 6):
            if s.betti[j] != x0.betti[j]:
                bad("constant_betti", i, f"b{j} changed from {x0.betti[j]} to {s.betti[j]}")
        if s.xi > 2 * s.dep:
            bad("xi_depth", i, f"Xi = {s.xi} exceeds 2*dep = {2 * s.dep}")
        if s.dep > x0.rho:
            bad("depth_rho", i, f"dep = {s.dep} exceeds rho(X_0) = {x0.rho}")
        if s.aw > s.xi:
            bad("aw_xi", i, f"aw = {s.aw} exceeds Xi = {s.xi}")
        elif s.aw == s.xi and s.xi > 0:
            rep.warnings.append(Violation("aw_xi", i, f"aw = Xi = {s.xi}; expected strict inequality"))

    ceiling = _hi(x0.betti[3]) + bound_PhiBar(x0.rho)
    for i, s in enumerate(states):
        if _hi(s.betti[3]) > ceiling:
            bad("b3_bound", i, f"b3 upper end {_hi(s.betti[3])} exceeds b3(X_0) + PhiBar(rho)")

    moves = sum(1 for st in steps if st.kind != "flop")
    if moves > 2 * x0.rho:
        bad("step_count", len(steps), f"{moves} non-flop steps exceed 2*rho(X_0) = {2 * x0.rho}")

    for i, st in enumerate(steps):
        x, w = states[i], states[i + 1]
        drop = 1 if st.divisorial else 0
        for j in (2, 4):
            if w.betti[j] != x.betti[j] - drop:
                bad("b2_b4", i, f"{st.kind}: b{j} went {x.betti[j]} -> {w.betti[j]}, expected a drop of {drop}")
        if w.rho != x.rho - drop:
            bad("rho_update", i, f"{st.kind}: rho went {x.rho} -> {w.rho}")
        if st.divisorial:
            try:
                delta = st.b3_delta()
            except PreconditionError as exc:
                bad("b3_update", i, f"chi(E) unavailable: {exc}")
                continue
            want = x.betti[3] + delta if isinstance(x.betti[3], int) else x.betti[3].shift(delta)
            if w.betti[3] != want and not (isinstance(want, Interval) and w.betti[3] in want):
                bad("b3_update", i, f"{st.kind}: b3 went {x.betti[3]} -> {w.betti[3]}, expected {want}")
            if st.kind == "div_to_point" and w.dep > x.dep + 1:
                bad("div_depth", i, f"depth rose from {x.dep} to {w.dep}")
        elif st.kind == "flop":
            if w.betti[3] != x.betti[3]:
                bad("b3_update", i, f"flop changed b3: {x.betti[3]} -> {w.betti[3]}")
        else:
            if x.dep == 0 or w.dep >= x.dep:
                bad("flip_depth", i, f"flip from depth {x.dep} to {w.dep}")
            room = Interval(0, _hi(x.betti[3]) + bound_Phi(x.dep))
            if w.betti[3] not in room:
                bad("b3_update", i, f"flip: b3 {w.betti[3]} outside [0, b3 + Phi(dep)]")
    return rep


def load_run(doc: dict) -> tuple:
    """Parse a run document ``{"initial": state, "steps": [...], "states": [...] (optional)}``."""
    if "initial" not in doc or "steps" not in doc:
        raise PreconditionError("a run needs 'initial' and 'steps'")
    initial = ThreefoldState.from_dict(doc["initial"])
    steps = [StepRecord.from_dict(s) for s in doc["steps"]]
    states = [ThreefoldState.from_dict(s) for s in doc["states"]] if "states" in doc else None
    return initial, steps, states


def run_ledger(doc: dict) -> dict:
    """Replay (or check the supplied states of) a run and return the report as a dict."""
    initial, steps, states = load_run(doc)
    if states is None:
        states = replay(initial, steps)
    elif states[0] != initial:
        raise PreconditionError("the first listed state differs from 'initial'")
    rep = validate_run(states, steps)
    return {"states": [s.to_dict() for s in states], "steps": [s.to_dict() for s in steps],
            "report": rep.to_dict()}
