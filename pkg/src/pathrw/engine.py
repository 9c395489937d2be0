"""Leftmost-outermost normalization with replayable traces, rw-equality and
the sampled termination / confluence / rho-collapse checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import BudgetExceeded, EndpointMismatch, PreconditionViolated
from .rules import apply, catalog
from .syntax import format_position, print_path
from .terms import (
    Ext, MuF, Nu, PathTerm, Position, Rho, Sigma, Tau, Xi, canonicalize, endpoints, positions,
    replace_at, subterm,
)

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class StepRecord:
    position: Position
    rule: str
    before: PathTerm
    after: PathTerm


@dataclass
class Trace:
    start: PathTerm
    steps: list[StepRecord] = field(default_factory=list)
    result: Optional[PathTerm] = None
    budget_used: int = 0

    def replay(self) -> PathTerm:
        """Re-run every recorded step from ``start`` and return the end term."""
        from .rules import match_at_root

        t = self.start
        for s in self.steps:
            assert t == s.before
            m = match_at_root(s.rule, subterm(t, s.position))
            assert m is not None, f"{s.rule} no longer matches at {s.position}"
            t = replace_at(t, s.position, apply(s.rule, m))
            assert t == s.after
        return t

    def to_text(self) -> str:
        lines = [f"start {print_path(self.start)}"]
        for i, s in enumerate(self.steps, 1):
            lines.append(f"{i:>4} {format_position(s.position):<10} {s.rule:<6} {print_path(s.after)}")
        if self.result is not None:
            lines.append(f"result {print_path(self.result)}")
        return "\n".join(lines)

    def to_records(self) -> list[dict]:
        return [
            {"pos": list(s.position), "rule": s.rule,
             "before": print_path(s.before), "after": print_path(s.after)}
            for s in self.steps
        ]

    def to_json(self) -> str:
        return json.dumps({
            "start": print_path(self.start),
            "steps": self.to_records(),
            "result": None if self.result is None else print_path(self.result),
            "budget_used": self.budget_used,
        }, indent=2)


@dataclass(frozen=True)
class ConfluenceReport:
    term: PathTerm
    reduct_normal_forms: frozenset
    confluent: bool


def _first_redex(p: PathTerm, rules):
    for pos in positions(p):
        q = subterm(p, pos)
        for r in rules:
            m = r.matcher(q)
            if m is not None:
                return pos, r, m
    return None


def step(p: PathTerm, include_ext: bool = False) -> Optional[StepRecord]:
    """Contract the leftmost-outermost redex (ties broken by catalog id)."""
    found = _first_redex(p, catalog(include_ext))
    if found is None:
        return None
    pos, r, m = found
    new = apply(r, m, before=subterm(p, pos))
    return StepRecord(pos, r.name, p, replace_at(p, pos, new))


def normalize(p: PathTerm, budget: int = DEFAULT_BUDGET, include_ext: bool = False) -> Trace:
    """Rewrite to normal form.  Embedded points are normalized before the first step."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    t = canonicalize(p)
    trace = Trace(start=t)
    while True:
        s = step(t, include_ext)
        if s is None:
            trace.result = t
            return trace
        if trace.budget_used == budget:
            raise BudgetExceeded(trace)
        trace.steps.append(s)
        trace.budget_used += 1
        t = s.after


def normal_form(p: PathTerm, budget: int = DEFAULT_BUDGET, include_ext: bool = False) -> PathTerm:
    return normalize(p, budget, include_ext).result


def rw_equal(p: PathTerm, q: PathTerm, budget: int = DEFAULT_BUDGET,
             include_ext: bool = False) -> bool:
    ep, eq = endpoints(p), endpoints(q)
    if ep != eq:
        raise EndpointMismatch(f"paths have different endpoints: {ep} vs {eq}")
    return normal_form(p, budget, include_ext) == normal_form(q, budget, include_ext)


_RHO_BUILDERS = (Sigma, Tau, MuF, Nu, Xi, Ext)


def _check_rho_only(p: PathTerm):
    if isinstance(p, Rho):
        return
    if not isinstance(p, _RHO_BUILDERS):
        raise PreconditionViolated(f"{type(p).__name__} node in a rho-only path")
    for k in p.children():
        _check_rho_only(k)


def _has_ext(p: PathTerm) -> bool:
    return isinstance(p, Ext) or any(_has_ext(k) for k in p.children())


def check_rho_collapse(p: PathTerm, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff a path built from reflexivities alone normalizes to a reflexivity."""
    _check_rho_only(p)
    return isinstance(normal_form(p, budget, include_ext=_has_ext(p)), Rho)


def one_step_reducts(p: PathTerm, include_ext: bool = False) -> list[tuple[Position, str, PathTerm]]:
    out = []
    rules = catalog(include_ext)
    for pos in positions(p):
        q = subterm(p, pos)
        for r in rules:
            m = r.matcher(q)
            if m is not None:
                out.append((pos, r.name, replace_at(p, pos, apply(r, m, before=q))))
    return out


def check_local_confluence(p: PathTerm, budget: int = DEFAULT_BUDGET,
                           include_ext: bool = False) -> ConfluenceReport:
    p = canonicalize(p)
    reducts = one_step_reducts(p, include_ext)
    if not reducts:
        nfs = frozenset([p])
    else:
        nfs = frozenset(normal_form(t, budget, include_ext) for _, _, t in reducts)
    return ConfluenceReport(p, nfs, len(nfs) == 1)
