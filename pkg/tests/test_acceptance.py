"""Acceptance criteria, one test each.  A summary line per criterion is printed
at the end of the pytest run and written to artifacts/acceptance.txt."""

import time
from pathlib import Path

import pytest

from pathrw.checks import (
    check_circle, check_confluence, check_functoriality, check_groupoid, check_nat, check_rho,
    check_rules,
)
from pathrw.spaces import axiom_k_sample, BASE
from pathrw.engine import normal_form
from pathrw.terms import NatLit, Rho

ARTIFACTS = Path(__file__).resolve().parent.parent / "artifacts"
RESULTS: dict[str, str] = {}


def _verdict(key: str, title: str, report, elapsed: float, limit: float):
    ok = report.ok and elapsed < limit
    counts = ", ".join(f"{c.label} {c.passed}/{c.total}" for c in report.checks)
    RESULTS[key] = f"{'PASS' if ok else 'FAIL'} {key} {title}: {counts} in {elapsed:.2f}s (limit {limit:g}s)"
    return ok


def _run(fn, *args, **kw):
    t = time.perf_counter()
    rep = fn(*args, **kw)
    return rep, time.perf_counter() - t


def test_criterion_1_rule_fidelity():
    rep, dt = _run(check_rules)
    assert rep.checks[0].total == 50
    ok = _verdict("1", "rule fidelity", rep, dt, 1.0)
    assert ok, rep.to_text()


def test_criterion_2_groupoid_laws():
    rep, dt = _run(check_groupoid, 1000, seed=0)
    ok = _verdict("2", "groupoid laws", rep, dt, 10.0)
    assert ok, rep.to_text()


def test_criterion_3_rho_collapse():
    rep, dt = _run(check_rho, 1000, seed=0, max_depth=8)
    rep_ext, dt_ext = _run(check_rho, 1000, seed=1, max_depth=8, include_ext=True)
    rep.checks += [c for c in rep_ext.checks]
    rep.checks[-1].label += " (with ext)"
    ok = _verdict("3", "rho collapse", rep, dt + dt_ext, 10.0)
    assert ok, rep.to_text()


def test_criterion_4_termination_and_confluence():
    failures = []
    rep, dt = _run(check_confluence, 10000, seed=0, max_size=10, budget=10000, failures=failures)
    ARTIFACTS.mkdir(exist_ok=True)
    out = ARTIFACTS / "confluence_counterexamples.txt"
    lines = [f"# {len(failures)} failing terms out of 10000 (seed 0, size <= 10)"]
    for f in failures:
        lines.append(f"{f.kind}\t{f.term}\t{' | '.join(f.normal_forms)}")
    out.write_text("\n".join(lines) + "\n")
    ok = _verdict("4", "termination and confluence", rep, dt, 300.0)
    assert ok, rep.to_text()


def test_criterion_5_circle_isomorphism():
    rep, dt = _run(check_circle, 1000, seed=0, k_samples=0)
    rep.checks = [c for c in rep.checks if not c.label.startswith("axiom K")]
    ok = _verdict("5", "circle isomorphism", rep, dt, 30.0)
    assert ok, rep.to_text()


def test_criterion_6_naturals():
    rep, dt = _run(check_nat, 30, seed=0, k_samples=0)
    rep.checks = [c for c in rep.checks if not c.label.startswith("axiom K")]
    ok = _verdict("6", "naturals", rep, dt, 10.0)
    assert ok, rep.to_text()


def test_criterion_7_axiom_k():
    from pathrw.checks import SuiteReport

    t = time.perf_counter()
    nat = axiom_k_sample("nat", NatLit(3), 200, seed=0)
    circle = axiom_k_sample("circle", BASE, 200, seed=0)
    dt = time.perf_counter() - t
    rep = SuiteReport("axiom K")
    c = rep.check("nat loops collapse")
    for i in range(nat.samples):
        c.record(i < nat.collapsed, lambda: "non-rho loop on the naturals")
    w = rep.check("circle has a non-rho witness")
    w.record(circle.witness is not None and normal_form(circle.witness) != Rho(BASE),
             lambda: "no witness")
    assert nat.samples == circle.samples == 200
    ok = _verdict("7", "axiom K discrimination", rep, dt, 10.0)
    assert ok, rep.to_text()


def test_criterion_8_functoriality_and_naturality():
    rep, dt = _run(check_functoriality, 200, seed=0)
    ok = _verdict("8", "functoriality and naturality", rep, dt, 10.0)
    assert ok, rep.to_text()
