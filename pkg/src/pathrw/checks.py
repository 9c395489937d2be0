"""Sampled property suites behind ``pathrw check`` and the acceptance tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .engine import DEFAULT_BUDGET, check_local_confluence, check_rho_collapse, normalize, rw_equal
from .env import Environment, sample_env
from .errors import BudgetExceeded
from .fidelity import CASES, fixture_env, run_case
from .generate import (
    CIRCLE_WEIGHTS, GENERIC_WEIGHTS, RHO_EXT_WEIGHTS, RHO_ONLY_WEIGHTS, random_term,
)
from .spaces import (
    BASE, Left, Unit, axiom_k_sample, circle_compose, exponent_sum, flatten, loop_power,
    nat_decode, nat_dec_eq, nat_encode, winding,
)
from .env import circle_env
from .syntax import print_path
from .terms import (
    Atom, Compose, Identity, MuF, Named, Rho, Sigma, Tau, Var, App, depth, endpoints,
)

MAX_SHOWN = 20


@dataclass
class Check:
    label: str
    total: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness: Callable[[], str]):
        self.total += 1
        if not ok:
            self.failures.append(witness())


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, label: str) -> Check:
        c = Check(label)
        self.checks.append(c)
        return c

    def to_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for c in self.checks:
            lines.append(f"  {'PASS' if c.ok else 'FAIL'} {c.label}: {c.passed}/{c.total}")
            for w in c.failures[:MAX_SHOWN]:
                lines.append(f"    counterexample {w}")
            if len(c.failures) > MAX_SHOWN:
                lines.append(f"    ... {len(c.failures) - MAX_SHOWN} more")
        return "\n".join(lines)


def _rw(p, q, budget=DEFAULT_BUDGET, include_ext=False) -> bool:
    try:
        return rw_equal(p, q, budget, include_ext)
    except BudgetExceeded:
        return False


def check_rules() -> SuiteReport:
    rep = SuiteReport("rules")
    chk = rep.check("rule fidelity")
    env = fixture_env()
    for case in CASES:
        ok, msg = run_case(case, env)
        chk.record(ok, lambda: msg)
    return rep


GROUPOID_LAWS = ("right unit", "left unit", "right inverse", "left inverse",
                 "double inverse", "associativity")


def check_groupoid(samples: int = 1000, seed: int = 0, env: Optional[Environment] = None,
                   weights: Optional[dict] = None, max_depth: int = 4) -> SuiteReport:
    env = env or sample_env()
    weights = weights or GENERIC_WEIGHTS
    rep = SuiteReport("groupoid")
    checks = {name: rep.check(name) for name in GROUPOID_LAWS}
    rng = random.Random(seed)
    for _ in range(samples):
        p = random_term(env, max_depth, weights, seed=rng.randrange(2**32))
        x, y = endpoints(p)
        q = random_term(env, max_depth - 1, weights, seed=rng.randrange(2**32), start=y)
        r = random_term(env, max_depth - 1, weights, seed=rng.randrange(2**32),
                        start=endpoints(q)[1])
        shown = print_path(p)
        checks["right unit"].record(_rw(Tau(p, Rho(y)), p), lambda: shown)
        checks["left unit"].record(_rw(Tau(Rho(x), p), p), lambda: shown)
        checks["right inverse"].record(_rw(Tau(p, Sigma(p)), Rho(x)), lambda: shown)
        checks["left inverse"].record(_rw(Tau(Sigma(p), p), Rho(y)), lambda: shown)
        checks["double inverse"].record(_rw(Sigma(Sigma(p)), p), lambda: shown)
        checks["associativity"].record(
            _rw(Tau(Tau(p, q), r), Tau(p, Tau(q, r))),
            lambda: f"p={shown} q={print_path(q)} r={print_path(r)}")
    return rep


def check_functoriality(samples: int = 200, seed: int = 0,
                        weights: Optional[dict] = None, max_depth: int = 4) -> SuiteReport:
    env = sample_env()
    weights = weights or GENERIC_WEIGHTS
    f, g = Named("f"), Named("g")
    rep = SuiteReport("functoriality")
    c_tau = rep.check("mu distributes over tau")
    c_sig = rep.check("mu commutes with sigma")
    c_comp = rep.check("mu of a composite")
    c_id = rep.check("mu of the identity")
    c_nat = rep.check("homotopy naturality")
    rng = random.Random(seed)
    pts = env.point_terms()
    for _ in range(samples):
        p = random_term(env, max_depth, weights, seed=rng.randrange(2**32))
        q = random_term(env, max_depth - 1, weights, seed=rng.randrange(2**32),
                        start=endpoints(p)[1])
        fn = rng.choice([f, g, Compose(g, f)])
        shown = lambda: f"p={print_path(p)} q={print_path(q)}"
        c_tau.record(_rw(Tau(MuF(fn, p), MuF(fn, q)), MuF(fn, Tau(p, q))), shown)
        c_sig.record(_rw(Sigma(MuF(fn, p)), MuF(fn, Sigma(p))), shown)
        c_comp.record(_rw(MuF(g, MuF(f, p)), MuF(Compose(g, f), p)), shown)
        c_id.record(_rw(MuF(Identity(), p), p), shown)
        # a fresh atom between random (possibly compound) points
        x, y = (rng.choice(pts) for _ in range(2))
        if rng.random() < 0.3:
            x = App(f, x)
        atom = Atom("p", x, y)
        lhs = Tau(env.hom("H", x), MuF(g, atom))
        rhs = Tau(MuF(f, atom), env.hom("H", y))
        c_nat.record(_rw(lhs, rhs), lambda: print_path(lhs))
    return rep


@dataclass
class ConfluenceFailure:
    term: str
    kind: str            # "budget" or "peak"
    normal_forms: tuple[str, ...] = ()


def check_confluence(samples: int = 10000, seed: int = 0, max_size: int = 10,
                     budget: int = DEFAULT_BUDGET, weights: Optional[dict] = None,
                     env: Optional[Environment] = None,
                     failures: Optional[list] = None) -> SuiteReport:
    """Termination within ``budget`` and a single normal form across all one-step reducts.

    Failing terms are appended to ``failures`` (as ``ConfluenceFailure``) if given.
    """
    env = env or sample_env()
    weights = weights or GENERIC_WEIGHTS
    rep = SuiteReport("confluence")
    c_term = rep.check("terminates within budget")
    c_conf = rep.check("single normal form")
    rng = random.Random(seed)
    for _ in range(samples):
        p = random_term(env, 4, weights, seed=rng.randrange(2**32), max_size=max_size)
        shown = print_path(p)
        try:
            normalize(p, budget)
            report = check_local_confluence(p, budget)
        except BudgetExceeded:
            c_term.record(False, lambda: shown)
            c_conf.record(False, lambda: shown)
            if failures is not None:
                failures.append(ConfluenceFailure(shown, "budget"))
            continue
        c_term.record(True, lambda: shown)
        nfs = tuple(sorted(print_path(t) for t in report.reduct_normal_forms))
        c_conf.record(report.confluent, lambda: f"{shown} -> {' | '.join(nfs)}")
        if not report.confluent and failures is not None:
            failures.append(ConfluenceFailure(shown, "peak", nfs))
    return rep


def check_rho(samples: int = 1000, seed: int = 0, max_depth: int = 8,
              include_ext: bool = False) -> SuiteReport:
    env = sample_env()
    weights = RHO_EXT_WEIGHTS if include_ext else RHO_ONLY_WEIGHTS
    rep = SuiteReport("rho")
    chk = rep.check("rho-only paths collapse")
    rng = random.Random(seed)
    for _ in range(samples):
        # growth depth d yields term depth at most d + 1
        p = random_term(env, max_depth - 1, weights, seed=rng.randrange(2**32))
        assert depth(p) <= max_depth
        try:
            ok = check_rho_collapse(p)
        except BudgetExceeded:
            ok = False
        chk.record(ok, lambda: print_path(p))
    return rep


def check_circle(samples: int = 1000, seed: int = 0, max_depth: int = 4,
                 k_samples: int = 200) -> SuiteReport:
    env = circle_env()
    rep = SuiteReport("circle")
    c_iso = rep.check("winding(loop_power(n)) = n on [-50, 50]")
    for n in range(-50, 51):
        c_iso.record(winding(loop_power(n)) == n, lambda: str(n))
    c_hom = rep.check("winding is a homomorphism")
    c_phi = rep.check("winding agrees with the exponent sum")
    c_close = rep.check("closure")
    c_unit = rep.check("identity")
    c_inv = rep.check("inverse")
    c_assoc = rep.check("associativity")
    rng = random.Random(seed)

    def draw():
        return random_term(env, max_depth, CIRCLE_WEIGHTS, seed=rng.randrange(2**32))

    rho = Rho(BASE)
    for _ in range(samples):
        p, q, r = draw(), draw(), draw()
        shown = lambda: f"p={print_path(p)} q={print_path(q)}"
        wp, wq = winding(p), winding(q)
        pq = circle_compose(p, q)
        c_hom.record(winding(pq) == wp + wq, shown)
        c_phi.record(wp == exponent_sum(p) and wq == exponent_sum(q), shown)
        c_close.record(endpoints(pq) == (BASE, BASE), shown)
        c_unit.record(_rw(circle_compose(p, rho), p), shown)
        c_inv.record(_rw(circle_compose(p, Sigma(p)), rho), shown)
        c_assoc.record(_rw(circle_compose(circle_compose(p, q), r),
                           circle_compose(p, circle_compose(q, r))), shown)
    c_k = rep.check("axiom K fails: non-rho loop witness")
    k = axiom_k_sample("circle", samples=k_samples, seed=seed)
    c_k.record(k.witness is not None and k.fraction < 1.0,
               lambda: f"{k.collapsed}/{k.samples} collapsed, no witness")
    return rep


def check_nat(limit: int = 30, seed: int = 0, k_samples: int = 200) -> SuiteReport:
    rep = SuiteReport("nat")
    c_rt = rep.check("encode(decode(c)) = c")
    c_rt2 = rep.check("decode(encode(p)) =rw p")
    c_rho = rep.check("decode outputs normalize to rho")
    c_deq = rep.check("dec_eq is Left iff m = n")
    for m in range(limit + 1):
        p = nat_decode(m, m, Unit())
        c_rt.record(isinstance(flatten(nat_encode(m, m, p)), Unit), lambda: str(m))
        c_rt2.record(_rw(nat_decode(m, m, nat_encode(m, m, p)), p), lambda: str(m))
        c_rho.record(isinstance(normalize(p).result, Rho), lambda: str(m))
        for n in range(limit + 1):
            c_deq.record(isinstance(nat_dec_eq(m, n), Left) == (m == n), lambda: f"{m},{n}")
    c_k = rep.check("axiom K holds at 3")
    k = axiom_k_sample("nat", samples=k_samples, seed=seed)
    c_k.record(k.collapsed == k.samples,
               lambda: f"{k.collapsed}/{k.samples}; witness {print_path(k.witness)}")
    return rep


SUITES = {
    "rules": lambda seed, samples: check_rules(),
    "groupoid": lambda seed, samples: check_groupoid(samples or 1000, seed),
    "functoriality": lambda seed, samples: check_functoriality(samples or 200, seed),
    "confluence": lambda seed, samples: check_confluence(samples or 10000, seed),
    "rho": lambda seed, samples: check_rho(samples or 1000, seed),
    "circle": lambda seed, samples: check_circle(samples or 1000, seed),
    "nat": lambda seed, samples: check_nat(seed=seed, k_samples=samples or 200),
}
