"""One hand-instantiated redex per catalog rule, with the contractum written out.

The expected right-hand sides are typed in by hand rather than computed by the
rule builders, so they act as an independent check on the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass

from .env import Environment, parse_env
from .rules import apply, match_at_root
from .syntax import parse_path, print_path

FIXTURE_ENV = """
point x
point y
point z
point w
atom a : x = y
atom b : y = z
atom c : z = w
atom e : w = y
atom k : y = w
atom m : x = w
atom pp : <x,y> = <y,z>
fun f : opaque
fun g : opaque
fun h : opaque
hom H : f ~ g
"""


@dataclass(frozen=True)
class FidelityCase:
    rule: str
    lhs: str
    rhs: str


CASES = [
    FidelityCase("sr", "sigma(rho(x))", "rho(x)"),
    FidelityCase("ss", "sigma(sigma(a))", "a"),
    FidelityCase("tr", "tau(mu[f](a),mu[f](sigma(a)))", "mu[f](rho(x))"),
    FidelityCase("tsr", "tau(sigma(a),a)", "rho(y)"),
    FidelityCase("trr", "tau(a,rho(y))", "a"),
    FidelityCase("tlr", "tau(rho(x),a)", "a"),
    FidelityCase("slr", "subL(a,[],rho(y))", "a"),
    FidelityCase("srr", "subR(rho(x),[],a)", "a"),
    FidelityCase("sls", "subL(subL(a,[],b),[],sigma(b))", "a"),
    FidelityCase("slss", "subL(subL(a,[],sigma(e)),[],e)", "a"),
    FidelityCase("srs", "subR(b,[],subR(sigma(b),[],k))", "k"),
    FidelityCase("srrr", "subR(sigma(a),[],subR(a,[],b))", "b"),
    FidelityCase("mx2l1", "mu1(xi1(a))", "a"),
    FidelityCase("mx2l2", "mu1(pair(a,b))", "a"),
    FidelityCase("mx2r1", "mu2(pair(a,b))", "b"),
    FidelityCase("mx2r2", "mu2(xi2(b))", "b"),
    FidelityCase("mx3l", "muE(xi1(a),b,c)", "b"),
    FidelityCase("mx3r", "muE(xi2(a),b,c)", "c"),
    FidelityCase("mxl", "nu(xi(a))", "a"),
    FidelityCase("mxr", "muE(xi2(a),b)", "b"),
    FidelityCase("mx", "pair(mu1(pp),mu2(pp))", "pp"),
    FidelityCase("mxx", "muE(a,xi1(b),xi2(c))", "a"),
    FidelityCase("xmr", "xi(nu(a))", "a"),
    FidelityCase("mx1r", "muE(a,xi2(b))", "a"),
    FidelityCase("stss", "sigma(tau(a,b))", "tau(sigma(b),sigma(a))"),
    FidelityCase("ssbl", "sigma(subL(a,[],b))", "subR(sigma(b),[],sigma(a))"),
    FidelityCase("ssbr", "sigma(subR(a,[],b))", "subL(sigma(b),[],sigma(a))"),
    FidelityCase("sx", "sigma(xi(a))", "xi(sigma(a))"),
    FidelityCase("sxss", "sigma(pair(a,b))", "pair(sigma(a),sigma(b))"),
    FidelityCase("sm", "sigma(mu[f](a))", "mu[f](sigma(a))"),
    FidelityCase("smss", "sigma(muE(a,b))", "muE(sigma(a),sigma(b))"),
    FidelityCase("smsss", "sigma(muE(a,b,c))", "muE(sigma(a),sigma(b),sigma(c))"),
    FidelityCase("tsbll", "tau(a,subL(rho(y),[],b))", "subL(a,[],b)"),
    FidelityCase("tsbrl", "tau(a,subR(b,[],rho(z)))", "subL(a,[],b)"),
    FidelityCase("tsblr", "tau(subL(a,[],b),c)", "tau(a,subR(b,[],c))"),
    FidelityCase("tsbrr", "tau(subR(a,[],b),c)", "subR(a,[],tau(b,c))"),
    FidelityCase("tt", "tau(tau(a,b),c)", "tau(a,tau(b,c))"),
    FidelityCase("tts", "tau(a,tau(sigma(a),m))", "m"),
    FidelityCase("tst", "tau(sigma(a),tau(a,b))", "b"),
    FidelityCase("tf", "tau(mu[f](a),mu[f](b))", "mu[f](tau(a,b))"),
    FidelityCase("cf", "mu[g](mu[f](a))", "mu[comp(g,f)](a)"),
    FidelityCase("ci", "mu[id](a)", "a"),
    FidelityCase("hp", "tau(H[H](x),mu[g](a))", "tau(mu[f](a),H[H](y))"),
    FidelityCase("mxc", "mu[pairmap(f,g)](pair(a,b))", "pair(mu[f](a),mu[g](b))"),
    FidelityCase("mxp", "mu[f](rho(x))", "rho(f(x))"),
    FidelityCase("nxp", "nu(rho(x))", "rho(x)"),
    FidelityCase("xxp", "xi(rho(x))", "rho(x)"),
    FidelityCase("extl", "nu(ext(a))", "a"),
    FidelityCase("extr", "ext(nu(a))", "a"),
    FidelityCase("exp", "ext(rho(x))", "rho(x)"),
]


def fixture_env() -> Environment:
    return parse_env(FIXTURE_ENV)


def run_case(case: FidelityCase, env: Environment | None = None) -> tuple[bool, str]:
    """Match the rule at the root of ``lhs`` and compare with ``rhs``."""
    env = env or fixture_env()
    lhs, want = parse_path(case.lhs, env), parse_path(case.rhs, env)
    m = match_at_root(case.rule, lhs)
    if m is None:
        return False, f"{case.rule} does not match {case.lhs}"
    got = apply(case.rule, m)
    if got != want:
        return False, f"{case.rule}: {case.lhs} gave {print_path(got)}, expected {case.rhs}"
    return True, ""
