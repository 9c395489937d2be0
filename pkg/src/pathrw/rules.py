"""The rewrite-rule catalog: 47 core rules plus 3 extensionality rules.

Each rule is a matcher (``PathTerm -> bindings or None``) and a builder
(``bindings -> PathTerm``).  Rules written with a one-hole context ``C[.]``
find the context by descending both arguments in lockstep through identical
unary congruence wrappers (sigma, mu_f, mu1, mu2, nu, xi, ext) and stopping
at the outermost position where the two sides stand in the rule's relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from .errors import IllFormedResult
from .terms import (
    UNARY_CONGRUENCES, Compose, Ext, Fst, Snd, Hom, Identity, Mu1, Mu2, MuE2, MuE3, MuF, Nu, PairMap, PairPath,
    PathTerm, Position, Rho, Sigma, SubL, SubR, Tau, Xi, Xi1, Xi2, apply_fun, normalize_fun,
    normalize_point, positions, subterm, try_endpoints,
)

CORE = "core"
EXTENSIONALITY = "extensionality"


@dataclass(frozen=True)
class MatchBinding:
    bindings: dict[str, Any]
    context: tuple[PathTerm, ...] = ()  # unary wrappers, outermost first

    @property
    def hole(self) -> Position:
        """Position of the hole inside either context-bearing argument."""
        return (0,) * len(self.context)

    def fill(self, t: PathTerm) -> PathTerm:
        for w in reversed(self.context):
            t = w.with_children((t,))
        return t

    def __getitem__(self, key: str):
        return self.bindings[key]


@dataclass(frozen=True)
class RewriteRule:
    id: int
    name: str
    group: str
    lhs: str
    rhs: str
    citation: str
    matcher: Callable[[PathTerm], Optional[MatchBinding]] = field(repr=False, compare=False)
    builder: Callable[[MatchBinding], PathTerm] = field(repr=False, compare=False)
    side_conditions: tuple[str, ...] = ()


# ------------------------------------------------------------------ helpers


def _same_wrapper(a: PathTerm, b: PathTerm) -> bool:
    if type(a) is not type(b) or not isinstance(a, UNARY_CONGRUENCES):
        return False
    if isinstance(a, MuF):
        return normalize_fun(a.fun) == normalize_fun(b.fun)
    return True


def find_context(a: PathTerm, b: PathTerm, rel) -> Optional[tuple[tuple[PathTerm, ...], Any]]:
    """Outermost one-hole context C with a = C[x], b = C[y] and rel(x, y) holding."""
    wrappers: list[PathTerm] = []
    while True:
        hit = rel(a, b)
        if hit is not None:
            return tuple(wrappers), hit
        if not _same_wrapper(a, b):
            return None
        wrappers.append(a)
        a, b = a.p, b.p


def _inverse_pair(a, b):
    """x, sigma(x)  ->  x"""
    return a if isinstance(b, Sigma) and b.p == a else None


def _pair_inverse(a, b):
    """sigma(x), x  ->  x"""
    return b if isinstance(a, Sigma) and a.p == b else None


def _then_rho(a, b):
    return a if isinstance(b, Rho) else None


def _rho_then(a, b):
    return b if isinstance(a, Rho) else None


def _preserves(before: PathTerm, after: PathTerm) -> bool:
    e = try_endpoints(before)
    return e is None or try_endpoints(after) == e


def _ctx_rule(project, rel, key, build):
    """Matcher for a context rule: ``project`` extracts the two sides from the
    redex, ``rel`` relates the hole contents, ``build`` gives the result."""

    def match(p: PathTerm) -> Optional[MatchBinding]:
        sides = project(p)
        if sides is None:
            return None
        found = find_context(sides[0], sides[1], rel)
        if found is None:
            return None
        ctx, r = found
        m = MatchBinding({key: r, **sides[2]}, ctx)
        try:
            out = build(m)
        except _NoEndpoints:
            return None
        # a context is only admissible if the contraction keeps the endpoints
        if not _preserves(p, out):
            return None
        return m

    return match


class _NoEndpoints(Exception):
    pass


def _src(r: PathTerm):
    e = try_endpoints(r)
    if e is None:
        raise _NoEndpoints
    return e[0]


def _tgt(r: PathTerm):
    e = try_endpoints(r)
    if e is None:
        raise _NoEndpoints
    return e[1]


def _tau_args(p):
    return (p.first, p.second, {}) if isinstance(p, Tau) else None


def _shape(cls, **sub):
    """Match ``cls`` whose named fields are themselves instances of given classes."""

    def ok(p):
        if not isinstance(p, cls):
            return False
        return all(isinstance(getattr(p, k), v) for k, v in sub.items())

    return ok


def _simple(pred, **extract):
    def match(p: PathTerm) -> Optional[MatchBinding]:
        if not pred(p):
            return None
        return MatchBinding({k: f(p) for k, f in extract.items()})

    return match


# ------------------------------------------------------------------- rules


def _r(id, name, lhs, rhs, citation, matcher, builder, group=CORE, side=()):
    return RewriteRule(id, name, group, lhs, rhs, citation, matcher, builder, tuple(side))


def _tr_build(m):
    return m.fill(Rho(_src(m["r"])))


def _tsr_build(m):
    return m.fill(Rho(_tgt(m["r"])))


def _sub_l_pair(rel):
    def project(p):
        if isinstance(p, SubL) and isinstance(p.main, SubL) and p.main.pos == p.pos:
            return p.main.sub, p.sub, {"s": p.main.main}
        return None

    return _ctx_rule(project, rel, "r", lambda m: m["s"])


def _sub_r_pair(rel):
    def project(p):
        if isinstance(p, SubR) and isinstance(p.main, SubR) and p.main.pos == p.pos:
            return p.sub, p.main.sub, {"r": p.main.main}
        return None

    return _ctx_rule(project, rel, "s", lambda m: m["r"])


def _tau_tail(rel):
    def project(p):
        if isinstance(p, Tau) and isinstance(p.second, Tau):
            return p.first, p.second.first, {"v": p.second.second}
        return None

    return _ctx_rule(project, rel, "u", lambda m: m["v"])


def _on_spine(m, *parts):
    items = [*parts, m["rest"]] if m["rest"] is not None else list(parts)
    t = items[-1]
    for q in reversed(items[:-1]):
        t = Tau(q, t)
    return t


def _tf_match(p):
    for a, b, rest in _spine_views(p):
        if (isinstance(a, MuF) and isinstance(b, MuF)
                and normalize_fun(a.fun) == normalize_fun(b.fun)):
            return MatchBinding({"f": normalize_fun(a.fun), "r": a.p, "s": b.p, "rest": rest})
    return None


def _spine_views(p):
    """tau(a, b), then tau(a, tau(b, v)): tt right-combs every composite, so the
    two-factor rules tf and hp are also tried on the head of a spine."""
    if isinstance(p, Tau):
        yield p.first, p.second, None
        if isinstance(p.second, Tau):
            yield p.first, p.second.first, p.second.second


def _hp_match(p):
    for h, mu, rest in _spine_views(p):
        if not (isinstance(h, Hom) and isinstance(mu, MuF)):
            continue
        if normalize_fun(mu.fun) != normalize_fun(h.g):
            continue
        e = try_endpoints(mu.p)
        if e is None or e[0] != normalize_point(h.at):
            continue
        return MatchBinding({"H": h, "p": mu.p, "y": e[1], "rest": rest})
    return None


def _mxc_match(p):
    if isinstance(p, MuF) and isinstance(p.p, PairPath):
        f = normalize_fun(p.fun)
        if isinstance(f, PairMap):
            return MatchBinding({"g": f.left, "h": f.right, "p": p.p.left, "q": p.p.right})
    return None


_ONE_ARG_MU = (MuF, Mu1, Mu2)


def _mu_point(mu, x):
    if isinstance(mu, MuF):
        return apply_fun(mu.fun, x)
    return normalize_point((Fst if isinstance(mu, Mu1) else Snd)(x))


def _build_catalog() -> list[RewriteRule]:
    rules = [
        _r(1, "sr", "sigma(rho)", "rho", "rule 1: σ(ρ) ▷sr ρ",
           _simple(_shape(Sigma, p=Rho), x=lambda p: p.p.at),
           lambda m: Rho(m["x"])),
        _r(2, "ss", "sigma(sigma(r))", "r", "rule 2: σ(σ(r)) ▷ss r",
           _simple(_shape(Sigma, p=Sigma), r=lambda p: p.p.p),
           lambda m: m["r"]),
        _r(3, "tr", "tau(C[r],C[sigma(r)])", "C[rho]", "rule 3: τ(C[r],C[σ(r)]) ▷tr C[ρ]",
           _ctx_rule(_tau_args, _inverse_pair, "r", _tr_build), _tr_build,
           side=["one-hole unary context", "endpoints preserved"]),
        _r(4, "tsr", "tau(C[sigma(r)],C[r])", "C[rho]", "rule 4: τ(C[σ(r)],C[r]) ▷tsr C[ρ]",
           _ctx_rule(_tau_args, _pair_inverse, "r", _tsr_build), _tsr_build,
           side=["one-hole unary context", "endpoints preserved"]),
        _r(5, "trr", "tau(C[r],C[rho])", "C[r]", "rule 5: τ(C[r],C[ρ]) ▷trr C[r]",
           _ctx_rule(_tau_args, _then_rho, "r", lambda m: m.fill(m["r"])),
           lambda m: m.fill(m["r"]),
           side=["one-hole unary context", "endpoints preserved"]),
        _r(6, "tlr", "tau(C[rho],C[r])", "C[r]", "rule 6: τ(C[ρ],C[r]) ▷tlr C[r]",
           _ctx_rule(_tau_args, _rho_then, "r", lambda m: m.fill(m["r"])),
           lambda m: m.fill(m["r"]),
           side=["one-hole unary context", "endpoints preserved"]),
        _r(7, "slr", "subL(C[r],C[rho])", "C[r]", "rule 7: subL(C[r],C[ρ]) ▷slr C[r]",
           _ctx_rule(lambda p: (p.main, p.sub, {}) if isinstance(p, SubL) else None,
                     _then_rho, "r", lambda m: m.fill(m["r"])),
           lambda m: m.fill(m["r"]),
           side=["one-hole unary context", "endpoints preserved"]),
        _r(8, "srr", "subR(C[rho],C[r])", "C[r]", "rule 8: subR(C[ρ],C[r]) ▷srr C[r]",
           _ctx_rule(lambda p: (p.sub, p.main, {}) if isinstance(p, SubR) else None,
                     _rho_then, "r", lambda m: m.fill(m["r"])),
           lambda m: m.fill(m["r"]),
           side=["one-hole unary context", "endpoints preserved"]),
        _r(9, "sls", "subL(subL(s,C[r]),C[sigma(r)])", "s",
           "rule 9: subL(subL(s,C[r]),C[σ(r)]) ▷sls s",
           _sub_l_pair(_inverse_pair), lambda m: m["s"],
           side=["equal hole positions", "endpoints preserved"]),
        _r(10, "slss", "subL(subL(s,C[sigma(r)]),C[r])", "s",
           "rule 10: subL(subL(s,C[σ(r)]),C[r]) ▷slss s",
           _sub_l_pair(_pair_inverse), lambda m: m["s"],
           side=["equal hole positions", "endpoints preserved"]),
        _r(11, "srs", "subR(C[s],subR(C[sigma(s)],r))", "r",
           "rule 11: subR(C[s],subR(C[σ(s)],r)) ▷srs r",
           _sub_r_pair(_inverse_pair), lambda m: m["r"],
           side=["equal hole positions", "endpoints preserved"]),
        _r(12, "srrr", "subR(C[sigma(s)],subR(C[s],r))", "r",
           "rule 12: subR(C[σ(s)],subR(C[s],r)) ▷srrr r",
           _sub_r_pair(_pair_inverse), lambda m: m["r"],
           side=["equal hole positions", "endpoints preserved"]),
        _r(13, "mx2l1", "mu1(xi1(r))", "r", "rule 13: μ1(ξ1(r)) ▷mx2l1 r",
           _simple(_shape(Mu1, p=Xi1), r=lambda p: p.p.p), lambda m: m["r"]),
        _r(14, "mx2l2", "mu1(pair(r,s))", "r", "rule 14: μ1(ξ∧(r,s)) ▷mx2l2 r",
           _simple(_shape(Mu1, p=PairPath), r=lambda p: p.p.left), lambda m: m["r"]),
        _r(15, "mx2r1", "mu2(pair(r,s))", "s", "rule 15: μ2(ξ∧(r,s)) ▷mx2r1 s",
           _simple(_shape(Mu2, p=PairPath), s=lambda p: p.p.right), lambda m: m["s"]),
        _r(16, "mx2r2", "mu2(xi2(s))", "s", "rule 16: μ2(ξ2(s)) ▷mx2r2 s",
           _simple(_shape(Mu2, p=Xi2), s=lambda p: p.p.p), lambda m: m["s"]),
        _r(17, "mx3l", "muE(xi1(r),s,u)", "s", "rule 17: μ(ξ1(r),s,u) ▷mx3l s",
           _simple(_shape(MuE3, p=Xi1), s=lambda p: p.q), lambda m: m["s"]),
        _r(18, "mx3r", "muE(xi2(r),s,u)", "u", "rule 18: μ(ξ2(r),s,u) ▷mx3r u",
           _simple(_shape(MuE3, p=Xi2), u=lambda p: p.r), lambda m: m["u"]),
        _r(19, "mxl", "nu(xi(r))", "r", "rule 19: ν(ξ(r)) ▷mxl r",
           _simple(_shape(Nu, p=Xi), r=lambda p: p.p.p), lambda m: m["r"]),
        _r(20, "mxr", "muE(xi2(r),s)", "s", "rule 20: μ(ξ2(r),s) ▷mxr s",
           _simple(_shape(MuE2, p=Xi2), s=lambda p: p.q), lambda m: m["s"]),
        _r(21, "mx", "pair(mu1(r),mu2(r))", "r", "rule 21: ξ(μ1(r),μ2(r)) ▷mx r",
           _simple(lambda p: _shape(PairPath, left=Mu1, right=Mu2)(p) and p.left.p == p.right.p,
                   r=lambda p: p.left.p),
           lambda m: m["r"]),
        _r(22, "mxx", "muE(t,xi1(r),xi2(s))", "t", "rule 22: μ(t,ξ1(r),ξ2(s)) ▷mxx t",
           _simple(_shape(MuE3, q=Xi1, r=Xi2), t=lambda p: p.p), lambda m: m["t"]),
        _r(23, "xmr", "xi(nu(r))", "r", "rule 23: ξ(ν(r)) ▷xmr r",
           _simple(_shape(Xi, p=Nu), r=lambda p: p.p.p), lambda m: m["r"]),
        _r(24, "mx1r", "muE(s,xi2(r))", "s", "rule 24: μ(s,ξ2(r)) ▷mx1r s",
           _simple(_shape(MuE2, q=Xi2), s=lambda p: p.p), lambda m: m["s"]),
        _r(25, "stss", "sigma(tau(r,s))", "tau(sigma(s),sigma(r))",
           "rule 25: σ(τ(r,s)) ▷stss τ(σ(s),σ(r))",
           _simple(_shape(Sigma, p=Tau), r=lambda p: p.p.first, s=lambda p: p.p.second),
           lambda m: Tau(Sigma(m["s"]), Sigma(m["r"]))),
        _r(26, "ssbl", "sigma(subL(r,s))", "subR(sigma(s),sigma(r))",
           "rule 26: σ(subL(r,s)) ▷ssbl subR(σ(s),σ(r))",
           _simple(_shape(Sigma, p=SubL), r=lambda p: p.p.main, pos=lambda p: p.p.pos,
                   s=lambda p: p.p.sub),
           lambda m: SubR(Sigma(m["s"]), m["pos"], Sigma(m["r"]))),
        _r(27, "ssbr", "sigma(subR(r,s))", "subL(sigma(s),sigma(r))",
           "rule 27: σ(subR(r,s)) ▷ssbr subL(σ(s),σ(r))",
           _simple(_shape(Sigma, p=SubR), r=lambda p: p.p.sub, pos=lambda p: p.p.pos,
                   s=lambda p: p.p.main),
           lambda m: SubL(Sigma(m["s"]), m["pos"], Sigma(m["r"]))),
        _r(28, "sx", "sigma(xi(r))", "xi(sigma(r))", "rule 28: σ(ξ(r)) ▷sx ξ(σ(r))",
           _simple(_shape(Sigma, p=Xi), r=lambda p: p.p.p), lambda m: Xi(Sigma(m["r"]))),
        _r(29, "sxss", "sigma(pair(s,r))", "pair(sigma(s),sigma(r))",
           "rule 29: σ(ξ(s,r)) ▷sxss ξ(σ(s),σ(r))",
           _simple(_shape(Sigma, p=PairPath), s=lambda p: p.p.left, r=lambda p: p.p.right),
           lambda m: PairPath(Sigma(m["s"]), Sigma(m["r"]))),
        _r(30, "sm", "sigma(mu(r))", "mu(sigma(r))", "rule 30: σ(μ(r)) ▷sm μ(σ(r))",
           _simple(lambda p: isinstance(p, Sigma) and isinstance(p.p, _ONE_ARG_MU),
                   mu=lambda p: p.p, r=lambda p: p.p.p),
           lambda m: m["mu"].with_children((Sigma(m["r"]),)),
           side=["mu is one of mu[f], mu1, mu2 and is kept"]),
        _r(31, "smss", "sigma(muE(s,r))", "muE(sigma(s),sigma(r))",
           "rule 31: σ(μ(s,r)) ▷smss μ(σ(s),σ(r))",
           _simple(_shape(Sigma, p=MuE2), s=lambda p: p.p.p, r=lambda p: p.p.q),
           lambda m: MuE2(Sigma(m["s"]), Sigma(m["r"]))),
        _r(32, "smsss", "sigma(muE(r,u,v))", "muE(sigma(r),sigma(u),sigma(v))",
           "rule 32: σ(μ(r,u,v)) ▷smsss μ(σ(r),σ(u),σ(v))",
           _simple(_shape(Sigma, p=MuE3), r=lambda p: p.p.p, u=lambda p: p.p.q,
                   v=lambda p: p.p.r),
           lambda m: MuE3(Sigma(m["r"]), Sigma(m["u"]), Sigma(m["v"]))),
        _r(33, "tsbll", "tau(r,subL(rho,s))", "subL(r,s)",
           "rule 33: τ(r,subL(ρ,s)) ▷tsbll subL(r,s)",
           _simple(lambda p: _shape(Tau, second=SubL)(p) and isinstance(p.second.main, Rho),
                   r=lambda p: p.first, pos=lambda p: p.second.pos, s=lambda p: p.second.sub),
           lambda m: SubL(m["r"], m["pos"], m["s"])),
        _r(34, "tsbrl", "tau(r,subR(s,rho))", "subL(r,s)",
           "rule 34: τ(r,subR(s,ρ)) ▷tsbrl subL(r,s)",
           _simple(lambda p: _shape(Tau, second=SubR)(p) and isinstance(p.second.main, Rho),
                   r=lambda p: p.first, pos=lambda p: p.second.pos, s=lambda p: p.second.sub),
           lambda m: SubL(m["r"], m["pos"], m["s"])),
        _r(35, "tsblr", "tau(subL(r,s),t)", "tau(r,subR(s,t))",
           "rule 35: τ(subL(r,s),t) ▷tsblr τ(r,subR(s,t))",
           _simple(_shape(Tau, first=SubL), r=lambda p: p.first.main,
                   pos=lambda p: p.first.pos, s=lambda p: p.first.sub, t=lambda p: p.second),
           lambda m: Tau(m["r"], SubR(m["s"], m["pos"], m["t"]))),
        _r(36, "tsbrr", "tau(subR(s,t),u)", "subR(s,tau(t,u))",
           "rule 36: τ(subR(s,t),u) ▷tsbrr subR(s,τ(t,u))",
           _simple(_shape(Tau, first=SubR), s=lambda p: p.first.sub,
                   pos=lambda p: p.first.pos, t=lambda p: p.first.main, u=lambda p: p.second),
           lambda m: SubR(m["s"], m["pos"], Tau(m["t"], m["u"]))),
        _r(37, "tt", "tau(tau(t,r),s)", "tau(t,tau(r,s))",
           "rule 37: τ(τ(t,r),s) ▷tt τ(t,τ(r,s))",
           _simple(_shape(Tau, first=Tau), t=lambda p: p.first.first,
                   r=lambda p: p.first.second, s=lambda p: p.second),
           lambda m: Tau(m["t"], Tau(m["r"], m["s"]))),
        _r(38, "tts", "tau(C[u],tau(C[sigma(u)],v))", "v",
           "rule 38: τ(C[u],τ(C[σ(u)],v)) ▷tts v",
           _tau_tail(_inverse_pair), lambda m: m["v"],
           side=["one-hole unary context", "endpoints preserved"]),
        _r(39, "tst", "tau(C[sigma(u)],tau(C[u],v))", "v",
           "rule 39: τ(C[σ(u)],τ(C[u],v)) ▷tst u  (published right-hand side; "
           "v is used, u does not have the redex's endpoints)",
           _tau_tail(_pair_inverse), lambda m: m["v"],
           side=["one-hole unary context", "endpoints preserved"]),
        _r(40, "tf", "tau(mu[f](r),mu[f](s))", "mu[f](tau(r,s))",
           "rule 40: τ(μ(r),μ(s)) =tf μ(τ(r,s))",
           _tf_match, lambda m: _on_spine(m, MuF(m["f"], Tau(m["r"], m["s"]))),
           side=["same function on both mu nodes", "also on a spine tau(_, tau(_, v))"]),
        _r(41, "cf", "mu[g](mu[f](p))", "mu[comp(g,f)](p)",
           "rule 41: μg(μf(p)) =cf μ(g∘f)(p)",
           _simple(_shape(MuF, p=MuF), g=lambda p: p.fun, f=lambda p: p.p.fun,
                   p=lambda p: p.p.p),
           lambda m: MuF(normalize_fun(Compose(m["g"], m["f"])), m["p"])),
        _r(42, "ci", "mu[id](p)", "p", "rule 42: μId(p) =ci p",
           _simple(lambda p: isinstance(p, MuF) and normalize_fun(p.fun) == Identity(),
                   p=lambda p: p.p),
           lambda m: m["p"], side=["function is the identity"]),
        _r(43, "hp", "tau(H(x),mu[g](p))", "tau(mu[f](p),H(y))",
           "rule 43: τ(H(x),μg(p)) =hp τ(μf(p),H(y))",
           _hp_match,
           lambda m: _on_spine(m, MuF(m["H"].f, m["p"]),
                               Hom(m["H"].family, m["H"].f, m["H"].g, m["y"])),
           side=["H: f ~ g declared", "mu function is g", "p starts at x",
                 "also on a spine tau(_, tau(_, v))"]),
        _r(44, "mxc", "mu[pairmap(g,h)](pair(p,q))", "pair(mu[g](p),mu[h](q))",
           "rule 44: μf(ε∧(p,q)) =mxc ε∧(μg(p),μh(q))",
           _mxc_match,
           lambda m: PairPath(MuF(m["g"], m["p"]), MuF(m["h"], m["q"])),
           side=["function is a pair map"]),
        _r(45, "mxp", "mu[f](rho(x))", "rho(f(x))", "rule 45: μf(ρx) =mxp ρf(x)",
           _simple(lambda p: isinstance(p, _ONE_ARG_MU) and isinstance(p.p, Rho),
                   mu=lambda p: p, x=lambda p: normalize_point(p.p.at)),
           lambda m: Rho(_mu_point(m["mu"], m["x"])),
           side=["mu is one of mu[f], mu1 (f = fst), mu2 (f = snd)"]),
        _r(46, "nxp", "nu(rho(x))", "rho(x)", "rule 46: ν(ρx) =nxp ρf(x)",
           _simple(_shape(Nu, p=Rho), x=lambda p: p.p.at), lambda m: Rho(m["x"])),
        _r(47, "xxp", "xi(rho)", "rho", "rule 47: ξ(ρ) =xxp ρ",
           _simple(_shape(Xi, p=Rho), x=lambda p: p.p.at), lambda m: Rho(m["x"])),
        _r(48, "extl", "nu(ext(t))", "t", "extensionality: ν(ext(t)) =extl t",
           _simple(_shape(Nu, p=Ext), t=lambda p: p.p.p), lambda m: m["t"],
           group=EXTENSIONALITY),
        _r(49, "extr", "ext(nu(s))", "s", "extensionality: ext(ν(s)) =extr s",
           _simple(_shape(Ext, p=Nu), s=lambda p: p.p.p), lambda m: m["s"],
           group=EXTENSIONALITY),
        _r(50, "exp", "ext(rho)", "rho", "extensionality: ext(ρ) =exp ρ",
           _simple(_shape(Ext, p=Rho), x=lambda p: p.p.at), lambda m: Rho(m["x"]),
           group=EXTENSIONALITY),
    ]
    assert len({r.name for r in rules}) == len(rules)
    return rules


_CATALOG = _build_catalog()
_BY_NAME = {r.name: r for r in _CATALOG}


def catalog(include_ext: bool = False) -> list[RewriteRule]:
    return [r for r in _CATALOG if include_ext or r.group == CORE]


def rule(name: str) -> RewriteRule:
    return _BY_NAME[name]


def match_at_root(r: RewriteRule | str, p: PathTerm) -> Optional[MatchBinding]:
    if isinstance(r, str):
        r = rule(r)
    return r.matcher(p)


def apply(r: RewriteRule | str, binding: MatchBinding, before: Optional[PathTerm] = None) -> PathTerm:
    """Build the contractum.  With ``before`` given, endpoint preservation is checked."""
    if isinstance(r, str):
        r = rule(r)
    try:
        out = r.builder(binding)
    except _NoEndpoints:
        raise IllFormedResult(f"rule {r.name}: hole endpoints are not computable") from None
    if before is not None and not _preserves(before, out):
        raise IllFormedResult(f"rule {r.name} changed endpoints of {before}")
    return out


def redexes(p: PathTerm, include_ext: bool = False) -> list[tuple[Position, str]]:
    """All (position, rule name) pairs, leftmost-outermost then by catalog id."""
    rules = catalog(include_ext)
    out = []
    for pos in positions(p):
        q = subterm(p, pos)
        for r in rules:
            if r.matcher(q) is not None:
                out.append((pos, r.name))
    return out
