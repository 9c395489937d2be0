"""Seeded generation of endpoint-consistent random path terms.

Terms are grown from a chosen endpoint: ``_grow(x, d, forward=True)`` returns a
path that starts at ``x``, ``forward=False`` one that ends at ``x``.  Composition
threads the free endpoint of the first factor into the second, so every
``Tau`` is well formed by construction.
"""

from __future__ import annotations

import random
from typing import Optional

from .errors import GenerationFailed
from .terms import (
    App, Compose, Eta, Ext, Hom, Identity, Mu1, Mu2, MuF, Named, NatLit, Nu, Pair,
    PairMap, PairPath, PathTerm, PointTerm, Rho, Sigma, Star, SubL, SubR, Tau, Var, Xi,
    endpoints, normalize_point, point_at, point_positions, point_replace, size,
)

GENERIC_WEIGHTS = {
    "rho": 2, "atom": 6, "sigma": 3, "tau": 5, "mu": 3, "hom": 2, "pair": 1, "mu1": 1,
    "mu2": 1, "nu": 1, "xi": 1, "subL": 1, "subR": 1, "eta": 1,
}
CIRCLE_WEIGHTS = {"rho": 1, "atom": 6, "sigma": 3, "tau": 5}
RHO_ONLY_WEIGHTS = {"rho": 3, "sigma": 2, "tau": 3, "mu": 3, "nu": 1, "xi": 1}
RHO_EXT_WEIGHTS = {**RHO_ONLY_WEIGHTS, "ext": 1}
GROUPOID_WEIGHTS = {"rho": 1, "atom": 6, "sigma": 3, "tau": 5, "mu": 2, "nu": 1, "xi": 1}

_LEAVES = ("rho", "atom", "hom", "eta")


def _split_app(x: PointTerm):
    """Return (function name, argument) if ``x`` is an application of a named function."""
    if isinstance(x, App) and isinstance(x.fun, Named):
        return x.fun.name, x.arg
    if isinstance(x, NatLit) and x.n > 0:
        return "succ", NatLit(x.n - 1)
    return None


class _Grower:
    def __init__(self, env, weights, rng: random.Random):
        self.env = env
        self.w = {k: v for k, v in weights.items() if v > 0}
        self.rng = rng
        self.pts = env.point_terms() or [Star()]

    def choose(self, options: list[str]) -> str:
        ws = [self.w[o] for o in options]
        return self.rng.choices(options, ws)[0]

    def options(self, x: PointTerm, d: int, forward: bool) -> list[str]:
        env, out = self.env, []
        for k in self.w:
            if d <= 0 and k not in _LEAVES:
                continue
            if k == "atom" and not self._atoms(x, forward):
                continue
            if k == "hom" and not self._homs(x, forward):
                continue
            if k == "pair" and not isinstance(x, Pair):
                continue
            if k == "eta" and not (isinstance(x, Star) and forward
                                   or not forward and env.points.get(getattr(x, "name", None)) == "1"):
                continue
            out.append(k)
        return out

    def _atoms(self, x, forward):
        return [self.env.atom(n) for n, (s, t) in self.env.atoms.items() if (s if forward else t) == x]

    def _homs(self, x, forward):
        sp = _split_app(x)
        if sp is None:
            return []
        out = []
        for n, (f, g) in self.env.homotopies.items():
            if (f if forward else g) == Named(sp[0]):
                out.append(self.env.hom(n, sp[1]))
        return out

    def _mu(self, x, d, forward):
        sp = _split_app(x)
        r = self.rng.random()
        if sp is not None and r < 0.75:
            name, arg = sp
            inner = _split_app(arg)
            if inner is not None and self.rng.random() < 0.3:
                return MuF(Compose(Named(name), Named(inner[0])), self.grow(inner[1], d - 1, forward))
            return MuF(Named(name), self.grow(arg, d - 1, forward))
        if isinstance(x, Pair) and r < 0.9:
            a, b = _split_app(x.left), _split_app(x.right)
            if a and b:
                return MuF(PairMap(Named(a[0]), Named(b[0])),
                           self.grow(Pair(a[1], b[1]), d - 1, forward))
        return MuF(Identity(), self.grow(x, d - 1, forward))

    def grow(self, x: PointTerm, d: int, forward: bool = True) -> PathTerm:
        x = normalize_point(x)
        opts = self.options(x, d, forward)
        if not opts:
            return Rho(x)
        k = self.choose(opts)
        rng = self.rng
        if k == "rho":
            return Rho(x)
        if k == "atom":
            return rng.choice(self._atoms(x, forward))
        if k == "hom":
            return rng.choice(self._homs(x, forward))
        if k == "eta":
            if forward:
                unit = [Var(n) for n, t in self.env.points.items() if t == "1"] or [Star()]
                return Eta(rng.choice(unit))
            return Eta(x)
        if k == "sigma":
            return Sigma(self.grow(x, d - 1, not forward))
        if k == "tau":
            if forward:
                p = self.grow(x, d - 1, True)
                return Tau(p, self.grow(endpoints(p)[1], d - 1, True))
            q = self.grow(x, d - 1, False)
            return Tau(self.grow(endpoints(q)[0], d - 1, False), q)
        if k == "mu":
            return self._mu(x, d, forward)
        if k == "pair":
            return PairPath(self.grow(x.left, d - 1, forward), self.grow(x.right, d - 1, forward))
        if k in ("mu1", "mu2"):
            other = rng.choice(self.pts)
            pt = Pair(x, other) if k == "mu1" else Pair(other, x)
            return (Mu1 if k == "mu1" else Mu2)(self.grow(pt, d - 1, forward))
        if k in ("nu", "xi", "ext"):
            return {"nu": Nu, "xi": Xi, "ext": Ext}[k](self.grow(x, d - 1, forward))
        if k == "subL":
            return self._sub_l(x, d, forward)
        if k == "subR":
            return self._sub_r(x, d, forward)
        raise AssertionError(k)

    def _sub_l(self, x, d, forward):
        rng = self.rng
        if forward:
            main = self.grow(x, d - 1, True)
            t = endpoints(main)[1]
            pos = rng.choice(list(point_positions(t)))
            return SubL(main, pos, self.grow(point_at(t, pos), d - 1, True))
        pos = rng.choice(list(point_positions(x)))
        sub = self.grow(point_at(x, pos), d - 1, False)
        main = self.grow(point_replace(x, pos, endpoints(sub)[0]), d - 1, False)
        return SubL(main, pos, sub)

    def _sub_r(self, x, d, forward):
        rng = self.rng
        if forward:
            pos = rng.choice(list(point_positions(x)))
            sub = self.grow(point_at(x, pos), d - 1, True)
            main = self.grow(point_replace(x, pos, endpoints(sub)[1]), d - 1, True)
            return SubR(sub, pos, main)
        main = self.grow(x, d - 1, False)
        s = endpoints(main)[0]
        pos = rng.choice(list(point_positions(s)))
        return SubR(self.grow(point_at(s, pos), d - 1, False), pos, main)


def default_start(env, rng: random.Random) -> PointTerm:
    pts = env.point_terms()
    if not pts:
        return NatLit(rng.randrange(0, 6)) if "succ" in env.functions else Star()
    x = rng.choice(pts)
    funs = [n for n, k in env.functions.items() if k == "opaque"]
    if funs and rng.random() < 0.3:
        x = App(Named(rng.choice(funs)), x)
    return x


def random_term(env, max_depth: int = 4, weights: Optional[dict] = None, seed: int = 0,
                max_size: Optional[int] = None, start: Optional[PointTerm] = None,
                retries: int = 200) -> PathTerm:
    """Generate a strict, well-formed term; reproducible per ``seed``.

    ``start`` fixes the source point; otherwise one is drawn from ``env``.
    """
    rng = random.Random(seed)
    grower = _Grower(env, weights or GENERIC_WEIGHTS, rng)
    for _ in range(retries):
        x = start if start is not None else default_start(env, rng)
        d = rng.randint(0, max_depth)
        p = grower.grow(x, d, True)
        if max_size is None or size(p) <= max_size:
            return p
    raise GenerationFailed(f"no term of size <= {max_size} after {retries} attempts")


def random_loop(env, at: PointTerm, max_depth: int, weights: dict, seed: int) -> PathTerm:
    """A random path from ``at`` back to ``at``: p followed by a path home."""
    rng = random.Random(seed)
    g = _Grower(env, weights, rng)
    p = g.grow(at, rng.randint(0, max_depth), True)
    y = endpoints(p)[1]
    if y == normalize_point(at):
        return p
    back = g.grow(at, rng.randint(0, max_depth), False)
    if endpoints(back)[0] != y:
        back = Sigma(p)
    return Tau(p, back)

