"""Path spaces: the circle's fundamental group, naturals, coproducts, the unit
type and an axiom-K sampler."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Union

from .engine import DEFAULT_BUDGET, normal_form
from .env import circle_env, nat_env
from .errors import EmptyCode, EndpointMismatch, NotCirclePath, NotCoprodPath, NotNatPath
from .generate import CIRCLE_WEIGHTS, RHO_ONLY_WEIGHTS, random_loop
from .terms import (
    App, Atom, Eta, MuF, Named, NatLit, Nu, PathTerm, PointTerm, Rho, Sigma, Star, Tau, Var, Xi,
    endpoints, normalize_fun, normalize_point,
)

BASE = Var("base")
LOOP = Atom("loop", BASE, BASE)
SUCC = Named("succ")


# ------------------------------------------------------------------- circle


def _check_circle(p: PathTerm):
    if isinstance(p, Atom):
        if p != LOOP:
            raise NotCirclePath(f"foreign atom {p.name!r}")
        return
    if isinstance(p, Rho):
        if normalize_point(p.at) != BASE:
            raise NotCirclePath("reflexivity away from base")
        return
    if not isinstance(p, (Sigma, Tau)):
        raise NotCirclePath(f"{type(p).__name__} does not occur in circle paths")
    for k in p.children():
        _check_circle(k)


def exponent_sum(p: PathTerm) -> int:
    """The homomorphism sending loop to 1; computed without rewriting."""
    if isinstance(p, Atom):
        return 1
    if isinstance(p, Rho):
        return 0
    if isinstance(p, Sigma):
        return -exponent_sum(p.p)
    if isinstance(p, Tau):
        return exponent_sum(p.first) + exponent_sum(p.second)
    raise NotCirclePath(f"{type(p).__name__} does not occur in circle paths")


def read_loop_power(nf: PathTerm) -> int:
    """Exponent of a normal form rho, or a right-combed word of one letter."""
    if isinstance(nf, Rho):
        return 0
    letters = []
    t = nf
    while isinstance(t, Tau):
        letters.append(t.first)
        t = t.second
    letters.append(t)
    if all(x == LOOP for x in letters):
        return len(letters)
    if all(x == Sigma(LOOP) for x in letters):
        return -len(letters)
    raise RuntimeError(f"normal form is not a power of loop: {nf}")


def winding(p: PathTerm, budget: int = DEFAULT_BUDGET) -> int:
    _check_circle(p)
    return read_loop_power(normal_form(p, budget))


def loop_power(n: int) -> PathTerm:
    """toPath: rho for 0, then compose with loop (or its inverse) |n| times."""
    p: PathTerm = Rho(BASE)
    for _ in range(abs(n)):
        p = Tau(LOOP if n > 0 else Sigma(LOOP), p)
    return p


def circle_compose(p: PathTerm, q: PathTerm) -> PathTerm:
    """The group product p . q, which composes as tau(q, p)."""
    _check_circle(p)
    _check_circle(q)
    return Tau(q, p)


# ------------------------------------------------------------------ naturals


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Recur:
    inner: "CodeValue"


CodeValue = Union[Unit, Empty, Recur]


def flatten(c: CodeValue) -> CodeValue:
    while isinstance(c, Recur):
        c = c.inner
    return c


def recur_depth(c: CodeValue) -> int:
    n = 0
    while isinstance(c, Recur):
        c, n = c.inner, n + 1
    return n


def _wrap(c: CodeValue, k: int) -> CodeValue:
    for _ in range(k):
        c = Recur(c)
    return c


def nat_code(m: int, n: int) -> CodeValue:
    k = min(m, n)
    return _wrap(Unit() if m == n else Empty(), k)


def nat_r(n: int) -> CodeValue:
    # r(succ(n)) = r(n), r(0) = *
    return Unit()


def nat_decode(m: int, n: int, c: CodeValue) -> PathTerm:
    if m != n or not isinstance(flatten(c), Unit):
        raise EmptyCode(f"code({m},{n}) is uninhabited")
    p: PathTerm = Rho(NatLit(0))
    for _ in range(m):
        p = MuF(SUCC, p)
    return p


_NAT_NODES = (Rho, Sigma, Tau, MuF, Nu, Xi)


def _check_nat(p: PathTerm):
    if not isinstance(p, _NAT_NODES):
        raise NotNatPath(f"{type(p).__name__} does not occur in paths between naturals")
    if isinstance(p, MuF) and normalize_fun(p.fun) not in (SUCC,) and not _succ_chain(p.fun):
        raise NotNatPath("only succ acts on natural-number paths")
    for k in p.children():
        _check_nat(k)


def _succ_chain(f) -> bool:
    from .terms import Compose, Identity
    f = normalize_fun(f)
    while isinstance(f, Compose):
        if f.outer != SUCC:
            return False
        f = f.inner
    return f in (SUCC, Identity())


def nat_encode(m: int, n: int, p: PathTerm, budget: int = DEFAULT_BUDGET) -> CodeValue:
    _check_nat(p)
    if endpoints(p) != (NatLit(m), NatLit(n)):
        raise EndpointMismatch(f"path does not run from {m} to {n}")
    nf = normal_form(p, budget)
    if not isinstance(nf, Rho):
        raise NotNatPath(f"path between naturals did not collapse: {nf}")
    # transport along a reflexivity is the identity on r(m)
    return _wrap(nat_r(m), min(m, n))


@dataclass(frozen=True)
class Left:
    value: object


@dataclass(frozen=True)
class Right:
    value: object


@dataclass(frozen=True)
class Impossible:
    pass


@dataclass(frozen=True)
class Refutation:
    m: int
    n: int

    def __str__(self):
        return f"encode({self.m},{self.n}) : ¬({self.m} = {self.n})"


def nat_dec_eq(m: int, n: int) -> Union[Left, Right]:
    if m == n:
        return Left(nat_decode(m, m, Unit()))
    return Right(Refutation(m, n))


# ---------------------------------------------------------------- coproduct


def _head(x: PointTerm):
    if isinstance(x, App) and isinstance(x.fun, Named) and x.fun.name in ("inl", "inr"):
        return x.fun.name, x.arg
    return None


def coprod_classify(p: PathTerm, budget: int = DEFAULT_BUDGET):
    s, t = endpoints(p)
    hs, ht = _head(s), _head(t)
    if hs is None or ht is None:
        raise NotCoprodPath("endpoints are not inl/inr-headed")
    if hs[0] != ht[0]:
        return Impossible()
    side = Left if hs[0] == "inl" else Right
    nf = normal_form(p, budget)
    if isinstance(nf, Rho):
        return side(Rho(hs[1]))
    if isinstance(nf, MuF) and normalize_fun(nf.fun) == Named(hs[0]):
        return side(nf.p)
    raise NotCoprodPath(f"normal form {nf} is not a {hs[0]} image")


# --------------------------------------------------------------------- unit


def unit_connect(x: PointTerm, y: PointTerm) -> PathTerm:
    return Tau(Sigma(Eta(x)), Eta(y))


# ------------------------------------------------------------------ axiom K


@dataclass
class KReport:
    space: str
    point: PointTerm
    samples: int
    collapsed: int = 0
    witnesses: list[PathTerm] = field(default_factory=list)

    @property
    def fraction(self) -> float:
        return self.collapsed / self.samples if self.samples else 0.0

    @property
    def witness(self) -> Optional[PathTerm]:
        return self.witnesses[0] if self.witnesses else None


def axiom_k_sample(space: str, point: Optional[PointTerm] = None, samples: int = 200,
                   seed: int = 0, max_depth: int = 6) -> KReport:
    """Sample loops at ``point`` and count those whose normal form is rho."""
    if space == "nat":
        env, weights = nat_env(), RHO_ONLY_WEIGHTS
        point = NatLit(3) if point is None else point
    elif space == "circle":
        env, weights = circle_env(), CIRCLE_WEIGHTS
        point = BASE if point is None else point
    else:
        raise ValueError(f"unknown space {space!r}")
    point = normalize_point(point)
    rep = KReport(space, point, samples)
    rng = random.Random(seed)
    for _ in range(samples):
        loop = random_loop(env, point, max_depth, weights, rng.randrange(2**32))
        nf = normal_form(loop)
        if isinstance(nf, Rho):
            rep.collapsed += 1
        elif nf not in rep.witnesses:
            rep.witnesses.append(nf)
    return rep


__all__ = [
    "exponent_sum", "winding", "loop_power", "circle_compose", "read_loop_power",
    "Unit", "Empty", "Recur", "flatten", "recur_depth", "nat_code", "nat_r", "nat_decode",
    "nat_encode", "nat_dec_eq", "Left", "Right", "Impossible", "Refutation",
    "coprod_classify", "unit_connect", "axiom_k_sample", "KReport", "Star",
]
