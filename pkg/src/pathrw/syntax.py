"""Recursive-descent parser and canonical printer for the path language.

Grammar (whitespace is insignificant)::

    path   := atom | rho(point) | sigma(path) | tau(path,path)
            | mu[fexpr](path) | mu1(path) | mu2(path)
            | muE(path,path) | muE(path,path,path)
            | nu(path) | xi(path) | xi1(path) | xi2(path)
            | pair(path,path) | subL(path,pos,path) | subR(path,pos,path)
            | ext(path) | H[ident](point) | eta(point)
    fexpr  := ident | id | comp(fexpr,fexpr) | pairmap(fexpr,fexpr)
    point  := ident | nat | * | fexpr(point) | <point,point> | fst(point) | snd(point)
    pos    := [ [nat {, nat}] ]
"""

from __future__ import annotations

import re

from .errors import PathSyntaxError, UnknownAtom
from .terms import (
    App, Atom, Compose, Eta, Ext, Fst, FunExpr, Hom, Identity, Mu1, Mu2, MuE2, MuE3, MuF,
    Named, NatLit, Nu, Pair, PairMap, PairPath, PathTerm, PointTerm, Position, Rho, Sigma,
    Snd, Star, SubL, SubR, Tau, Var, Xi, Xi1, Xi2,
)

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(\d+)|(\S))")

_UNARY = {"sigma": Sigma, "mu1": Mu1, "mu2": Mu2, "nu": Nu, "xi": Xi, "xi1": Xi1,
          "xi2": Xi2, "ext": Ext}
_BINARY = {"tau": Tau, "pair": PairPath}


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        for m in _TOKEN.finditer(text):
            if m.group(1):
                self.toks.append(("ident", m.group(1), m.start(1)))
            elif m.group(2):
                self.toks.append(("nat", m.group(2), m.start(2)))
            elif m.group(3):
                self.toks.append(("sym", m.group(3), m.start(3)))
        self.i = 0

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else ("eof", "", len(self.text))

    def fail(self, msg: str):
        kind, val, off = self.peek()
        found = "end of input" if kind == "eof" else repr(val)
        raise PathSyntaxError(f"{msg}, found {found}", self.text, off)

    def expect(self, sym: str):
        kind, val, _ = self.peek()
        if kind != "sym" or val != sym:
            self.fail(f"expected {sym!r}")
        self.i += 1

    def at_sym(self, sym: str, k: int = 0) -> bool:
        kind, val, _ = self.peek(k)
        return kind == "sym" and val == sym

    def ident(self) -> str:
        kind, val, _ = self.peek()
        if kind != "ident":
            self.fail("expected identifier")
        self.i += 1
        return val

    def done(self):
        if self.peek()[0] != "eof":
            self.fail("trailing input")

    # ---- fexpr / point / pos

    def fexpr(self) -> FunExpr:
        name = self.ident()
        if name == "id":
            return Identity()
        if name in ("comp", "pairmap") and self.at_sym("("):
            self.expect("(")
            a = self.fexpr()
            self.expect(",")
            b = self.fexpr()
            self.expect(")")
            return Compose(a, b) if name == "comp" else PairMap(a, b)
        return Named(name)

    def point(self) -> PointTerm:
        kind, val, _ = self.peek()
        if kind == "nat":
            self.i += 1
            return NatLit(int(val))
        if kind == "sym" and val == "*":
            self.i += 1
            return Star()
        if kind == "sym" and val == "<":
            self.i += 1
            a = self.point()
            self.expect(",")
            b = self.point()
            self.expect(">")
            return Pair(a, b)
        if kind != "ident":
            self.fail("expected a point term")
        if val in ("fst", "snd") and self.at_sym("(", 1):
            self.i += 2
            a = self.point()
            self.expect(")")
            return Fst(a) if val == "fst" else Snd(a)
        if val in ("id", "comp", "pairmap") or self.at_sym("(", 1):
            f = self.fexpr()
            self.expect("(")
            a = self.point()
            self.expect(")")
            return App(f, a)
        self.i += 1
        return Var(val)

    def pos(self) -> Position:
        self.expect("[")
        out: list[int] = []
        if not self.at_sym("]"):
            while True:
                kind, val, _ = self.peek()
                if kind != "nat":
                    self.fail("expected a child index")
                self.i += 1
                out.append(int(val))
                if self.at_sym("]"):
                    break
                self.expect(",")
        self.expect("]")
        return tuple(out)

    # ---- paths

    def path(self, env) -> PathTerm:
        kind, name, off = self.peek()
        if kind != "ident":
            self.fail("expected a path term")
        if name == "H" and self.at_sym("[", 1):
            self.i += 2
            fam = self.ident()
            self.expect("]")
            self.expect("(")
            at = self.point()
            self.expect(")")
            return env.hom(fam, at)
        if name == "mu" and self.at_sym("[", 1):
            self.i += 2
            f = self.fexpr()
            self.expect("]")
            self.expect("(")
            p = self.path(env)
            self.expect(")")
            return MuF(f, p)
        if not self.at_sym("(", 1):
            self.i += 1
            try:
                return env.atom(name)
            except UnknownAtom as e:
                raise UnknownAtom(f"{e} at column {off + 1}") from None
        if name in ("rho", "eta"):
            self.i += 2
            x = self.point()
            self.expect(")")
            return Rho(x) if name == "rho" else Eta(x)
        if name in _UNARY:
            self.i += 2
            p = self.path(env)
            self.expect(")")
            return _UNARY[name](p)
        if name in _BINARY:
            self.i += 2
            p = self.path(env)
            self.expect(",")
            q = self.path(env)
            self.expect(")")
            return _BINARY[name](p, q)
        if name == "muE":
            self.i += 2
            args = [self.path(env)]
            while self.at_sym(","):
                self.i += 1
                args.append(self.path(env))
            if len(args) not in (2, 3):
                self.fail("muE takes two or three arguments")
            self.expect(")")
            return MuE2(*args) if len(args) == 2 else MuE3(*args)
        if name in ("subL", "subR"):
            self.i += 2
            p = self.path(env)
            self.expect(",")
            pos = self.pos()
            self.expect(",")
            q = self.path(env)
            self.expect(")")
            return SubL(p, pos, q) if name == "subL" else SubR(p, pos, q)
        self.fail(f"unknown path constructor {name!r}")


def parse_path(text: str, env=None) -> PathTerm:
    """Parse ``text``; atoms and homotopies are resolved through ``env``.

    Without an environment the built-in circle (``base``, ``loop``) is used.
    """
    if env is None:
        from .env import circle_env
        env = circle_env()
    # syntax errors take precedence over unknown names
    r = _Reader(text)
    r.path(_AnyNames())
    r.done()
    r.i = 0
    return r.path(env)


class _AnyNames:
    def atom(self, name):
        return Atom(name, Star(), Star())

    def hom(self, name, at):
        return Hom(name, Identity(), Identity(), at)


def parse_point(text: str) -> PointTerm:
    r = _Reader(text)
    t = r.point()
    r.done()
    return t


def parse_fexpr(text: str) -> FunExpr:
    r = _Reader(text)
    f = r.fexpr()
    r.done()
    return f


def print_fexpr(f: FunExpr) -> str:
    if isinstance(f, Identity):
        return "id"
    if isinstance(f, Compose):
        return f"comp({print_fexpr(f.outer)},{print_fexpr(f.inner)})"
    if isinstance(f, PairMap):
        return f"pairmap({print_fexpr(f.left)},{print_fexpr(f.right)})"
    return f.name


def print_point(t: PointTerm) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, NatLit):
        return str(t.n)
    if isinstance(t, Star):
        return "*"
    if isinstance(t, App):
        return f"{print_fexpr(t.fun)}({print_point(t.arg)})"
    if isinstance(t, Pair):
        return f"<{print_point(t.left)},{print_point(t.right)}>"
    if isinstance(t, Fst):
        return f"fst({print_point(t.of)})"
    if isinstance(t, Snd):
        return f"snd({print_point(t.of)})"
    raise TypeError(f"not a point term: {t!r}")


_NAMES = {Sigma: "sigma", Tau: "tau", Mu1: "mu1", Mu2: "mu2", MuE2: "muE", MuE3: "muE",
          Nu: "nu", Xi: "xi", Xi1: "xi1", Xi2: "xi2", PairPath: "pair", Ext: "ext"}


def print_path(p: PathTerm) -> str:
    if isinstance(p, Atom):
        return p.name
    if isinstance(p, Rho):
        return f"rho({print_point(p.at)})"
    if isinstance(p, Eta):
        return f"eta({print_point(p.at)})"
    if isinstance(p, Hom):
        return f"H[{p.family}]({print_point(p.at)})"
    if isinstance(p, MuF):
        return f"mu[{print_fexpr(p.fun)}]({print_path(p.p)})"
    if isinstance(p, SubL):
        return f"subL({print_path(p.main)},{format_position(p.pos)},{print_path(p.sub)})"
    if isinstance(p, SubR):
        return f"subR({print_path(p.sub)},{format_position(p.pos)},{print_path(p.main)})"
    args = ",".join(print_path(k) for k in p.children())
    return f"{_NAMES[type(p)]}({args})"


def format_position(pos: Position) -> str:
    return "[" + ",".join(map(str, pos)) + "]"
