"""Declarations of points, atoms, function symbols and homotopy families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EnvironmentError_, UnknownAtom
from .terms import (
    Atom, FunExpr, Hom, Named, PointTerm, Var, normalize_fun, normalize_point,
)

FUNCTION_KINDS = ("opaque", "constructor", "component")


@dataclass
class Environment:
    points: dict[str, str] = field(default_factory=dict)   # name -> type label
    atoms: dict[str, tuple[PointTerm, PointTerm]] = field(default_factory=dict)
    functions: dict[str, str] = field(default_factory=dict)  # name -> kind
    homotopies: dict[str, tuple[FunExpr, FunExpr]] = field(default_factory=dict)

    def _claim(self, name: str):
        if name in self.points or name in self.atoms or name in self.functions or name in self.homotopies:
            raise EnvironmentError_(f"duplicate declaration of {name!r}")

    def add_point(self, name: str, type_: str = "") -> "Environment":
        self._claim(name)
        self.points[name] = type_
        return self

    def add_atom(self, name: str, source: PointTerm, target: PointTerm) -> "Environment":
        self._claim(name)
        self.atoms[name] = (normalize_point(source), normalize_point(target))
        return self

    def add_function(self, name: str, kind: str = "opaque") -> "Environment":
        if kind not in FUNCTION_KINDS:
            raise EnvironmentError_(f"unknown function kind {kind!r}")
        self._claim(name)
        self.functions[name] = kind
        return self

    def add_homotopy(self, name: str, f: FunExpr, g: FunExpr) -> "Environment":
        self._claim(name)
        self.homotopies[name] = (normalize_fun(f), normalize_fun(g))
        return self

    def atom(self, name: str) -> Atom:
        try:
            s, t = self.atoms[name]
        except KeyError:
            raise UnknownAtom(f"undeclared atom {name!r}") from None
        return Atom(name, s, t)

    def hom(self, name: str, at: PointTerm) -> Hom:
        try:
            f, g = self.homotopies[name]
        except KeyError:
            raise UnknownAtom(f"undeclared homotopy {name!r}") from None
        return Hom(name, f, g, at)

    def check_atom(self, a: Atom):
        decl = self.atoms.get(a.name)
        if decl is None:
            raise UnknownAtom(f"undeclared atom {a.name!r}")
        if decl != (normalize_point(a.source), normalize_point(a.target)):
            raise UnknownAtom(f"atom {a.name!r} used with endpoints other than declared")

    def check_hom(self, h: Hom):
        decl = self.homotopies.get(h.family)
        if decl is None:
            raise UnknownAtom(f"undeclared homotopy {h.family!r}")
        if decl != (normalize_fun(h.f), normalize_fun(h.g)):
            raise UnknownAtom(f"homotopy {h.family!r} used with functions other than declared")

    def point_terms(self, type_: str | None = None) -> list[PointTerm]:
        return [Var(n) for n, t in self.points.items() if type_ is None or t == type_]

    def constructors(self) -> list[str]:
        return [n for n, k in self.functions.items() if k == "constructor"]


def circle_env() -> Environment:
    env = Environment()
    env.add_point("base", "S1")
    env.add_atom("loop", Var("base"), Var("base"))
    return env


def nat_env() -> Environment:
    env = Environment()
    env.add_function("succ", "constructor")
    return env


def coprod_env() -> Environment:
    """Two summands: A with points a0, a1 and atom p, B with points b0, b1 and atom q."""
    env = Environment()
    for n in ("a0", "a1"):
        env.add_point(n, "A")
    for n in ("b0", "b1"):
        env.add_point(n, "B")
    env.add_atom("p", Var("a0"), Var("a1"))
    env.add_atom("q", Var("b0"), Var("b1"))
    env.add_function("inl", "constructor")
    env.add_function("inr", "constructor")
    return env


def unit_env() -> Environment:
    env = Environment()
    env.add_point("u", "1")
    env.add_point("v", "1")
    return env


def sample_env() -> Environment:
    """A small connected environment used by the property suites.

    Points x, y, z with atoms a: x->y, b: y->z, c: z->x, d: x->x, two opaque
    functions f and g, and a homotopy H: f ~ g.
    """
    env = Environment()
    for n in ("x", "y", "z"):
        env.add_point(n, "A")
    x, y, z = Var("x"), Var("y"), Var("z")
    env.add_atom("a", x, y)
    env.add_atom("b", y, z)
    env.add_atom("c", z, x)
    env.add_atom("d", x, x)
    env.add_function("f")
    env.add_function("g")
    env.add_homotopy("H", Named("f"), Named("g"))
    return env


def parse_env(text: str) -> Environment:
    """Read the line-oriented environment format.

    ::

        point base : S1
        atom loop : base = base
        fun succ : constructor
        hom H : f ~ g
    """
    from .syntax import parse_fexpr, parse_point

    env = Environment()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw, _, rest = line.partition(" ")
        name, _, body = rest.partition(":")
        name, body = name.strip(), body.strip()
        if not name:
            raise EnvironmentError_(f"line {lineno}: missing name")
        try:
            if kw == "point":
                env.add_point(name, body)
            elif kw == "atom":
                lhs, eq, rhs = body.partition("=")
                if not eq:
                    raise EnvironmentError_("expected 'source = target'")
                env.add_atom(name, parse_point(lhs.strip()), parse_point(rhs.strip()))
            elif kw == "fun":
                env.add_function(name, body or "opaque")
            elif kw == "hom":
                lhs, tilde, rhs = body.partition("~")
                if not tilde:
                    raise EnvironmentError_("expected 'f ~ g'")
                env.add_homotopy(name, parse_fexpr(lhs.strip()), parse_fexpr(rhs.strip()))
            else:
                raise EnvironmentError_(f"unknown declaration {kw!r}")
        except EnvironmentError_ as e:
            raise EnvironmentError_(f"line {lineno}: {e}") from None
    return env


def format_env(env: Environment) -> str:
    from .syntax import print_fexpr, print_point

    lines = [f"point {n} : {t}" if t else f"point {n}" for n, t in env.points.items()]
    lines += [f"atom {n} : {print_point(s)} = {print_point(t)}" for n, (s, t) in env.atoms.items()]
    lines += [f"fun {n} : {k}" for n, k in env.functions.items()]
    lines += [f"hom {n} : {print_fexpr(f)} ~ {print_fexpr(g)}" for n, (f, g) in env.homotopies.items()]
    return "\n".join(lines) + "\n"

