"""Point terms, function expressions and path terms.

Every node is an immutable dataclass.  Path nodes list their path-valued
fields in ``kids`` so that positions, traversal and rebuilding can be done
generically.  A position is a tuple of child indices into that list.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import ClassVar, Iterator, Optional, Union

from .errors import EndpointMismatch, LooseTerm, UnknownAtom

Position = tuple[int, ...]


# ---------------------------------------------------------------- functions


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class Identity:
    pass


@dataclass(frozen=True)
class Compose:
    outer: "FunExpr"
    inner: "FunExpr"


@dataclass(frozen=True)
class PairMap:
    left: "FunExpr"
    right: "FunExpr"


FunExpr = Union[Named, Identity, Compose, PairMap]


def _compose_chain(f: FunExpr) -> list[FunExpr]:
    if isinstance(f, Compose):
        return _compose_chain(f.outer) + _compose_chain(f.inner)
    if isinstance(f, Identity):
        return []
    if isinstance(f, PairMap):
        return [PairMap(normalize_fun(f.left), normalize_fun(f.right))]
    return [f]


def normalize_fun(f: FunExpr) -> FunExpr:
    """Right-associate compositions, drop identities, fuse adjacent pair maps."""
    chain: list[FunExpr] = []
    for g in _compose_chain(f):
        if chain and isinstance(chain[-1], PairMap) and isinstance(g, PairMap):
            last = chain.pop()
            g = PairMap(normalize_fun(Compose(last.left, g.left)),
                        normalize_fun(Compose(last.right, g.right)))
        chain.append(g)
    if not chain:
        return Identity()
    out = chain[-1]
    for g in reversed(chain[:-1]):
        out = Compose(g, out)
    return out


# ------------------------------------------------------------------- points


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    fun: FunExpr
    arg: "PointTerm"


@dataclass(frozen=True)
class Pair:
    left: "PointTerm"
    right: "PointTerm"


@dataclass(frozen=True)
class Fst:
    of: "PointTerm"


@dataclass(frozen=True)
class Snd:
    of: "PointTerm"


@dataclass(frozen=True)
class Star:
    pass


@dataclass(frozen=True)
class NatLit:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("NatLit must be nonnegative")


PointTerm = Union[Var, App, Pair, Fst, Snd, Star, NatLit]

SUCC = "succ"


def _fst(t: PointTerm) -> PointTerm:
    return t.left if isinstance(t, Pair) else Fst(t)


def _snd(t: PointTerm) -> PointTerm:
    return t.right if isinstance(t, Pair) else Snd(t)


def _pair(a: PointTerm, b: PointTerm) -> PointTerm:
    # surjective pairing: <fst x, snd x> = x
    if isinstance(a, Fst) and isinstance(b, Snd) and a.of == b.of:
        return a.of
    return Pair(a, b)


def apply_fun(f: FunExpr, a: PointTerm) -> PointTerm:
    """Apply ``f`` to an already normal point and return a normal point."""
    if isinstance(f, Identity):
        return a
    if isinstance(f, Compose):
        return apply_fun(f.outer, apply_fun(f.inner, a))
    if isinstance(f, PairMap):
        return _pair(apply_fun(f.left, _fst(a)), apply_fun(f.right, _snd(a)))
    if f.name == SUCC and isinstance(a, NatLit):
        return NatLit(a.n + 1)
    return App(f, a)


def normalize_point(t: PointTerm) -> PointTerm:
    if isinstance(t, App):
        return apply_fun(t.fun, normalize_point(t.arg))
    if isinstance(t, Pair):
        return _pair(normalize_point(t.left), normalize_point(t.right))
    if isinstance(t, Fst):
        return _fst(normalize_point(t.of))
    if isinstance(t, Snd):
        return _snd(normalize_point(t.of))
    return t


def point_children(t: PointTerm) -> tuple[PointTerm, ...]:
    if isinstance(t, App):
        return (t.arg,)
    if isinstance(t, Pair):
        return (t.left, t.right)
    if isinstance(t, (Fst, Snd)):
        return (t.of,)
    if isinstance(t, NatLit) and t.n > 0:
        return (NatLit(t.n - 1),)
    return ()


def point_at(t: PointTerm, pos: Position) -> PointTerm:
    for i in pos:
        kids = point_children(t)
        if not 0 <= i < len(kids):
            raise EndpointMismatch(f"position {list(pos)} does not address a subterm of {t}")
        t = kids[i]
    return t


def point_replace(t: PointTerm, pos: Position, new: PointTerm) -> PointTerm:
    if not pos:
        return new
    i, rest = pos[0], pos[1:]
    kids = point_children(t)
    if not 0 <= i < len(kids):
        raise EndpointMismatch(f"position {list(pos)} does not address a subterm of {t}")
    sub = point_replace(kids[i], rest, new)
    if isinstance(t, App):
        return App(t.fun, sub)
    if isinstance(t, Pair):
        return Pair(sub, t.right) if i == 0 else Pair(t.left, sub)
    if isinstance(t, Fst):
        return Fst(sub)
    if isinstance(t, Snd):
        return Snd(sub)
    assert isinstance(t, NatLit)
    return App(Named(SUCC), sub)


def point_positions(t: PointTerm, prefix: Position = ()) -> Iterator[Position]:
    yield prefix
    for i, k in enumerate(point_children(t)):
        yield from point_positions(k, prefix + (i,))


# -------------------------------------------------------------------- paths


class PathTerm:
    """Base class of all path constructors."""

    kids: ClassVar[tuple[str, ...]] = ()
    loose: ClassVar[bool] = False

    def children(self) -> tuple["PathTerm", ...]:
        return tuple(getattr(self, k) for k in self.kids)

    def with_children(self, new: tuple["PathTerm", ...]) -> "PathTerm":
        return replace(self, **dict(zip(self.kids, new)))


@dataclass(frozen=True)
class Atom(PathTerm):
    name: str
    source: PointTerm
    target: PointTerm


@dataclass(frozen=True)
class Rho(PathTerm):
    at: PointTerm


@dataclass(frozen=True)
class Sigma(PathTerm):
    p: PathTerm
    kids = ("p",)


@dataclass(frozen=True)
class Tau(PathTerm):
    first: PathTerm
    second: PathTerm
    kids = ("first", "second")


@dataclass(frozen=True)
class MuF(PathTerm):
    fun: FunExpr
    p: PathTerm
    kids = ("p",)


@dataclass(frozen=True)
class Mu1(PathTerm):
    p: PathTerm
    kids = ("p",)


@dataclass(frozen=True)
class Mu2(PathTerm):
    p: PathTerm
    kids = ("p",)


@dataclass(frozen=True)
class MuE2(PathTerm):
    p: PathTerm
    q: PathTerm
    kids = ("p", "q")
    loose = True


@dataclass(frozen=True)
class MuE3(PathTerm):
    p: PathTerm
    q: PathTerm
    r: PathTerm
    kids = ("p", "q", "r")
    loose = True


@dataclass(frozen=True)
class Nu(PathTerm):
    p: PathTerm
    kids = ("p",)


@dataclass(frozen=True)
class Xi(PathTerm):
    p: PathTerm
    kids = ("p",)


@dataclass(frozen=True)
class Xi1(PathTerm):
    p: PathTerm
    kids = ("p",)
    loose = True


@dataclass(frozen=True)
class Xi2(PathTerm):
    p: PathTerm
    kids = ("p",)
    loose = True


@dataclass(frozen=True)
class PairPath(PathTerm):
    left: PathTerm
    right: PathTerm
    kids = ("left", "right")


@dataclass(frozen=True)
class SubL(PathTerm):
    main: PathTerm
    pos: Position
    sub: PathTerm
    kids = ("main", "sub")


@dataclass(frozen=True)
class SubR(PathTerm):
    sub: PathTerm
    pos: Position
    main: PathTerm
    kids = ("sub", "main")


@dataclass(frozen=True)
class Ext(PathTerm):
    p: PathTerm
    kids = ("p",)


@dataclass(frozen=True)
class Hom(PathTerm):
    family: str
    f: FunExpr
    g: FunExpr
    at: PointTerm


@dataclass(frozen=True)
class Eta(PathTerm):
    at: PointTerm


# Congruences that act on a single path argument and push composition
# through themselves; these are the admissible one-hole contexts.
UNARY_CONGRUENCES = (Sigma, MuF, Mu1, Mu2, Nu, Xi, Ext)


def subterm(p: PathTerm, pos: Position) -> PathTerm:
    for i in pos:
        kids = p.children()
        if not 0 <= i < len(kids):
            raise IndexError(f"invalid position {list(pos)}")
        p = kids[i]
    return p


def replace_at(p: PathTerm, pos: Position, new: PathTerm) -> PathTerm:
    if not pos:
        return new
    kids = list(p.children())
    i = pos[0]
    if not 0 <= i < len(kids):
        raise IndexError(f"invalid position {list(pos)}")
    kids[i] = replace_at(kids[i], pos[1:], new)
    return p.with_children(tuple(kids))


def positions(p: PathTerm, prefix: Position = ()) -> Iterator[Position]:
    """Preorder (leftmost-outermost) enumeration of all positions."""
    yield prefix
    for i, k in enumerate(p.children()):
        yield from positions(k, prefix + (i,))


def size(p: PathTerm) -> int:
    return 1 + sum(size(k) for k in p.children())


def depth(p: PathTerm) -> int:
    return 1 + max((depth(k) for k in p.children()), default=0)


def is_loose(p: PathTerm) -> bool:
    return p.loose or any(is_loose(k) for k in p.children())


def map_points(p: PathTerm, fn) -> PathTerm:
    """Rebuild ``p`` with ``fn`` applied to every embedded point term."""
    changes = {}
    for f in fields(p):
        v = getattr(p, f.name)
        if f.name in p.kids:
            changes[f.name] = map_points(v, fn)
        elif isinstance(v, (Var, App, Pair, Fst, Snd, Star, NatLit)):
            changes[f.name] = fn(v)
    return replace(p, **changes) if changes else p


def canonical(p: PathTerm) -> PathTerm:
    """Point-normalize embedded points and function expressions."""
    p = map_points(p, normalize_point)
    if isinstance(p, MuF):
        return MuF(normalize_fun(p.fun), p.p)
    if isinstance(p, Hom):
        return Hom(p.family, normalize_fun(p.f), normalize_fun(p.g), p.at)
    return p


def canonicalize(p: PathTerm) -> PathTerm:
    kids = tuple(canonicalize(k) for k in p.children())
    if kids:
        p = p.with_children(kids)
    return canonical(p)


# ---------------------------------------------------------------- endpoints


def endpoints(p: PathTerm, env=None) -> tuple[PointTerm, PointTerm]:
    """Source and target of a strict-fragment path, in point-normal form."""
    if isinstance(p, Atom):
        if env is not None:
            env.check_atom(p)
        return normalize_point(p.source), normalize_point(p.target)
    if isinstance(p, (Rho,)):
        x = normalize_point(p.at)
        return x, x
    if isinstance(p, Eta):
        return Star(), normalize_point(p.at)
    if isinstance(p, Hom):
        if env is not None:
            env.check_hom(p)
        x = normalize_point(p.at)
        return apply_fun(p.f, x), apply_fun(p.g, x)
    if p.loose:
        raise LooseTerm(f"{type(p).__name__} has no endpoint semantics")
    if isinstance(p, Sigma):
        s, t = endpoints(p.p, env)
        return t, s
    if isinstance(p, Tau):
        s1, t1 = endpoints(p.first, env)
        s2, t2 = endpoints(p.second, env)
        if t1 != s2:
            raise EndpointMismatch(f"tau joins {t1} with {s2}")
        return s1, t2
    if isinstance(p, MuF):
        s, t = endpoints(p.p, env)
        return apply_fun(p.fun, s), apply_fun(p.fun, t)
    if isinstance(p, Mu1):
        s, t = endpoints(p.p, env)
        return _fst(s), _fst(t)
    if isinstance(p, Mu2):
        s, t = endpoints(p.p, env)
        return _snd(s), _snd(t)
    if isinstance(p, (Nu, Xi, Ext)):
        return endpoints(p.p, env)
    if isinstance(p, PairPath):
        s1, t1 = endpoints(p.left, env)
        s2, t2 = endpoints(p.right, env)
        return _pair(s1, s2), _pair(t1, t2)
    if isinstance(p, SubL):
        s, t = endpoints(p.main, env)
        ss, st = endpoints(p.sub, env)
        if point_at(t, p.pos) != ss:
            raise EndpointMismatch(f"subL hole {point_at(t, p.pos)} differs from {ss}")
        return s, normalize_point(point_replace(t, p.pos, st))
    if isinstance(p, SubR):
        ss, st = endpoints(p.sub, env)
        s, t = endpoints(p.main, env)
        if point_at(s, p.pos) != st:
            raise EndpointMismatch(f"subR hole {point_at(s, p.pos)} differs from {st}")
        return normalize_point(point_replace(s, p.pos, ss)), t
    raise TypeError(f"not a path term: {p!r}")


def try_endpoints(p: PathTerm, env=None) -> Optional[tuple[PointTerm, PointTerm]]:
    try:
        return endpoints(p, env)
    except (EndpointMismatch, LooseTerm, UnknownAtom):
        return None


@dataclass(frozen=True)
class Diagnostic:
    position: Position
    kind: str
    message: str


def well_formed(p: PathTerm, env=None, mode: str = "strict") -> list[Diagnostic]:
    """Collect diagnostics; an empty list means the term is well formed.

    Each failing node is reported once, at its own position; a node whose
    children already failed is not blamed again.
    """
    if mode not in ("strict", "loose"):
        raise ValueError(f"unknown mode {mode!r}")
    out: list[Diagnostic] = []

    def visit(q: PathTerm, pos: Position) -> bool:
        ok = all([visit(k, pos + (i,)) for i, k in enumerate(q.children())])
        if env is not None:
            try:
                if isinstance(q, Atom):
                    env.check_atom(q)
                elif isinstance(q, Hom):
                    env.check_hom(q)
            except UnknownAtom as e:
                out.append(Diagnostic(pos, "UnknownAtom", str(e)))
                return False
        if mode == "loose":
            return ok
        if q.loose:
            out.append(Diagnostic(pos, "LooseTerm", f"{type(q).__name__} is loose-only"))
            return False
        if not ok:
            return False
        try:
            endpoints(q)
        except EndpointMismatch as e:
            out.append(Diagnostic(pos, "EndpointMismatch", str(e)))
            return False
        return True

    visit(p, ())
    return out
