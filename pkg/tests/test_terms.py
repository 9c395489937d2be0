import pytest
from hypothesis import given

from pathrw.errors import EndpointMismatch, LooseTerm, UnknownAtom
from pathrw.terms import (
    App, Atom, Compose, Fst, Identity, MuE3, MuF, Named, NatLit, Pair, PairMap, PairPath, Rho,
    Sigma, Snd, Star, SubL, SubR, Tau, Var, endpoints, normalize_fun, normalize_point,
    point_at, point_positions, point_replace, positions, replace_at, size, subterm, well_formed,
)

from conftest import SAMPLE, terms

BASE = Var("base")
LOOP = Atom("loop", BASE, BASE)
x, y, z = Var("x"), Var("y"), Var("z")
f, g, h = Named("f"), Named("g"), Named("h")


def test_rho_endpoints():
    assert endpoints(Rho(BASE)) == (BASE, BASE)


def test_sigma_loop_endpoints():
    assert endpoints(Sigma(LOOP)) == (BASE, BASE)


def test_tau_endpoints():
    assert endpoints(Tau(LOOP, Sigma(LOOP))) == (BASE, BASE)


def test_mu_endpoints_on_numerals():
    assert endpoints(MuF(Named("succ"), Rho(NatLit(0)))) == (NatLit(1), NatLit(1))


def test_tau_mismatch_raises():
    with pytest.raises(EndpointMismatch):
        endpoints(Tau(LOOP, Rho(Var("other"))))


def test_loose_terms_have_no_endpoints():
    a = Atom("a", x, y)
    with pytest.raises(LooseTerm):
        endpoints(MuE3(a, a, a))


def test_unknown_atom_against_env():
    with pytest.raises(UnknownAtom):
        endpoints(Atom("nope", x, y), SAMPLE)


def test_pair_path_endpoints():
    a, b = Atom("a", x, y), Atom("b", y, z)
    assert endpoints(PairPath(a, b)) == (Pair(x, y), Pair(y, z))


def test_sub_endpoints_replace_the_addressed_point():
    a, b = Atom("a", x, y), Atom("b", y, z)
    # target of main at the hole is swapped for the target of sub
    assert endpoints(SubL(MuF(f, a), (0,), b)) == (App(f, x), App(f, z))
    # source of main at the hole is swapped for the source of sub
    assert endpoints(SubR(a, (0,), MuF(f, b))) == (App(f, x), App(f, z))


def test_point_normalization():
    assert normalize_point(Fst(Pair(x, y))) == x
    assert normalize_point(Snd(Pair(x, y))) == y
    assert normalize_point(Pair(Fst(x), Snd(x))) == x
    assert normalize_point(App(Identity(), x)) == x
    assert normalize_point(App(Compose(g, f), x)) == App(g, App(f, x))
    assert normalize_point(App(PairMap(g, h), Pair(x, y))) == Pair(App(g, x), App(h, y))
    assert normalize_point(App(Named("succ"), NatLit(2))) == NatLit(3)


def test_fun_normalization():
    assert normalize_fun(Compose(Identity(), f)) == f
    assert normalize_fun(Compose(Compose(h, g), f)) == Compose(h, Compose(g, f))


def test_point_positions_roundtrip():
    t = Pair(App(f, x), y)
    for pos in point_positions(t):
        assert point_replace(t, pos, point_at(t, pos)) == t


def test_well_formed_ok():
    assert well_formed(Tau(LOOP, LOOP)) == []


def test_well_formed_reports_root_mismatch():
    ds = well_formed(Tau(LOOP, Rho(Var("other"))))
    assert [(d.position, d.kind) for d in ds] == [((), "EndpointMismatch")]


def test_well_formed_loose():
    a = Atom("a", x, y)
    assert [d.kind for d in well_formed(MuE3(a, a, a), mode="strict")] == ["LooseTerm"]
    assert well_formed(MuE3(a, a, a), mode="loose") == []


def test_well_formed_position_is_deep():
    bad = Sigma(Tau(LOOP, Rho(Var("other"))))
    assert [d.position for d in well_formed(bad)] == [(0,)]


def test_star_is_a_point():
    assert endpoints(Rho(Star())) == (Star(), Star())


@given(terms())
def test_generated_terms_are_well_formed(p):
    assert well_formed(p, SAMPLE) == []


@given(terms())
def test_double_sigma_endpoints(p):
    assert endpoints(Sigma(Sigma(p))) == endpoints(p)


@given(terms())
def test_replace_at_subterm_is_identity(p):
    for pos in positions(p):
        assert replace_at(p, pos, subterm(p, pos)) == p
    assert len(list(positions(p))) == size(p)
