import pytest
from hypothesis import given

from pathrw.env import circle_env, nat_env
from pathrw.errors import PathSyntaxError, UnknownAtom
from pathrw.generate import GENERIC_WEIGHTS, random_term
from pathrw.syntax import parse_path, parse_point, print_path, print_point
from pathrw.terms import Atom, MuF, Named, NatLit, PairPath, Rho, Sigma, Tau, Var

from conftest import SAMPLE, terms

LOOP = Atom("loop", Var("base"), Var("base"))


def test_parse_tau():
    assert parse_path("tau(loop,sigma(loop))") == Tau(LOOP, Sigma(LOOP))


def test_parse_mu_numeral():
    assert parse_path("mu[succ](rho(0))", nat_env()) == MuF(Named("succ"), Rho(NatLit(0)))


@pytest.mark.parametrize("text", ["tau(x", "tau(loop)", "sigma(loop", "", "rho()", "loop loop"])
def test_syntax_errors(text):
    with pytest.raises(PathSyntaxError):
        parse_path(text)


def test_syntax_error_position():
    with pytest.raises(PathSyntaxError) as ei:
        parse_path("tau(loop,\n  sigma(loop)")
    assert ei.value.line == 2


def test_unknown_atom():
    with pytest.raises(UnknownAtom):
        parse_path("tau(loop,other)")


def test_print_examples():
    assert print_path(Rho(Var("base"))) == "rho(base)"
    assert print_path(Sigma(Sigma(LOOP))) == "sigma(sigma(loop))"
    assert print_path(PairPath(LOOP, Sigma(LOOP))) == "pair(loop,sigma(loop))"


def test_whitespace_is_insignificant():
    assert parse_path(" tau ( loop , sigma( loop ) ) ") == Tau(LOOP, Sigma(LOOP))


def test_point_roundtrip():
    for text in ["x", "3", "*", "f(x)", "<x,y>", "fst(<x,y>)", "comp(g,f)(x)", "pairmap(f,g)(<x,y>)"]:
        assert print_point(parse_point(text)) == text


def test_roundtrip_thousand_terms():
    for seed in range(1000):
        p = random_term(SAMPLE, 5, GENERIC_WEIGHTS, seed=seed)
        assert parse_path(print_path(p), SAMPLE) == p


@given(terms(max_depth=6))
def test_roundtrip_property(p):
    text = print_path(p)
    assert print_path(parse_path(text, SAMPLE)) == text
