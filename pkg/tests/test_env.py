import pytest

from pathrw.env import Environment, format_env, parse_env, sample_env
from pathrw.errors import EnvironmentError_, UnknownAtom
from pathrw.terms import Named, Var


def test_parse_env_lines():
    env = parse_env("""
        # the circle
        point base : S1
        atom loop : base = base
        fun succ : constructor
        hom H : f ~ g
    """)
    assert env.points == {"base": "S1"}
    assert env.atoms["loop"] == (Var("base"), Var("base"))
    assert env.functions == {"succ": "constructor"}
    assert env.homotopies["H"] == (Named("f"), Named("g"))


def test_format_roundtrip():
    env = sample_env()
    again = parse_env(format_env(env))
    assert again == env


def test_names_unique_across_categories():
    env = Environment().add_point("a")
    with pytest.raises(EnvironmentError_):
        env.add_atom("a", Var("a"), Var("a"))


def test_bad_line_reports_line_number():
    with pytest.raises(EnvironmentError_, match="line 2"):
        parse_env("point x\natom a : x\n")


def test_unknown_kind():
    with pytest.raises(EnvironmentError_):
        parse_env("fun f : weird")


def test_undeclared_lookup():
    with pytest.raises(UnknownAtom):
        sample_env().atom("zz")
