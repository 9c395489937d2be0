import pytest
from hypothesis import given

from pathrw.engine import one_step_reducts
from pathrw.fidelity import CASES, fixture_env, run_case
from pathrw.rules import apply, catalog, match_at_root, redexes, rule
from pathrw.syntax import parse_path
from pathrw.terms import (
    Atom, Hom, MuF, Named, NatLit, Rho, Sigma, Tau, Var, endpoints, try_endpoints,
)

from conftest import SAMPLE, terms

BASE = Var("base")
LOOP = Atom("loop", BASE, BASE)
FIX = fixture_env()


def P(text):
    return parse_path(text, FIX)


def test_catalog_sizes():
    assert len(catalog()) == 47
    assert len(catalog(include_ext=True)) == 50
    assert [r.id for r in catalog(True)] == list(range(1, 51))
    assert len({r.name for r in catalog(True)}) == 50


def test_catalog_groups():
    assert {r.name for r in catalog(True) if r.group == "extensionality"} == {"extl", "extr", "exp"}


def test_ss_and_tt_shapes():
    ss, tt = rule("ss"), rule("tt")
    assert (ss.lhs, ss.rhs) == ("sigma(sigma(r))", "r")
    assert (tt.lhs, tt.rhs) == ("tau(tau(t,r),s)", "tau(t,tau(r,s))")
    assert (rule("extl").lhs, rule("extl").rhs) == ("nu(ext(t))", "t")


def test_every_rule_has_a_citation():
    assert all(r.citation for r in catalog(True))


def test_fidelity_cases_cover_the_catalog():
    assert [c.rule for c in CASES] == [r.name for r in catalog(True)]


@pytest.mark.parametrize("case", CASES, ids=[c.rule for c in CASES])
def test_rule_fidelity(case):
    ok, msg = run_case(case, FIX)
    assert ok, msg


def test_match_tr_root_context():
    m = match_at_root("tr", Tau(LOOP, Sigma(LOOP)))
    assert m["r"] == LOOP and m.hole == ()


def test_match_tr_through_congruence():
    m = match_at_root("tr", P("tau(mu[f](sigma(a)),mu[f](sigma(sigma(a))))"))
    assert m["r"] == P("sigma(a)") and m.hole == (0,)


def test_tr_does_not_cross_a_composite():
    # tau(a, .) is not a congruence: a;loop;a;loop^-1 is not a
    p = Tau(Tau(LOOP, LOOP), Tau(LOOP, Sigma(LOOP)))
    assert match_at_root("tr", p) is None


def test_match_head_mismatch():
    assert match_at_root("ss", P("tau(a,b)")) is None


def test_apply_examples():
    assert apply("ss", match_at_root("ss", Sigma(Sigma(LOOP)))) == LOOP
    m = match_at_root("stss", P("sigma(tau(a,b))"))
    assert apply("stss", m) == P("tau(sigma(b),sigma(a))")
    succ = MuF(Named("succ"), Rho(NatLit(0)))
    assert apply("mxp", match_at_root("mxp", succ)) == Rho(NatLit(1))


def test_redexes_examples():
    assert redexes(Sigma(Sigma(LOOP))) == [((), "ss")]
    found = redexes(Tau(Rho(BASE), Tau(LOOP, Sigma(LOOP))))
    assert ((), "tlr") in found and ((1,), "tr") in found
    assert redexes(LOOP) == []


def test_tf_needs_the_same_function():
    assert match_at_root("tf", P("tau(mu[f](a),mu[g](b))")) is None
    assert match_at_root("tf", P("tau(mu[comp(f,id)](a),mu[f](b))")) is not None


def test_hp_needs_g_and_matching_start():
    assert match_at_root("hp", P("tau(H[H](x),mu[f](a))")) is None
    assert match_at_root("hp", P("tau(H[H](y),mu[g](a))")) is None


def test_mxc_needs_a_pair_map():
    assert match_at_root("mxc", P("mu[f](pair(a,b))")) is None


def test_sub_pair_rules_need_equal_positions():
    # same shape as the sls fixture but the two holes differ
    p = P("subL(subL(mu[f](a),[0],b),[],sigma(mu[f](b)))")
    assert match_at_root("sls", p) is None


def test_tst_corrected_rhs():
    p = P("tau(sigma(a),tau(a,b))")
    out = apply("tst", match_at_root("tst", p))
    assert out == P("b") and endpoints(out) == endpoints(p)


def test_no_rule_matches_atoms_or_rho():
    for t in (LOOP, Rho(BASE), P("a"), Rho(Var("x"))):
        assert redexes(t, include_ext=True) == []


@given(terms())
def test_every_contraction_preserves_endpoints(p):
    e = endpoints(p)
    for pos, name, q in one_step_reducts(p, include_ext=True):
        assert try_endpoints(q) == e, (pos, name)
