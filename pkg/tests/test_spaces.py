import pytest
from hypothesis import given, strategies as st

from pathrw.engine import normal_form, rw_equal
from pathrw.env import coprod_env
from pathrw.errors import EmptyCode, EndpointMismatch, NotCirclePath, NotCoprodPath, NotNatPath
from pathrw.spaces import (
    BASE, LOOP, Empty, Impossible, Left, Recur, Right, Unit, axiom_k_sample, circle_compose,
    exponent_sum, flatten, loop_power, nat_code, nat_decode, nat_dec_eq, nat_encode, nat_r,
    read_loop_power, unit_connect, winding,
)
from pathrw.syntax import parse_path
from pathrw.terms import (
    App, Atom, Eta, MuF, Named, NatLit, Rho, Sigma, Star, Tau, Var,
)

from conftest import circle_terms

SUCC = Named("succ")


def test_winding_examples():
    assert winding(Rho(BASE)) == 0
    assert winding(Tau(LOOP, Sigma(LOOP))) == 0
    assert winding(Tau(LOOP, LOOP)) == 2
    assert winding(Sigma(Tau(LOOP, LOOP))) == -2


def test_winding_rejects_foreign_atoms():
    with pytest.raises(NotCirclePath):
        winding(Tau(LOOP, Atom("other", BASE, BASE)))
    with pytest.raises(NotCirclePath):
        winding(MuF(Named("f"), LOOP))


def test_mixed_residue_is_an_internal_error():
    with pytest.raises(RuntimeError):
        read_loop_power(Tau(LOOP, Sigma(LOOP)))


def test_loop_power_examples():
    assert loop_power(0) == Rho(BASE)
    assert loop_power(1) == Tau(LOOP, Rho(BASE))
    assert normal_form(loop_power(1)) == LOOP
    assert loop_power(-1) == Tau(Sigma(LOOP), Rho(BASE))
    assert normal_form(loop_power(-1)) == Sigma(LOOP)


def test_circle_compose_examples():
    pq = circle_compose(LOOP, Sigma(LOOP))
    assert pq == Tau(Sigma(LOOP), LOOP) and winding(pq) == 0
    assert rw_equal(circle_compose(LOOP, Rho(BASE)), LOOP)
    assert winding(circle_compose(loop_power(2), loop_power(3))) == 5


@given(st.integers(-50, 50))
def test_winding_inverts_loop_power(n):
    assert winding(loop_power(n)) == n


@given(circle_terms(6))
def test_winding_matches_exponent_sum(p):
    assert winding(p) == exponent_sum(p)


@given(circle_terms(), circle_terms())
def test_winding_is_a_homomorphism(p, q):
    assert winding(circle_compose(p, q)) == winding(p) + winding(q)


def test_nat_code_examples():
    assert nat_code(0, 0) == Unit()
    assert nat_code(1, 0) == Empty()
    assert nat_code(3, 3) == Recur(Recur(Recur(Unit())))
    assert flatten(nat_code(2, 5)) == Empty()


def test_nat_r_examples():
    assert nat_r(0) == Unit() and nat_r(5) == Unit()
    assert flatten(nat_r(1)) == flatten(nat_r(0))


def test_nat_decode_examples():
    assert nat_decode(0, 0, Unit()) == Rho(NatLit(0))
    p = nat_decode(2, 2, Unit())
    assert p == MuF(SUCC, MuF(SUCC, Rho(NatLit(0))))
    assert normal_form(p) == Rho(NatLit(2))
    with pytest.raises(EmptyCode):
        nat_decode(1, 0, Unit())
    with pytest.raises(EmptyCode):
        nat_decode(1, 1, Empty())


def test_nat_encode_examples():
    assert nat_encode(0, 0, Rho(NatLit(0))) == Unit()
    assert nat_encode(2, 2, nat_decode(2, 2, Unit())) == Recur(Recur(Unit()))
    with pytest.raises(EndpointMismatch):
        nat_encode(1, 2, Rho(NatLit(1)))
    with pytest.raises(NotNatPath):
        nat_encode(0, 0, MuF(Named("f"), Rho(NatLit(0))))


def test_nat_encode_decode_roundtrip():
    for m in range(31):
        assert flatten(nat_encode(m, m, nat_decode(m, m, Unit()))) == Unit()


def test_nat_dec_eq_examples():
    assert nat_dec_eq(4, 4) == Left(nat_decode(4, 4, Unit()))
    assert nat_dec_eq(0, 0) == Left(Rho(NatLit(0)))
    r = nat_dec_eq(0, 1)
    assert isinstance(r, Right) and "¬(0 = 1)" in str(r.value)


def test_coprod_classify_examples():
    env = coprod_env()
    inl, inr = Named("inl"), Named("inr")
    a0 = Var("a0")
    q = env.atom("p")
    from pathrw.spaces import coprod_classify
    assert coprod_classify(MuF(inl, Rho(a0))) == Left(Rho(a0))
    assert coprod_classify(Sigma(MuF(inl, q))) == Left(Sigma(q))
    assert coprod_classify(MuF(inr, env.atom("q"))) == Right(env.atom("q"))
    cross = Atom("c", App(inl, a0), App(inr, Var("b0")))
    assert coprod_classify(cross) == Impossible()
    with pytest.raises(NotCoprodPath):
        coprod_classify(q)


def test_unit_connect_examples():
    assert normal_form(unit_connect(Star(), Star())) == Rho(Star())
    assert normal_form(unit_connect(Var("u"), Var("u"))) == Rho(Var("u"))
    t = unit_connect(Var("u"), Var("v"))
    assert t == Tau(Sigma(Eta(Var("u"))), Eta(Var("v"))) and normal_form(t) == t


def test_axiom_k_examples():
    nat = axiom_k_sample("nat", NatLit(3), 200, seed=0)
    assert nat.collapsed == nat.samples == 200
    circle = axiom_k_sample("circle", BASE, 200, seed=0)
    assert circle.fraction < 1.0 and circle.witness is not None
    assert normal_form(circle.witness) != Rho(BASE)
    empty = axiom_k_sample("nat", samples=0)
    assert empty.samples == 0 and empty.witnesses == []
