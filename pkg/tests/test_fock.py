import random
from fractions import Fraction as F

import pytest

from voa import fock
from voa.fock import (State, exp_module, lam_context, parity_pattern,
                      project_theta, theta, twisted_module, vacuum)


def test_named_generators():
    w1 = fock.omega_i(2, 1)
    assert w1 == State.monomial(vacuum(2), ((1, 2), (1, 2)), F(1, 2))
    assert fock.omega(2) == fock.omega_i(2, 1) + fock.omega_i(2, 2)
    lam = fock.lam_pair(2, 1, 2)
    want = sum((fock.s_pair(2, 1, 2, 1, s).scale(F(c)) for s, c in
                ((2, 45), (3, 190), (4, 240), (5, 96))), State(vacuum(2)))
    assert lam == want
    with pytest.raises(ValueError):
        fock.s_pair(2, 1, 1, 1, 1)


def test_generator_dispatcher():
    assert fock.generator("omega", 3) == fock.omega(3)
    assert fock.generator("omega", 3, 2) == fock.omega_i(3, 2)
    assert fock.generator("S", 3, 1, 2, 1, 3) == fock.s_pair(3, 1, 2, 1, 3)
    with pytest.raises(ValueError):
        fock.generator("nope", 2)


def test_theta_values():
    s = State.monomial(vacuum(2), ((1, 2), (2, 4)))
    assert theta(s) == s  # two operators
    tw = twisted_module(1)
    h = State.monomial(tw, ((1, 1),))
    assert theta(h) == -h
    assert theta(State.base(vacuum(1))) == State.base(vacuum(1))
    with pytest.raises(ValueError):
        theta(State.base(exp_module(1)))


def test_theta_involution_randomized():
    rng = random.Random(5)
    for _ in range(200):
        ops = tuple(sorted((rng.randint(1, 2), 2 * rng.randint(1, 3))
                           for _ in range(rng.randint(0, 4))))
        s = State.monomial(vacuum(2), ops, F(rng.randint(1, 5)))
        assert theta(theta(s)) == s


def test_generators_are_theta_fixed():
    for g in (fock.omega_i(3, 2), fock.ham_i(3, 1), fock.jay_i(3, 3),
              fock.s_pair(3, 1, 3, 1, 2), fock.e_u(3, 1, 2),
              fock.lam_pair(3, 2, 3)):
        assert theta(g) == g


def test_weight_values():
    assert fock.ham_i(1, 1).weight() == 4
    assert State.base(twisted_module(1)).weight() == F(1, 16)
    ctx = lam_context(2)
    w = State.base(exp_module(2)).weight()
    assert w == (ctx.var("lam1") ** 2 + ctx.var("lam2") ** 2) * F(1, 2)
    with pytest.raises(ValueError):
        (fock.omega_i(1, 1) + State.base(vacuum(1))).weight()


def test_weight_additive_over_concatenation():
    rng = random.Random(7)
    for _ in range(200):
        ops1 = tuple(sorted((rng.randint(1, 2), 2 * rng.randint(1, 3))
                            for _ in range(rng.randint(0, 3))))
        ops2 = tuple(sorted((rng.randint(1, 2), 2 * rng.randint(1, 3))
                            for _ in range(rng.randint(0, 3))))
        s1 = State.monomial(vacuum(2), ops1)
        s2 = State.monomial(vacuum(2), ops2)
        s12 = State.monomial(vacuum(2), tuple(sorted(ops1 + ops2)))
        assert s12.weight() == s1.weight() + s2.weight()


def test_parity_pattern():
    assert parity_pattern(((1, 2), (2, 6))) == frozenset({1, 2})
    assert parity_pattern(((1, 2), (1, 2))) == frozenset()
    rng = random.Random(9)
    for _ in range(250):
        ops1 = tuple((rng.randint(1, 4), 2 * rng.randint(1, 3))
                     for _ in range(rng.randint(0, 4)))
        ops2 = tuple((rng.randint(1, 4), 2 * rng.randint(1, 3))
                     for _ in range(rng.randint(0, 4)))
        assert parity_pattern(ops1 + ops2) == \
            parity_pattern(ops1) ^ parity_pattern(ops2)


def test_projections():
    h = State.monomial(vacuum(1), ((1, 2),))
    assert project_theta(h, -1) == h
    assert not project_theta(h, 1)
    s = fock.s_pair(2, 2, 1, 1, 1)
    assert project_theta(s, 1) == s


def test_render_round_trips_through_catalog_parser():
    from voa.catalog import Parser, _tokenize
    from voa.runner import Evaluator

    rng = random.Random(31)
    ev = Evaluator(2, {"i": 1, "j": 2})
    for module in (vacuum(2), twisted_module(2), exp_module(2)):
        step = 2 if not module.twisted() else 1
        off = 0 if not module.twisted() else 1
        for _ in range(60):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                ops = tuple(sorted(
                    (rng.randint(1, 2), 2 * rng.randint(1, 3) - off)
                    for _ in range(rng.randint(0, 3))))
                terms[ops] = F(rng.randint(-5, 5), rng.randint(1, 4))
            s = State(module, terms)
            text = s.render()
            p = Parser(_tokenize(text, 0), 0)
            node = p.expr()
            p.expect("end")
            back = ev.state(node)
            back = back if back is not None else State(module)
            assert back == s, (text, back.render())


def test_render_canonical_text():
    s = State.monomial(vacuum(2), ((1, 4), (1, 4), (2, 2)), F(3, 2))
    assert s.render() == "3/2*h(1,-2)^2 h(2,-1) vac"
    assert State(vacuum(1)).render() == "0"
    assert State.base(twisted_module(1)).render() == "vactw"
