from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from periplex import piclass
from periplex.piclass import (
    _spo_even_rho,
    pi_d21,
    pi_d21_witness,
    pi_f31,
    pi_g3,
    pi_qn,
    pi_spo_even,
    pi_spo_even_rho,
    pi_spo_even_witness,
    pi_spo_odd,
    pi_spo_odd_rho,
    pi_type_one,
    spo_basic,
    spo_even_oracle,
    verdict,
)
from periplex.weights import NonIntegralWeight, build_root_datum


def test_type_one_examples():
    g = build_root_datum("gl", 1, 1)
    assert pi_type_one(g, g.weight(eps=[5], delta=[-3]))
    p = build_root_datum("pe", 2)
    assert pi_type_one(p, p.weight(eps=[0, 1]))
    assert not pi_type_one(p, p.weight(eps=[1, 1]))
    g21 = build_root_datum("gl", 2, 1)
    assert not pi_type_one(g21, g21.weight(eps=[0], delta=[4, 4]))
    osp = build_root_datum("spo-even", 2, 1)
    assert pi_type_one(osp, osp.weight(eps=[0], delta=[-2, -1]))
    with pytest.raises(ValueError):
        pi_type_one(build_root_datum("q", 2), build_root_datum("q", 2).weight(eps=[0, 1]))


def test_qn_examples():
    assert pi_qn(2, (1, 1))
    assert not pi_qn(2, (0, 0))
    assert not pi_qn(2, (2, 1))
    assert pi_qn(3, (-1, 0, 2))
    with pytest.raises(NonIntegralWeight):
        pi_qn(2, ("1/2", 0))
    with pytest.raises(ValueError):
        pi_qn(2, (1, 2, 3))


def test_spo_even_examples():
    assert pi_spo_even(1, 1, [0], [-1])
    assert not pi_spo_even(1, 1, [0], [0])
    assert not pi_spo_even(1, 1, [1], [-1])
    assert pi_spo_even(2, 2, [-1, 0], [-2, -1])
    assert pi_spo_even_rho(2, 2, [-1, 0], [-2, -1])
    assert not pi_spo_even(2, 2, [0, 0], [0, 0])
    assert not pi_spo_even_rho(2, 2, [0, 0], [0, 0])
    assert pi_spo_even_witness(1, 1, [0], [0]) == "mu_m != 0 when lambda_n = m-1"
    with pytest.raises(NonIntegralWeight):
        pi_spo_even(1, 1, ["1/2"], [0])
    with pytest.raises(ValueError):
        pi_spo_even(1, 1, [0, 1], [0])


def test_reflection_oracle_examples():
    assert spo_even_oracle(1, 1, [0], [-1]) == -1
    assert spo_even_oracle(1, 1, [0], [0]) == 0
    assert spo_even_oracle(1, 1, [-2], [5]) == -3
    with pytest.raises(ValueError):
        spo_even_oracle(2, 1, [0, 0], [0])


@pytest.mark.parametrize("n, m", [(1, 1), (1, 2), (2, 1)])
def test_three_spo_even_readings_agree(n, m):
    b = n + m + 2
    for c in product(range(-b, b + 1), repeat=n + m):
        lam, mu = c[:n], c[n:]
        want = pi_spo_even(n, m, lam, mu)
        assert pi_spo_even_rho(n, m, lam, mu) == want
        if spo_basic(n, m, lam, mu):
            assert (spo_even_oracle(n, m, lam, mu) < 0) == want


def test_literal_extra_clause_disagrees():
    """Demanding (λ+ρ, ε_m) = 0 in the extra clause contradicts the coordinate test."""
    bad = 0
    for c in product(range(-4, 5), repeat=2):
        if _spo_even_rho(1, 1, c[:1], c[1:], literal=True) != pi_spo_even(1, 1, c[:1], c[1:]):
            bad += 1
    assert bad > 0
    assert _spo_even_rho(1, 1, [0], [-1], literal=False) == pi_spo_even(1, 1, [0], [-1])


def test_spo_odd_examples():
    assert pi_spo_odd(1, 1, [0], [-1])
    assert not pi_spo_odd(1, 1, [0], [0])
    assert not pi_spo_odd(2, 1, [0, 0], [-1])


@pytest.mark.parametrize("n, m", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_spo_odd_shifted_form_agrees(n, m):
    b = n + m + 1
    for c in product(range(-b, b + 1), repeat=n + m):
        assert pi_spo_odd(n, m, c[:n], c[n:]) == pi_spo_odd_rho(n, m, c[:n], c[n:])


def test_d21_examples():
    assert pi_d21(1, 0, -1, -1)
    assert not pi_d21(1, 1, -1, -1)
    assert not pi_d21(1, 2, -1, -1)
    assert pi_d21("1/2", 1, -2, -2)
    assert pi_d21_witness(2, 1, -3, -2) == "1 + mu_1 != ±(1 + mu_2) zeta when lambda_1 = 1"
    with pytest.raises(ValueError):
        pi_d21(0, 0, -1, -1)


def test_g3_examples():
    assert pi_g3(0, -2, -3)
    assert not pi_g3(3, -2, -3)
    assert not pi_g3(0, -1, -1)


def test_f31_examples():
    assert pi_f31(1, "-5/2", "-3/2", "-1/2")
    assert not pi_f31("3/2", "-5/2", "-3/2", "-1/2")
    assert not pi_f31(2, -3, -2, -1)
    with pytest.raises(NonIntegralWeight):
        pi_f31(1, "-1/2", -2, -1)
    with pytest.raises(NonIntegralWeight):
        pi_f31("1/3", -3, -2, -1)


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6))
def test_g3_matches_inequalities(l1, m1, m2):
    assert pi_g3(l1, m1, m2) == (l1 <= 2 and 2 * m1 < m2 < m1)


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_classifiers_are_deterministic(c):
    assert pi_qn(3, c) == pi_qn(3, list(c)) == pi_qn(3, tuple(Fraction(x) for x in c))


def test_verdict():
    v = verdict("f31", (), ["3/2"], ["-5/2", "-3/2", "-1/2"])
    assert v == {
        "family": "f31",
        "weight": {"lambda": ["3/2"], "mu": ["-5/2", "-3/2", "-1/2"]},
        "injective": False,
        "witness": "mu_1 + 1/2 - mu_2 - mu_3 != 0 when lambda_1 = 3/2",
    }
    assert verdict("pe", [2], [], [0, 1])["injective"] is True
    assert verdict("pe", [2], [], [1, 0])["witness"] == "anti-dominant"
    assert verdict("spo-even", [1, 1], [-2], [5])["injective"] is True
    assert verdict("spo-even", [1, 1], [0], [0])["injective"] is False
    assert verdict("d21", (), [0], [-1, -1], zeta="1/3")["weight"]["zeta"] == "1/3"
    with pytest.raises(ValueError):
        verdict("d21", (), [0], [-1, -1])
    with pytest.raises(ValueError):
        verdict("sl", (2,), [], [0, 0])
    assert piclass.verdict("q", [2], [], [1, 1])["injective"]
