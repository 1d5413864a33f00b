from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from periplex.weights import (
    Family,
    FormUndefined,
    NonIntegralWeight,
    ParityWeight,
    Root,
    Weight,
    WeylElement,
    build_root_datum,
    coroot_pairing,
    is_antidominant,
    is_integral,
    longest_element,
    odd_reflection,
    odd_sum,
    omega,
    pair,
    rho_signed,
    weyl_apply,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def weights(n):
    return st.lists(rationals, min_size=n, max_size=n).map(lambda c: Weight(tuple(c)))


# (family, ranks) -> (#even roots, #odd roots), counted from the matrix shapes
ROOT_COUNTS = [
    ("pe", (1,), 0, 1),
    ("pe", (2,), 2, 4),
    ("pe", (3,), 6, 9),
    ("gl", (2, 1), 2, 4),
    ("gl", (2, 3), 8, 12),
    ("q", (3,), 6, 6),
    ("spo-even", (1, 1), 2, 4),
    ("spo-even", (2, 2), 12, 16),
    ("spo-odd", (1, 1), 4, 6),
    ("spo-odd", (2, 1), 10, 12),
]


@pytest.mark.parametrize("family, ranks, n_even, n_odd", ROOT_COUNTS)
def test_root_counts(family, ranks, n_even, n_odd):
    g = build_root_datum(family, *ranks)
    assert (len(g.even_roots), len(g.odd_roots)) == (n_even, n_odd)


@pytest.mark.parametrize("family, n_even, n_odd", [("d21", 6, 8), ("g3", 14, 14), ("f31", 20, 16)])
def test_exceptional_root_counts(family, n_even, n_odd):
    g = build_root_datum(family, zeta=1) if family == "d21" else build_root_datum(family)
    assert (len(g.even_roots), len(g.odd_roots)) == (n_even, n_odd)


@pytest.mark.parametrize("family, ranks", [(f, r) for f, r, _, _ in ROOT_COUNTS])
def test_positive_system_splits_even_roots(family, ranks):
    g = build_root_datum(family, *ranks)
    pos = set(g.positive)
    for r in g.even_roots:
        neg = Root(-r.weight, 0)
        assert (r in pos) != (neg in pos)
    assert set(g.even_simple) <= pos


def test_pe_odd_roots_not_negation_closed():
    g = build_root_datum("pe", 2)
    odd = {r.weight for r in g.odd_roots}
    assert Weight.of(2, 0) in odd and Weight.of(-2, 0) not in odd


@given(weights(3), weights(3), weights(3), rationals)
def test_pair_is_symmetric_bilinear(a, b, c, t):
    g = build_root_datum("pe", 3)
    assert pair(g, a, b) == pair(g, b, a)
    assert pair(g, a + t * b, c) == pair(g, a, c) + t * pair(g, b, c)


def test_super_form_signs():
    g = build_root_datum("gl", 1, 1)
    d, e = Weight((0,), (1,)), Weight((1,), (0,))
    assert pair(g, d, d) == 1 and pair(g, e, e) == -1
    gamma = d - e
    assert pair(g, gamma, gamma) == 0


def test_exceptional_form_is_unmodelled():
    g = build_root_datum("g3")
    with pytest.raises(FormUndefined):
        pair(g, g.roots[0].weight, g.roots[0].weight)


def test_build_root_datum_rejects_bad_input():
    with pytest.raises(ValueError):
        build_root_datum("sl", 2)
    with pytest.raises(ValueError):
        build_root_datum("pe", 0)
    with pytest.raises(ValueError):
        build_root_datum("gl", 2)
    with pytest.raises(ValueError):
        build_root_datum("d21", zeta=0)
    with pytest.raises(ValueError):
        build_root_datum("pe", 2, zeta=1)


def test_floats_and_bools_rejected():
    with pytest.raises(TypeError):
        Weight((0.5, 1))
    with pytest.raises(TypeError):
        Weight((True,))
    assert Weight(("1/2", 3)).eps == (Fraction(1, 2), Fraction(3))


@given(weights(4), weights(4))
def test_weight_arithmetic(a, b):
    assert (a + b) - b == a
    assert -(-a) == a
    assert 2 * a == a + a
    assert all(isinstance(c, Fraction) for c in (a - b).eps)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        Weight.of(1) + Weight.of(1, 2)


def test_parity_validation():
    with pytest.raises(ValueError):
        ParityWeight(Weight.of(0), 2)
    with pytest.raises(ValueError):
        Root(Weight.of(1), 3)


def test_rho_and_odd_sum():
    g = build_root_datum("pe", 2)
    pos_even = [r for r in g.even_roots if r.weight == Weight.of(1, -1)]
    assert rho_signed(pos_even) == Weight.of("1/2", "-1/2")
    odd = [Root(Weight.of(2, 0), 1), Root(Weight.of(1, 1), 1)]
    assert rho_signed(odd) == Weight.of("-3/2", "-1/2")
    assert odd_sum(odd) == Weight.of(3, 1)
    assert rho_signed([], zero=Weight.zero(2)) == Weight.zero(2)
    with pytest.raises(ValueError):
        rho_signed([])
    with pytest.raises(ValueError):
        odd_sum(pos_even)


def test_omega():
    assert omega(2, 3) == Weight.of(1, 1, 0)
    assert omega(3, 3) == Weight.of(1, 1, 1)


def test_longest_element_reverses():
    assert weyl_apply(longest_element(3), Weight.of(1, 2, 3)) == Weight.of(3, 2, 1)
    assert weyl_apply(longest_element([2, 1]), Weight.of(1, 2, 3)) == Weight.of(2, 1, 3)


@pytest.mark.parametrize("family, ranks", [("spo-even", (1, 2)), ("spo-even", (2, 3)), ("spo-odd", (2, 1)), ("gl", (2, 2))])
def test_longest_element_sends_positive_to_negative(family, ranks):
    g = build_root_datum(family, *ranks)
    w = longest_element(g)
    pos = {r.weight for r in g.positive if r.parity == 0}
    neg = {-x for x in pos}
    assert {weyl_apply(w, x) for x in pos} == neg


@given(st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4))
def test_weyl_action_preserves_form(a, b):
    g = build_root_datum("spo-even", 2, 2)
    w = longest_element(g)
    x, y = Weight.from_coords(a, 2), Weight.from_coords(b, 2)
    assert pair(g, weyl_apply(w, x), weyl_apply(w, y)) == pair(g, x, y)


def test_weyl_element_validation():
    with pytest.raises(ValueError):
        WeylElement((0, 0))
    with pytest.raises(ValueError):
        WeylElement((0, 1), (1, 2))
    with pytest.raises(ValueError):
        weyl_apply(WeylElement.identity(2), Weight.of(1, 2, 3))


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_pe_antidominant_means_strictly_increasing(c):
    g = build_root_datum("pe", 3)
    assert is_antidominant(g, Weight(tuple(c))) == (c[0] < c[1] < c[2])


def test_antidominant_refuses_nonintegral():
    g = build_root_datum("pe", 2)
    assert not is_integral(g, Weight.of("1/2", 0))
    assert is_integral(g, Weight.of("1/2", "-1/2"))
    with pytest.raises(NonIntegralWeight):
        is_antidominant(g, Weight.of("1/2", 0))


def test_coroot_pairing_long_and_short():
    g = build_root_datum("spo-odd", 1, 1)
    lam = g.weight(eps=[3], delta=[2])
    two_delta = Root(Weight((0,), (2,)), 0)
    assert coroot_pairing(g, lam, two_delta) == 2
    with pytest.raises(ValueError):
        coroot_pairing(g, lam, Root(Weight((1,), (1,)), 1))


def test_odd_reflection():
    g = build_root_datum("gl", 1, 1)
    gamma = Root(Weight((-1,), (1,)), 1)
    typical = Weight((2,), (1,))
    atypical = Weight((-1,), (1,))
    assert odd_reflection(typical, gamma, g) == typical - gamma.weight
    assert odd_reflection(atypical, gamma, g) == atypical
    with pytest.raises(ValueError):
        odd_reflection(typical, Root(gamma.weight, 0), g)
    with pytest.raises(ValueError):
        odd_reflection(Weight.of(0, 0), Root(Weight.of(1, 1), 1), build_root_datum("pe", 2))


def test_family_values():
    assert Family("spo-even") is Family.SPO_EVEN
    assert build_root_datum(Family.PE, 2).family is Family.PE
