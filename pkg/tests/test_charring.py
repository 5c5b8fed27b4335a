"""Formal characters, Weyl characters, Frobenius twists, digit products.

The dimension oracle below evaluates the product formula
prod (<lam+rho, alpha_check> / <rho, alpha_check>) over positive
coroots with exact fractions, independently of the character-division
algorithm under test.
"""

import itertools
from fractions import Fraction

import pytest

from weylkit import (
    Character,
    ResourceLimitError,
    Weight,
    build_root_datum,
    dimension,
    expand_in_standard_basis,
    frobenius_twist,
    is_weyl_invariant,
    pairing,
    rho,
    sl2_simple_character,
    steinberg_digits,
    tensor,
    trivial_character,
    weyl_character,
)


def dimension_formula(datum, lam):
    """Independent oracle: the product formula with exact fractions."""
    shifted = lam + rho(datum)
    value = Fraction(1)
    for _, coroot in datum.positive_roots:
        value *= Fraction(pairing(shifted, coroot),
                          pairing(rho(datum), coroot))
    assert value.denominator == 1
    return int(value)


@pytest.mark.parametrize("series", ["A1", "A2", "B2", "C2", "G2"])
def test_dimension_matches_product_formula(series):
    datum = build_root_datum(series)
    top = 4 if series != "G2" else 3
    for coords in itertools.product(range(top), repeat=datum.rank):
        lam = Weight(coords)
        ch = weyl_character(datum, lam)
        assert dimension(ch) == dimension_formula(datum, lam)


def test_known_dimensions():
    a1 = build_root_datum("A1")
    for n in range(8):
        assert dimension(weyl_character(a1, Weight((n,)))) == n + 1
    a2 = build_root_datum("A2")
    assert dimension(weyl_character(a2, Weight((1, 0)))) == 3
    assert dimension(weyl_character(a2, Weight((1, 1)))) == 8
    g2 = build_root_datum("G2")
    dims = sorted(dimension(weyl_character(g2, Weight(w)))
                  for w in ((1, 0), (0, 1)))
    assert dims == [7, 14]
    b2 = build_root_datum("B2")
    dims = sorted(dimension(weyl_character(b2, Weight(w)))
                  for w in ((1, 0), (0, 1)))
    assert dims == [4, 5]


def test_character_string_forms():
    a1 = build_root_datum("A1")
    assert str(weyl_character(a1, Weight((1,)))) == "e^{-1} + e^{1}"
    assert str(trivial_character(2)) == "e^{(0,0)}"
    a2 = build_root_datum("A2")
    adj = weyl_character(a2, Weight((1, 1)))
    assert str(adj) == ("e^{(-2,1)} + e^{(-1,-1)} + e^{(-1,2)} + "
                        "2*e^{(0,0)} + e^{(1,-2)} + e^{(1,1)} + e^{(2,-1)}")


def test_character_arithmetic():
    a1 = build_root_datum("A1")
    chi1 = weyl_character(a1, Weight((1,)))
    chi2 = weyl_character(a1, Weight((2,)))
    triv = trivial_character(1)
    assert chi1 * chi1 == chi2 + triv  # Clebsch-Gordan
    assert chi1 + chi1 == 2 * chi1
    assert chi1 - chi1 == Character.from_dict({})
    assert dimension(chi1 * chi2) == 6
    with pytest.raises(ValueError):
        chi1 + trivial_character(2)


def test_character_accessors():
    ch = Character.from_dict({Weight((2,)): 1, Weight((-2,)): 1,
                              Weight((0,)): 3})
    assert ch.coefficient(Weight((0,))) == 3
    assert ch.coefficient(Weight((5,))) == 0
    assert ch.rank == 1
    assert ch.as_dict() == {Weight((-2,)): 1, Weight((0,)): 3,
                            Weight((2,)): 1}
    assert ch.to_json_list() == [
        {"weight": [-2], "mult": 1},
        {"weight": [0], "mult": 3},
        {"weight": [2], "mult": 1},
    ]


def test_weyl_character_requires_dominant_sc():
    a1 = build_root_datum("A1")
    with pytest.raises(ValueError):
        weyl_character(a1, Weight((-1,)))
    with pytest.raises(ValueError):
        weyl_character(build_root_datum("A2", "adjoint"), Weight((1, 1)))


def test_weyl_character_zero_weight_is_trivial():
    for series in ("A1", "A2", "B2"):
        datum = build_root_datum(series)
        assert weyl_character(datum, Weight((0,) * datum.rank)) == (
            trivial_character(datum.rank))


def test_weyl_invariance():
    a2 = build_root_datum("A2")
    adj = weyl_character(a2, Weight((1, 1)))
    assert is_weyl_invariant(a2, adj)
    assert is_weyl_invariant(a2, trivial_character(2))
    lopsided = Character.from_dict({Weight((1, 1)): 1})
    assert not is_weyl_invariant(a2, lopsided)


def test_symmetry_under_longest_element():
    # -1 lies in the Weyl group of B2, so characters are even
    b2 = build_root_datum("B2")
    ch = weyl_character(b2, Weight((1, 2)))
    for w, c in ch.as_dict().items():
        assert ch.coefficient(Weight(tuple(-x for x in w.coords))) == c


def test_frobenius_twist():
    a1 = build_root_datum("A1")
    chi1 = weyl_character(a1, Weight((1,)))
    assert str(frobenius_twist(chi1, 5)) == "e^{-5} + e^{5}"
    assert frobenius_twist(chi1, 1) == chi1
    assert dimension(frobenius_twist(chi1, 7)) == 2
    with pytest.raises(ValueError):
        frobenius_twist(chi1, 0)


def test_steinberg_digits():
    assert [w.coords for w in steinberg_digits(Weight((28,)), 5)] == [
        (3,), (0,), (1,)]
    assert [w.coords for w in steinberg_digits(Weight((7, 12)), 5)] == [
        (2, 2), (1, 2)]
    assert [w.coords for w in steinberg_digits(Weight((3,)), 5)] == [(3,)]
    assert [w.coords for w in steinberg_digits(Weight((0, 0)), 5)] == [(0, 0)]
    with pytest.raises(ValueError):
        steinberg_digits(Weight((-1,)), 5)
    with pytest.raises(ValueError):
        steinberg_digits(Weight((3,)), 1)


def test_sl2_simple_characters():
    # restricted weights: simple = Weyl character
    a1 = build_root_datum("A1")
    for n in range(5):
        assert sl2_simple_character(n, 5) == weyl_character(a1, Weight((n,)))
    # the digit product every time
    assert str(sl2_simple_character(8, 5)) == (
        "e^{-8} + e^{-6} + e^{-4} + e^{-2} + e^{2} + e^{4} + e^{6} + e^{8}")
    assert dimension(sl2_simple_character(8, 5)) == 8
    assert dimension(sl2_simple_character(18, 5)) == 16
    assert dimension(sl2_simple_character(28, 5)) == 8
    # a twisted Steinberg block: n = p - 1 + p*(p - 1) keeps dim p^2
    assert dimension(sl2_simple_character(4 + 5 * 4, 5)) == 25
    with pytest.raises(ValueError):
        sl2_simple_character(3, 4)  # p must be prime
    with pytest.raises(ValueError):
        sl2_simple_character(-1, 5)


def test_expand_in_standard_basis():
    a1 = build_root_datum("A1")
    got = expand_in_standard_basis(a1, sl2_simple_character(8, 5))
    assert {w.coords[0]: c for w, c in got.items()} == {8: 1, 0: -1}
    got = expand_in_standard_basis(a1, sl2_simple_character(18, 5))
    assert {w.coords[0]: c for w, c in got.items()} == {
        18: 1, 10: -1, 8: 1, 0: -1}
    # round trip
    ch = sl2_simple_character(18, 5)
    rebuilt = Character.from_dict({})
    for w, c in expand_in_standard_basis(a1, ch).items():
        rebuilt = rebuilt + c * weyl_character(a1, w)
    assert rebuilt == ch
    with pytest.raises(ValueError):
        expand_in_standard_basis(a1, Character.from_dict({Weight((2,)): 1}))


def test_expand_round_trip_rank_two():
    b2 = build_root_datum("B2")
    ch = (weyl_character(b2, Weight((1, 1))) +
          2 * weyl_character(b2, Weight((0, 1))))
    got = expand_in_standard_basis(b2, ch)
    assert {w.coords: c for w, c in got.items()} == {(1, 1): 1, (0, 1): 2}


def test_tensor_matches_star():
    a1 = build_root_datum("A1")
    chi3 = weyl_character(a1, Weight((3,)))
    chi2 = weyl_character(a1, Weight((2,)))
    assert tensor(chi3, chi2) == chi3 * chi2
    expanded = expand_in_standard_basis(a1, tensor(chi3, chi2))
    assert {w.coords[0]: c for w, c in expanded.items()} == {
        5: 1, 3: 1, 1: 1}


def test_resource_limits():
    a1 = build_root_datum("A1")
    with pytest.raises(ResourceLimitError):
        weyl_character(a1, Weight((100,)), max_terms=10)
    big = weyl_character(a1, Weight((40,)))
    with pytest.raises(ResourceLimitError):
        tensor(big, big, max_terms=20)
    with pytest.raises(ResourceLimitError):
        sl2_simple_character(24, 5, max_terms=3)
