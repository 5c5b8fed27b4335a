"""Finite and affine Weyl group elements, lengths, Bruhat order, orbits.

Oracles used here and frozen below:
  * word lengths from an independent breadth-first search over products
    of generators (no use of the package's length formula);
  * Bruhat order from the subword characterization, scanned over all
    subwords of a fixed reduced word;
  * restricted-weight counts from the lattice-index identity
    |W_affine mod translations| / index = |W| / kappa per p-box.
"""

import itertools

import pytest

from weylkit import (
    bruhat_leq,
    build_root_datum,
    count_p_restricted_in_orbit,
    dominant_orbit,
    dot_p,
    element_to_json,
    embed_finite,
    enumerate_finite_weyl,
    generators,
    identity_element,
    inverse,
    is_min_coset_rep_fW,
    is_p_regular,
    jantzen_condition,
    length,
    longest_finite_element,
    multiply,
    reduced_word,
    rho,
    same_block,
    Weight,
)


def bfs_lengths(datum, max_len):
    """Independent length oracle: graph distance from the identity."""
    gens = generators(datum)
    frontier = {identity_element(datum)}
    seen = {identity_element(datum): 0}
    for dist in range(1, max_len + 1):
        nxt = set()
        for el in frontier:
            for g in gens:
                prod = multiply(el, g)
                if prod not in seen:
                    seen[prod] = dist
                    nxt.add(prod)
        frontier = nxt
    return seen


@pytest.mark.parametrize("series", ["A1", "A2", "B2", "G2"])
def test_affine_length_matches_graph_distance(series):
    datum = build_root_datum(series)
    cap = 6 if series == "A1" else 4
    for el, dist in bfs_lengths(datum, cap).items():
        assert length(el) == dist
        word = reduced_word(el)
        assert len(word) == dist
        rebuilt = identity_element(datum)
        for idx in word:
            rebuilt = multiply(rebuilt, generators(datum)[idx])
        assert rebuilt == el


def test_generators_are_involutions():
    for series in ("A2", "B2", "G2"):
        datum = build_root_datum(series)
        for g in generators(datum):
            assert multiply(g, g) == identity_element(datum)
            assert length(g) == 1
            assert inverse(g) == g


def test_braid_relations_a2():
    # every pair of affine A2 generators satisfies the order-3 braid move
    datum = build_root_datum("A2")
    g0, g1, g2 = generators(datum)

    def prod(*els):
        out = identity_element(datum)
        for e in els:
            out = multiply(out, e)
        return out

    assert prod(g1, g2, g1) == prod(g2, g1, g2)
    assert prod(g0, g1, g0) == prod(g1, g0, g1)
    assert prod(g0, g2, g0) == prod(g2, g0, g2)


def test_finite_group_orders():
    expected = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C2": 8, "G2": 12}
    for series, order in expected.items():
        datum = build_root_datum(series)
        pairs = enumerate_finite_weyl(datum)
        assert len(pairs) == order
        assert len({w for w, _ in pairs}) == order
        for w, ell in pairs:
            assert length(w) == ell
            assert length(embed_finite(w)) == ell
        w0 = longest_finite_element(datum)
        n_pos = len(datum.positive_roots)
        assert length(w0) == n_pos
        assert max(ell for _, ell in pairs) == n_pos


def test_longest_element_negates_dominant_weights_when_minus_one():
    # -1 lies in the Weyl groups of A1, B2, C2, G2 (not A2)
    for series in ("A1", "B2", "C2", "G2"):
        datum = build_root_datum(series)
        w0 = longest_finite_element(datum)
        lam = Weight((2,) * datum.rank)
        assert w0.apply(lam).coords == tuple(-c for c in lam.coords)


def test_mixed_datum_multiplication_rejected():
    a = generators(build_root_datum("A2"))[0]
    b = generators(build_root_datum("B2"))[0]
    with pytest.raises(ValueError):
        multiply(a, b)


def subword_bruhat(word, datum):
    """Subword oracle: y <= x iff some subword of a reduced word for x
    multiplies to y."""
    gens = generators(datum)
    reachable = set()
    for r in range(len(word) + 1):
        for combo in itertools.combinations(range(len(word)), r):
            el = identity_element(datum)
            for pos in combo:
                el = multiply(el, gens[word[pos]])
            reachable.add(el)
    return reachable


@pytest.mark.parametrize("series,cap", [("A1", 6), ("A2", 4)])
def test_bruhat_order_matches_subword_oracle(series, cap):
    datum = build_root_datum(series)
    elements = sorted(bfs_lengths(datum, cap), key=length)
    for x in elements:
        below = subword_bruhat(reduced_word(x), datum)
        for y in elements:
            if length(y) <= length(x):
                assert bruhat_leq(y, x) == (y in below)
            else:
                assert not bruhat_leq(y, x)


def test_dot_action_fixture():
    datum = build_root_datum("A1")
    sf, sa = generators(datum)  # index 0 finite, index rank affine
    zero = Weight((0,))
    assert dot_p(sf, zero, 5).coords == (-2,)
    assert dot_p(sa, zero, 5).coords == (8,)
    assert dot_p(multiply(sa, sf), zero, 5).coords == (10,)
    assert dot_p(multiply(sf, sa), zero, 5).coords == (-10,)


def test_dot_action_is_a_group_action():
    datum = build_root_datum("B2")
    els = sorted(bfs_lengths(datum, 3), key=length)
    lam = Weight((1, 2))
    for x in els[:8]:
        for y in els[:8]:
            assert dot_p(multiply(x, y), lam, 7) == dot_p(
                x, dot_p(y, lam, 7), 7)


def test_dominant_orbit_a1_p5():
    datum = build_root_datum("A1")
    orbit = dominant_orbit(datum, 5, 6)
    assert [w.coords[0] for _, w in orbit] == [0, 8, 10, 18, 20, 28, 30]
    for x, w in orbit:
        assert is_min_coset_rep_fW(x)
        assert dot_p(x, Weight((0,)), 5) == w
    # lengths are 0..6 in order
    assert [length(x) for x, _ in orbit] == list(range(7))


def test_dominant_orbit_a2_p5_properties():
    datum = build_root_datum("A2")
    orbit = dominant_orbit(datum, 5, 4)
    weights = [w for _, w in orbit]
    assert weights[0].coords == (0, 0)
    assert weights[1].coords == (3, 3)
    # all images dominant and pairwise distinct
    assert all(min(w.coords) >= 0 for w in weights)
    assert len({w.coords for w in weights}) == len(weights)
    assert all(is_min_coset_rep_fW(x) for x, _ in orbit)
    # lengths weakly increase along the listing
    lens = [length(x) for x, _ in orbit]
    assert lens == sorted(lens) and lens[-1] == 4


def test_dominant_orbit_requires_p_at_least_h():
    datum = build_root_datum("A2")
    with pytest.raises(ValueError):
        dominant_orbit(datum, 2, 4)
    assert dominant_orbit(datum, 3, 0)  # p = h is allowed


def test_same_block_a1_p5():
    datum = build_root_datum("A1")
    assert same_block(datum, Weight((0,)), Weight((8,)), 5)
    assert not same_block(datum, Weight((0,)), Weight((2,)), 5)
    assert same_block(datum, Weight((3,)), Weight((5,)), 5)


def test_is_p_regular_a1_p5():
    datum = build_root_datum("A1")
    assert not is_p_regular(datum, Weight((4,)), 5)
    assert is_p_regular(datum, Weight((0,)), 5)
    assert not is_p_regular(datum, Weight((9,)), 5)


def test_jantzen_condition_a1_p5():
    datum = build_root_datum("A1")
    orbit = dominant_orbit(datum, 5, 6)
    flags = [jantzen_condition(x, 5) for x, _ in orbit]
    assert flags == [True, True, True, True, True, False, False]
    with pytest.raises(ValueError):
        jantzen_condition(generators(datum)[0], 5)  # dot-image -2 not dominant


def test_restricted_counts_match_index():
    # number of restricted regular dot-orbit points = |W_finite| / kappa
    expected = {"A1": 1, "A2": 2, "B2": 4, "G2": 12}
    for series, count in expected.items():
        datum = build_root_datum(series)
        h = {"A1": 2, "A2": 3, "B2": 4, "G2": 6}[series]
        for p in (h, h + 2):
            assert count_p_restricted_in_orbit(datum, p) == count


def test_element_json():
    datum = build_root_datum("A1")
    sf, sa = generators(datum)
    assert element_to_json(multiply(sa, sf)) == {
        "word": [1, 0], "finite_matrix": [[1]], "translation": [1]}
    assert element_to_json(multiply(sf, sa)) == {
        "word": [0, 1], "finite_matrix": [[1]], "translation": [-1]}


def test_inverse_and_length_symmetry():
    datum = build_root_datum("A2")
    for el in bfs_lengths(datum, 4):
        inv = inverse(el)
        assert multiply(el, inv) == identity_element(datum)
        assert length(inv) == length(el)
