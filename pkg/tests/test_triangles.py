import pytest
from hypothesis import given
from hypothesis import strategies as st

from arbors.algebra import BiPoly
from arbors.arbor import enumerate_arbors, parse_arbor
from arbors.invariants import m_triangle
from arbors.poset import build_poset
from arbors.triangles import (
    X,
    Y,
    diagonal,
    dual,
    f_from_m,
    from_display,
    h_from_m,
    m_from_f,
    m_from_h,
    rational_subs,
    to_display,
    transmute,
)

upper = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda k: k[0] <= k[1]),
    st.integers(-20, 20),
    max_size=8,
).map(BiPoly)

ARBORS = [t for n in range(1, 6) for t in enumerate_arbors(n)]


@given(upper)
def test_transmutation_is_an_involution(m):
    assert transmute(transmute(m)) == m


@given(upper)
def test_fast_path_matches_substitution(m):
    general = rational_subs(m, (1 - Y, 1 - X * Y), (1 - X * Y, BiPoly.const(1)))
    assert transmute(m) == general


def test_transmute_single_monomials():
    assert transmute(BiPoly.monomial(0, 1)) == 1 - X * Y
    assert transmute(BiPoly.monomial(1, 1)) == 1 - Y
    # X/1 has X-degree above Y-degree: its image is not a polynomial
    with pytest.raises(ArithmeticError):
        transmute(X)


@pytest.mark.parametrize("t", ARBORS, ids=str)
def test_conversions_roundtrip(t):
    n = t.size
    m = m_triangle(t)
    assert m_from_f(f_from_m(m, n), n) == m
    assert m_from_h(h_from_m(m, n), n) == m
    assert dual(dual(m, n), n) == m


def test_f_triangle_of_chain_poset():
    # 2-element chain 0 < 1
    m = BiPoly({(0, 0): 1, (0, 1): -1, (1, 1): 1})
    assert m == m_triangle(parse_arbor("(1)"))
    assert f_from_m(m, 1) == 1 + X + Y


def test_display_roundtrip_and_orientation():
    m = m_triangle(parse_arbor("(1 (1 (1)))"))
    rows = to_display(m, 3)
    assert rows == [[-1, 6, -10, 5], [3, -8, 5], [-3, 3], [1]]
    assert from_display(rows) == m


def test_diagonal_is_rank_polynomial():
    t = parse_arbor("(2 (2) (1) (1))")
    assert list(diagonal(m_triangle(t)).coeffs) == build_poset(t).rank_sizes()


def test_dual_rejects_oversized_monomial():
    with pytest.raises(ArithmeticError):
        dual(BiPoly.monomial(0, 5), 3)
