from fractions import Fraction

import pytest

from cscflag import (Basis, InvalidLieType, WeightVector, build_root_system,
                     convert, inner_product, is_positive_root, is_root,
                     parse_lie_type, with_gram_scaled)
from cscflag.errors import DimensionMismatch
from cscflag.rootsys import to_root_coords

F = Fraction


def rs_of(text):
    return build_root_system(parse_lie_type(text))


class TestParsing:
    @pytest.mark.parametrize("text,factors", [
        ("A2", (("A", 2),)),
        ("b3", (("B", 3),)),
        ("A1xA1", (("A", 1), ("A", 1))),
        ("g2 x a1".replace(" ", ""), (("G", 2), ("A", 1))),
    ])
    def test_valid(self, text, factors):
        assert parse_lie_type(text).factors == factors

    @pytest.mark.parametrize("text", [
        "H2", "E5", "E9", "F3", "G3", "D2", "B1", "C1", "A0", "", "A", "2A",
    ])
    def test_invalid(self, text):
        with pytest.raises(InvalidLieType):
            parse_lie_type(text)

    def test_str_roundtrip(self):
        assert str(parse_lie_type("a2xB3")) == "A2xB3"


EXPECTED_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "C3": 9,
    "D4": 12, "G2": 6, "F4": 24, "E6": 36, "A2xA1": 4, "B2xG2": 10,
}


class TestEnumeration:
    @pytest.mark.parametrize("text,count", sorted(EXPECTED_COUNTS.items()))
    def test_positive_root_counts(self, text, count):
        assert len(rs_of(text).positive_roots) == count

    def test_a2_roots(self):
        assert rs_of("A2").positive_roots == ((0, 1), (1, 0), (1, 1))

    def test_b2_roots(self):
        assert rs_of("B2").positive_roots == ((0, 1), (1, 0), (1, 1), (1, 2))

    def test_g2_roots(self):
        expected = {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
        assert set(rs_of("G2").positive_roots) == expected

    def test_product_blocks(self):
        rs = rs_of("A2xA1")
        assert rs.factor_slices == ((0, 2), (2, 3))
        assert set(rs.positive_roots) == {
            (0, 1, 0), (1, 0, 0), (1, 1, 0), (0, 0, 1)}

    @pytest.mark.parametrize("text", ["A3", "B3", "C3", "D4", "G2", "F4"])
    def test_simple_reflections_permute_other_positives(self, text):
        rs = rs_of(text)
        pos = set(rs.positive_roots)
        for i in range(rs.rank):
            alpha_i = tuple(int(j == i) for j in range(rs.rank))
            image = set()
            for beta in pos - {alpha_i}:
                pairing = sum(beta[k] * rs.cartan[k][i] for k in range(rs.rank))
                refl = tuple(c - pairing * int(j == i)
                             for j, c in enumerate(beta))
                image.add(refl)
            assert image == pos - {alpha_i}


class TestBilinearForm:
    @pytest.mark.parametrize("text", ["A2", "B2", "B3", "C3", "D4", "G2", "F4"])
    def test_gram_symmetric(self, text):
        g = rs_of(text).gram
        assert all(g[i][j] == g[j][i] for i in range(len(g)) for j in range(len(g)))

    def test_a2_gram(self):
        assert rs_of("A2").gram == ((F(2), F(-1)), (F(-1), F(2)))

    @pytest.mark.parametrize("text", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
    def test_long_roots_have_squared_length_two(self, text):
        rs = rs_of(text)
        lengths = {inner_product(rs, WeightVector.roots(r), WeightVector.roots(r))
                   for r in rs.positive_roots}
        assert max(lengths) == 2

    def test_g2_length_ratio(self):
        rs = rs_of("G2")
        a1 = WeightVector.roots((1, 0))
        a2 = WeightVector.roots((0, 1))
        assert inner_product(rs, a1, a1) == F(2, 3)
        assert inner_product(rs, a2, a2) == 2

    @pytest.mark.parametrize("text", ["A2", "B3", "C3", "G2", "F4"])
    def test_cartan_consistent_with_gram(self, text):
        rs = rs_of(text)
        for i in range(rs.rank):
            ai = WeightVector.roots(tuple(int(k == i) for k in range(rs.rank)))
            for j in range(rs.rank):
                aj = WeightVector.roots(tuple(int(k == j) for k in range(rs.rank)))
                lhs = 2 * inner_product(rs, ai, aj) / inner_product(rs, aj, aj)
                assert lhs == rs.cartan[i][j]

    @pytest.mark.parametrize("text", ["A2", "A3", "B3", "G2", "F4"])
    def test_fundamental_weight_duality(self, text):
        rs = rs_of(text)
        for j in range(rs.rank):
            wj = WeightVector.weights(tuple(int(k == j) for k in range(rs.rank)))
            for i in range(rs.rank):
                ai = WeightVector.roots(tuple(int(k == i) for k in range(rs.rank)))
                pairing = 2 * inner_product(rs, wj, ai) / inner_product(rs, ai, ai)
                assert pairing == int(i == j)

    def test_a2_weight_products(self):
        rs = rs_of("A2")
        w1 = WeightVector.weights((1, 0))
        w2 = WeightVector.weights((0, 1))
        a1 = WeightVector.roots((1, 0))
        assert inner_product(rs, w1, w2) == F(1, 3)
        assert inner_product(rs, w1, w1) == F(2, 3)
        assert inner_product(rs, w1, a1) == 1


class TestConversions:
    def test_a1(self):
        rs = rs_of("A1")
        alpha = WeightVector.roots((1,))
        assert convert(rs, alpha, Basis.FUNDAMENTAL_WEIGHT).coords == (F(2),)

    def test_a2_sum_of_simples(self):
        rs = rs_of("A2")
        beta = WeightVector.roots((1, 1))
        assert convert(rs, beta, Basis.FUNDAMENTAL_WEIGHT).coords == (F(1), F(1))

    @pytest.mark.parametrize("text", ["A3", "B3", "G2", "A2xA1"])
    def test_roundtrip(self, text):
        rs = rs_of(text)
        v = WeightVector.weights(tuple(F(k + 1, 3) for k in range(rs.rank)))
        back = convert(rs, convert(rs, v, Basis.SIMPLE_ROOT),
                       Basis.FUNDAMENTAL_WEIGHT)
        assert back.coords == v.coords
        w = convert(rs, v, Basis.SIMPLE_ROOT)
        assert to_root_coords(rs, v) == w.coords

    def test_identity_conversion(self):
        rs = rs_of("A2")
        v = WeightVector.roots((1, 2))
        assert convert(rs, v, Basis.SIMPLE_ROOT) is v

    def test_dimension_mismatch(self):
        rs = rs_of("A2")
        with pytest.raises(DimensionMismatch):
            inner_product(rs, WeightVector.roots((1,)), WeightVector.roots((1, 0)))


class TestMembership:
    def test_is_root(self):
        rs = rs_of("A2")
        assert is_root(rs, WeightVector.roots((1, 1)))
        assert is_root(rs, WeightVector.roots((-1, -1)))
        assert not is_root(rs, WeightVector.roots((2, 0)))
        assert not is_root(rs, WeightVector.roots((F(1, 2), F(1, 2))))

    def test_is_positive_root(self):
        rs = rs_of("A2")
        assert is_positive_root(rs, WeightVector.roots((1, 0)))
        assert not is_positive_root(rs, WeightVector.roots((-1, 0)))

    def test_weight_basis_input(self):
        rs = rs_of("A2")
        assert is_root(rs, WeightVector.weights((1, 1)))  # beta = omega1+omega2


class TestGramScaling:
    def test_scaling(self):
        rs = rs_of("A2")
        scaled = with_gram_scaled(rs, F(3, 2))
        v = WeightVector.roots((1, 1))
        assert inner_product(scaled, v, v) == F(3, 2) * inner_product(rs, v, v)
        assert scaled.positive_roots == rs.positive_roots

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            with_gram_scaled(rs_of("A2"), 0)
