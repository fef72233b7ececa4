import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import add_one_box, poly_mul, schur_poly, tableau_expand
from thompos.chernpoly import ChernPolynomial, MixedBasisError, NotHomogeneousError, c, cp, seg
from thompos.partitions import Partition, partitions_of
from thompos.roots import BundleSpec, NotSymmetricError, RootPolynomial
from thompos.schur_basis import (
    SchurExpansion,
    dualize,
    expand_root_polynomial,
    expand_to_schur,
    jacobi_trudi,
    parse_schur,
    schur_multiply,
)


def E(mapping):
    return SchurExpansion(mapping)


def oracle_product(left: dict, right: dict, n: int) -> dict:
    """Multiply at rank n through tableau polynomials and expand back."""
    def poly(exp):
        total = {}
        for shape, k in exp.items():
            for m, v in schur_poly(tuple(reversed(shape)), n).items():
                total[m] = total.get(m, 0) + k * v
        return total

    got = tableau_expand(poly_mul(poly(left), poly(right)), n)
    return {Partition(k): v for k, v in got.items()}


class TestExpandToSchur:
    def test_one_box_squared(self):
        assert expand_to_schur(seg(1) ** 2) == E({(2,): 1, (1, 1): 1})

    def test_a3_record(self):
        p = seg(1) ** 3 + 3 * seg(1) * seg(2) + 2 * seg(3)
        assert expand_to_schur(p) == E({(3,): 6, (1, 2): 5, (1, 1, 1): 1})

    def test_zero(self):
        assert expand_to_schur(seg(2) - seg(2)) == E({})
        assert len(expand_to_schur(ChernPolynomial())) == 0

    def test_errors(self):
        with pytest.raises(NotHomogeneousError):
            expand_to_schur(seg(1) + seg(2))
        with pytest.raises(MixedBasisError):
            expand_to_schur(cp(1) * seg(1))

    def test_chern_classes_read_as_elementary(self):
        # c_2 of a single bundle is the column Schur function
        assert expand_to_schur(c(2)) == E({(1, 1): 1})
        assert expand_to_schur(c(1) ** 2) == E({(2,): 1, (1, 1): 1})

    def test_jacobi_trudi_diagonal(self):
        for w in range(1, 7):
            for p in partitions_of(w):
                det = jacobi_trudi(p)
                assert expand_to_schur(det) == E({p: 1})

    def test_rank_hint_drops_outside_hook(self):
        p = seg(1) ** 3
        full = expand_to_schur(p)
        assert full == E({(3,): 1, (1, 2): 2, (1, 1, 1): 1})
        assert expand_to_schur(p, rank_hint=(1, 0)) == E({(3,): 1})
        assert expand_to_schur(p, rank_hint=(0, 1)) == E({(1, 1, 1): 1})
        assert expand_to_schur(p, rank_hint=(1, 1)) == full
        assert expand_to_schur(p, rank_hint=(2, 0)) == E({(3,): 1, (1, 2): 2})


class TestMultiply:
    def test_two_by_two(self):
        expected = E({(4,): 1, (1, 3): 1, (2, 2): 1})
        assert oracle_product({(2,): 1}, {(2,): 1}, 4) == dict(expected)
        assert schur_multiply(E({(2,): 1}), E({(2,): 1})) == expected

    def test_unit(self):
        a = parse_schur("3*S[1,2] - S[3]")
        assert schur_multiply(E({(): 1}), a) == a

    def test_one_box_times_column(self):
        expected = E({(1, 2): 1, (1, 1, 1): 1})
        assert oracle_product({(1,): 1}, {(1, 1): 1}, 3) == dict(expected)
        assert E({(1,): 1}) * E({(1, 1): 1}) == expected

    def test_against_tableau_oracle(self):
        rng = random.Random(3)
        shapes = [p for w in range(1, 4) for p in partitions_of(w)]
        for _ in range(15):
            a, b = rng.choice(shapes), rng.choice(shapes)
            n = a.weight + b.weight
            got = schur_multiply(E({a: 1}), E({b: 1}))
            assert dict(got) == oracle_product({a: 1}, {b: 1}, n)

    def test_pieri_one_box(self):
        for w in range(0, 6):
            for p in partitions_of(w):
                product = E({(1,): 1}) * E({p: 1})
                grown = {Partition(reversed(s)) for s in add_one_box(p.decreasing)}
                assert product == E({q: 1 for q in grown})


def random_expansion(rng, degree, terms=3):
    shapes = partitions_of(degree)
    return E({rng.choice(shapes): rng.randint(-5, 5) for _ in range(terms)})


class TestProperties:
    def test_uniqueness_roundtrip(self):
        rng = random.Random(11)
        for _ in range(120):
            exp = random_expansion(rng, rng.randint(0, 6), rng.randint(1, 5))
            assert expand_to_schur(exp.to_seg()) == exp

    def test_commutative_associative_positive(self):
        rng = random.Random(5)
        for _ in range(12):
            a, b, c_ = (E({rng.choice(partitions_of(rng.randint(1, 4))): 1}) for _ in range(3))
            ab = a * b
            assert ab == b * a
            assert (ab * c_) == a * (b * c_)
            assert all(v > 0 for v in ab.values())

    def test_conjugation_is_ring_map(self):
        rng = random.Random(9)
        for _ in range(15):
            a = random_expansion(rng, rng.randint(1, 4))
            b = random_expansion(rng, rng.randint(1, 4))
            assert dualize(a * b) == dualize(a) * dualize(b)

    @settings(max_examples=60, deadline=None)
    @given(st.dictionaries(st.sampled_from(partitions_of(5)), st.integers(-20, 20), max_size=6))
    def test_roundtrip_hypothesis(self, coeffs):
        exp = E(coeffs)
        assert expand_to_schur(exp.to_seg()) == exp


class TestExpandRootPolynomial:
    al = ("a1", "a2")
    a1 = RootPolynomial.symbol(al, "a1")
    a2 = RootPolynomial.symbol(al, "a2")
    bundle = BundleSpec(al)

    def test_elementary(self):
        assert expand_root_polynomial(self.a1 * self.a2, self.bundle) == E({(1, 1): 1})

    def test_complete_homogeneous(self):
        q = self.a1 ** 2 + self.a1 * self.a2 + self.a2 ** 2
        assert expand_root_polynomial(q, self.bundle) == E({(2,): 1})

    def test_square_of_sum(self):
        assert expand_root_polynomial((self.a1 + self.a2) ** 2, self.bundle) == E({(2,): 1, (1, 1): 1})

    def test_long_partitions_absent(self):
        one = BundleSpec(("a1",))
        x = RootPolynomial.symbol(("a1",), "a1")
        assert expand_root_polynomial(x ** 3, one) == E({(3,): 1})

    def test_non_symmetric(self):
        with pytest.raises(NotSymmetricError) as info:
            expand_root_polynomial(self.a1 ** 2, self.bundle)
        assert info.value.transposition == ("a1", "a2")

    def test_matches_tableau_oracle(self):
        rng = random.Random(1)
        for n in (2, 3):
            bundle = BundleSpec.of_rank(n)
            for _ in range(10):
                exp = random_expansion(rng, rng.randint(1, 4))
                poly = {}
                for k, v in exp.items():
                    for m, w in schur_poly(k.decreasing, n).items():
                        poly[m] = poly.get(m, 0) + v * w
                root = RootPolynomial(bundle.roots, poly)
                want = exp.restrict(lambda k: k.length <= n)
                assert expand_root_polynomial(root, bundle) == want


class TestExpansionType:
    def test_printing(self):
        exp = parse_schur("S[1,1] + 2*S[2] - 3*S[1,1]")
        assert str(exp) == "2*S[2] - 2*S[1,1]"
        assert str(E({})) == "0"
        assert str(E({(): 4})) == "4"

    def test_homogeneity_enforced(self):
        with pytest.raises(NotHomogeneousError):
            E({(1,): 1, (2,): 1})
        with pytest.raises(NotHomogeneousError):
            parse_schur("S[1] + S[2]")

    def test_products_in_parser(self):
        assert parse_schur("S[1]^2 + S[1,1]") == E({(2,): 1, (1, 1): 2})
        assert parse_schur("2") == E({(): 2})

    def test_degree(self):
        assert parse_schur("S[3] + S[1,2]").degree == 3
        assert E({}).degree is None
