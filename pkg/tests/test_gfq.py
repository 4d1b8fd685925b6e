import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylp import FieldSpec
from weylp.gfq import default_modulus, is_irreducible

FIELDS = [FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(13),
          FieldSpec(2, 2, (1, 1, 1)), FieldSpec(3, 2), FieldSpec(5, 2),
          FieldSpec(2, 4), FieldSpec(7, 2)]

field_st = st.sampled_from(FIELDS)


class TestConstruction:
    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            FieldSpec(4)
        with pytest.raises(ValueError):
            FieldSpec(17)

    def test_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            FieldSpec(2, 0)
        with pytest.raises(ValueError):
            FieldSpec(2, 5)

    def test_rejects_reducible_modulus(self):
        # g^2 + 1 = (g+1)^2 over F_2
        with pytest.raises(ValueError):
            FieldSpec(2, 2, (1, 0, 1))

    def test_rejects_non_monic(self):
        with pytest.raises(ValueError):
            FieldSpec(3, 2, (1, 0, 2))

    def test_default_modulus_is_irreducible(self):
        for p in (2, 3, 5, 7, 11, 13):
            for n in (2, 3, 4):
                mod = default_modulus(p, n)
                assert mod[-1] == 1 and len(mod) == n + 1
                assert is_irreducible(mod, p)

    def test_degree_four_modulus_check_catches_quadratic_square(self):
        # (g^2+g+1)^2 = g^4+g^2+1 over F_2 has no roots but is reducible
        assert not is_irreducible((1, 0, 1, 0, 1), 2)
        # x^4 + x + 1 is irreducible over F_2
        assert is_irreducible((1, 1, 0, 0, 1), 2)

    def test_spec_equality_and_str(self):
        a = FieldSpec(2, 2, (1, 1, 1))
        b = FieldSpec(2, 2, (1, 1, 1))
        assert a == b and hash(a) == hash(b)
        assert str(a) == "p=2,n=2,mod=g^2+g+1"
        assert str(FieldSpec(5)) == "p=5"


class TestArithmetic:
    def test_char_two(self, f2):
        assert f2.one() + f2.one() == f2.zero()

    def test_f4_generator_square(self, f4):
        g = f4.gen()
        assert g * g == g + f4.one()

    def test_inv_in_f3(self, f3):
        assert f3.from_int(2).inv() == f3.from_int(2)

    def test_division_by_zero(self, f3):
        with pytest.raises(ZeroDivisionError):
            f3.zero().inv()
        with pytest.raises(ZeroDivisionError):
            f3.one() / f3.zero()

    def test_spec_mismatch_is_hard_error(self, f2, f3):
        with pytest.raises(ValueError):
            f2.one() + f3.one()
        with pytest.raises(ValueError):
            f2.one() * f3.one()

    def test_equal_specs_interoperate(self):
        a = FieldSpec(3, 2)
        b = FieldSpec(3, 2)
        assert a is not b
        assert a.gen() + b.gen() == a.gen() * 2

    @given(field=field_st, data=st.data())
    @settings(max_examples=150, deadline=None)
    def test_field_axioms(self, field, data):
        vals = st.integers(min_value=0, max_value=field.q - 1)
        a = field._elts[data.draw(vals)]
        b = field._elts[data.draw(vals)]
        c = field._elts[data.draw(vals)]
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert a + field.zero() == a and a * field.one() == a
        assert a + (-a) == field.zero()
        if not b.is_zero():
            assert b * b.inv() == field.one()

    @given(field=field_st, data=st.data())
    @settings(max_examples=150, deadline=None)
    def test_frobenius_is_field_homomorphism(self, field, data):
        vals = st.integers(min_value=0, max_value=field.q - 1)
        a = field._elts[data.draw(vals)]
        b = field._elts[data.draw(vals)]
        assert a.frobenius() == a ** field.p
        assert (a + b).frobenius() == a.frobenius() + b.frobenius()
        assert (a * b).frobenius() == a.frobenius() * b.frobenius()

    @given(field=field_st, data=st.data())
    @settings(max_examples=150, deadline=None)
    def test_inv_frobenius_inverts_frobenius(self, field, data):
        a = field._elts[data.draw(
            st.integers(min_value=0, max_value=field.q - 1))]
        assert a.frobenius().inv_frobenius() == a
        assert a.inv_frobenius().frobenius() == a


class TestFrobeniusExamples:
    def test_prime_field_fixed(self, f3):
        assert f3.from_int(2).frobenius() == f3.from_int(2)

    def test_f4_gen(self, f4):
        g = f4.gen()
        assert g.frobenius() == g * g
        assert (g * g).inv_frobenius() == g

    def test_one_fixed(self, f2):
        assert f2.one().frobenius() == f2.one()

    def test_zero_root(self, f4):
        assert f4.zero().inv_frobenius() == f4.zero()

    def test_prime_field_root_identity(self, f5):
        for a in f5.elements():
            assert a.inv_frobenius() == a


class TestPrinting:
    def test_prime_field_bare_integers(self, f5):
        assert str(f5.from_int(3)) == "3"
        assert str(f5.zero()) == "0"

    def test_extension_ascending(self, f4):
        g = f4.gen()
        assert str(g + f4.one()) == "1+g"
        assert str(g) == "g"
        assert str(f4.zero()) == "0"

    def test_bigger_extension(self):
        f8 = FieldSpec(2, 3)
        g = f8.gen()
        assert str(g ** 2 + f8.one()) == "1+g^2"

    def test_coefficient_display(self):
        f9 = FieldSpec(3, 2)
        g = f9.gen()
        assert str(g * 2 + f9.one()) == "1+2*g"


def test_interning_and_no_tables_path():
    big = FieldSpec(13, 3)  # q = 2197 > table limit
    assert big._mul is None
    rng = random.Random(7)
    for _ in range(50):
        a, b = big.random_element(rng), big.random_element(rng)
        assert (a * b) is (b * a)  # interned results
        assert (a + b) - b == a
        if not a.is_zero():
            assert a * a.inv() == big.one()
        assert a.frobenius().inv_frobenius() == a
