import pytest
from hypothesis import given, settings, strategies as st

from symtriple.errors import MalformedInput, PreconditionViolation
from symtriple.gf2n import IRREDUCIBLE, BinaryField, is_irreducible, poly_mulmod


def all_polys_of_degree(n):
    return range(1 << n, 1 << (n + 1))


def oracle_irreducible(f):
    """Irreducible iff no product of two lower-degree polynomials equals it (carry-less products)."""
    n = f.bit_length() - 1

    def clmul(a, b):
        out = 0
        while b:
            if b & 1:
                out ^= a
            a <<= 1
            b >>= 1
        return out
    for a in range(2, 1 << n):
        for b in range(2, 1 << n):
            if (a.bit_length() - 1) + (b.bit_length() - 1) == n and clmul(a, b) == f:
                return False
    return True


@pytest.mark.parametrize("n", range(1, 6))
def test_irreducibility_matches_oracle(n):
    for f in all_polys_of_degree(n):
        assert is_irreducible(f) == oracle_irreducible(f)


@pytest.mark.parametrize("n", sorted(IRREDUCIBLE))
def test_builtin_moduli_are_primitive(n):
    F = BinaryField(n)
    assert F.element_order(2 if n > 1 else 1) == F.size - 1


def test_gf8_multiplication_table_sample():
    F = BinaryField(3)  # x^3 + x + 1
    assert F.mul(0b010, 0b100) == 0b011  # x * x^2 = x^3 = x + 1
    assert F.mul(0b110, 0b110) == 0b010  # (x^2+x)^2 = x^4 + x^2 = x^2 + x + x^2


def test_reducible_modulus_rejected():
    with pytest.raises(MalformedInput):
        BinaryField(2, 0b101)


def test_unknown_degree():
    with pytest.raises(PreconditionViolation):
        BinaryField(9)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        BinaryField(3).inv(0)


def test_element_wrapper():
    F = BinaryField(4)
    a, b = F.element(3), F.element(7)
    assert (a * b / b) == a
    assert (a + a).bits == 0
    assert (a ** 15).bits == 1
    assert a.coefficients() == [1, 1, 0, 0]
    with pytest.raises(MalformedInput):
        F.element(16)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(sorted(IRREDUCIBLE)), st.data())
def test_field_axioms(n, data):
    F = BinaryField(n)
    x, y, z = (data.draw(st.integers(0, F.size - 1)) for _ in range(3))
    assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))
    assert F.mul(x, y ^ z) == F.mul(x, y) ^ F.mul(x, z)
    assert F.mul(x, y) == F.mul(y, x)
    if x:
        assert F.mul(x, F.inv(x)) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_alternative_moduli_give_fields(n):
    for f in all_polys_of_degree(n):
        if is_irreducible(f):
            F = BinaryField(n, f)
            assert all(F.mul(a, F.inv(a)) == 1 for a in range(1, F.size))
            assert poly_mulmod(1, 1, f, n) == 1
