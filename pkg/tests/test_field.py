"""Field arithmetic, characters, roots, and traces."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import field_for, odd_prime_powers
from uqgraph import (
    DivisionByZeroError,
    EvenCharacteristicError,
    NonPrimeError,
    TooLargeError,
    is_prime,
    make_field,
    prime_power,
)
from uqgraph.field import _is_irreducible


def test_make_field_orders():
    assert make_field(7, 1).q == 7
    assert make_field(3, 2).q == 9


def test_make_field_rejects_even_characteristic():
    with pytest.raises(EvenCharacteristicError):
        make_field(2, 3)


def test_make_field_rejects_nonprime():
    with pytest.raises(NonPrimeError):
        make_field(9, 1)
    with pytest.raises(NonPrimeError):
        make_field(15)


def test_make_field_rejects_oversized():
    with pytest.raises(TooLargeError):
        make_field(3, 2, max_order=8)


def test_make_field_rejects_nonpositive_degree():
    with pytest.raises(ValueError):
        make_field(7, 0)


def test_modulus_is_smallest_irreducible():
    # degree-2 candidates over F_3 in constant-first order: x^2 is divisible
    # by x, x^2+x and x^2+2x have root 0, so x^2+1 is the first irreducible
    assert make_field(3, 2).modulus == (1, 0, 1)
    f25 = make_field(5, 2)
    assert f25.modulus[-1] == 1
    assert _is_irreducible(list(f25.modulus), 5)


def test_modulus_irreducible_for_higher_degrees():
    for p, n in [(3, 3), (3, 4), (5, 3), (7, 2)]:
        ctx = make_field(p, n)
        assert len(ctx.modulus) == n + 1
        assert ctx.modulus[-1] == 1
        assert _is_irreducible(list(ctx.modulus), p)


def test_prime_field_arithmetic():
    f7 = make_field(7)
    assert f7.mul(3, 5) == 1
    assert f7.inv(3) == 5
    assert f7.add(4, 5) == 2
    assert f7.sub(2, 5) == 4
    with pytest.raises(DivisionByZeroError):
        f7.inv(0)


def test_extension_multiplication_against_polynomial_oracle():
    # oracle: multiply coefficient vectors as polynomials, reduce mod x^2+1
    f9 = make_field(3, 2)
    assert f9.modulus == (1, 0, 1)

    def oracle_mul(a, b):
        a0, a1 = a % 3, a // 3
        b0, b1 = b % 3, b // 3
        c0, c1, c2 = a0 * b0, a0 * b1 + a1 * b0, a1 * b1
        # x^2 = -1
        return (c0 - c2) % 3 + 3 * (c1 % 3)

    for a in range(9):
        for b in range(9):
            assert f9.mul(a, b) == oracle_mul(a, b)
    # the generator squares to -1 = 2
    assert f9.mul(3, 3) == 2


def test_element_coeffs_round_trip():
    f27 = make_field(3, 3)
    for code in range(27):
        assert f27.element(f27.coeffs(code)) == code
    with pytest.raises(ValueError):
        f27.element((1, 2))
    with pytest.raises(ValueError):
        f27.element((3, 0, 0))
    with pytest.raises(ValueError):
        f27.coeffs(27)


def test_quadratic_character_prime_field():
    f7 = make_field(7)
    assert f7.quadratic_character(0) == 0
    assert f7.quadratic_character(1) == 1
    # squares mod 7, enumerated independently: {1, 2, 4}
    squares = {(x * x) % 7 for x in range(1, 7)}
    assert squares == {1, 2, 4}
    for x in range(1, 7):
        assert f7.quadratic_character(x) == (1 if x in squares else -1)


def test_square_roots():
    f7 = make_field(7)
    assert f7.square_roots(2) == {3, 4}
    assert f7.square_roots(0) == {0}
    assert f7.square_roots(5) == set()


def test_abs_trace_examples():
    f9 = make_field(3, 2)
    assert f9.abs_trace(0) == 0
    assert f9.abs_trace(1) == 2
    # the class of x: x + x^3 = x - x = 0 under x^2 = -1
    assert f9.abs_trace(3) == 0
    assert make_field(7).abs_trace(0) == 0


@pytest.mark.parametrize("q", odd_prime_powers(3, 81))
def test_character_sums_to_zero(q):
    ctx = field_for(q)
    assert sum(ctx.quadratic_character(x) for x in range(q)) == 0


@pytest.mark.parametrize("q", odd_prime_powers(3, 49))
def test_character_is_multiplicative(q):
    ctx = field_for(q)
    chi = [ctx.quadratic_character(x) for x in range(q)]
    for x in range(1, q):
        for y in range(1, q):
            assert chi[ctx.mul(x, y)] == chi[x] * chi[y]


@pytest.mark.parametrize("q", odd_prime_powers(3, 81))
def test_nonzero_square_count(q):
    ctx = field_for(q)
    squares = {ctx.mul(x, x) for x in range(1, q)}
    assert len(squares) == (q - 1) // 2


@pytest.mark.parametrize("q", odd_prime_powers(3, 81))
def test_trace_is_linear_and_surjective(q):
    ctx = field_for(q)
    traces = [ctx.abs_trace(x) for x in range(q)]
    assert set(traces) == set(range(ctx.p))
    hits = {t: traces.count(t) for t in range(ctx.p)}
    assert all(count == q // ctx.p for count in hits.values())
    for x in range(q):
        for y in range(0, q, max(1, q // 7)):
            assert traces[ctx.add(x, y)] == (traces[x] + traces[y]) % ctx.p


@settings(max_examples=200, derandomize=True)
@given(data=st.data())
def test_field_axioms(data):
    ctx = field_for(data.draw(st.sampled_from([7, 9, 13, 25, 27])))
    a = data.draw(st.integers(0, ctx.q - 1))
    b = data.draw(st.integers(0, ctx.q - 1))
    c = data.draw(st.integers(0, ctx.q - 1))
    assert ctx.add(a, b) == ctx.add(b, a)
    assert ctx.mul(a, b) == ctx.mul(b, a)
    assert ctx.mul(a, ctx.mul(b, c)) == ctx.mul(ctx.mul(a, b), c)
    assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
    assert ctx.sub(ctx.add(a, b), b) == a
    if a != 0:
        assert ctx.mul(a, ctx.inv(a)) == 1


def test_pow_matches_repeated_multiplication():
    f25 = make_field(5, 2)
    for a in range(25):
        acc = 1
        for e in range(6):
            assert f25.pow(a, e) == acc
            acc = f25.mul(acc, a)


def test_is_prime_and_prime_power():
    assert is_prime(2) and is_prime(31) and not is_prime(1) and not is_prime(49)
    assert prime_power(49) == (7, 2)
    assert prime_power(81) == (3, 4)
    assert prime_power(12) is None
    assert prime_power(1) is None
