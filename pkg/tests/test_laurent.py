"""Exact Laurent arithmetic, the ring boundary and rendering."""

from __future__ import annotations

import random

import pytest

from greenseq.laurent import (
    LaurentPoly,
    NonExactDivision,
    laurent_add,
    laurent_div_exact,
    laurent_mul,
)


def x(i, n=2):
    return LaurentPoly.variable(n, i)


class TestRingOps:
    def test_product_of_conjugates(self):
        p = laurent_mul(laurent_add(x(1), x(2)), x(1) - x(2))
        assert p == x(1) ** 2 - x(2) ** 2

    def test_zero_coefficients_never_stored(self):
        p = (x(1) + x(2)) - x(2)
        assert p == x(1)
        assert len(p) == 1

    def test_add_mul_commute_with_random_values(self):
        rng = random.Random(9)

        def rand_poly(n=2):
            terms = {}
            for _ in range(rng.randint(0, 5)):
                exps = tuple(rng.randint(-3, 3) for _ in range(n)) + tuple(
                    rng.randint(0, 3) for _ in range(n)
                )
                terms[exps] = rng.randint(-4, 4)
            return LaurentPoly(n, terms)

        for _ in range(50):
            p, q, r = rand_poly(), rand_poly(), rand_poly()
            assert p + q == q + p
            assert p * q == q * p
            assert p * (q + r) == p * q + p * r

    def test_pow(self):
        p = x(1) + x(2)
        assert p ** 3 == p * p * p
        assert p ** 0 == LaurentPoly.const(2, 1)

    def test_frozen_exponent_invariant_enforced(self):
        with pytest.raises(ValueError, match="frozen"):
            LaurentPoly(2, {(0, 0, -1, 0): 1})


class TestDivExact:
    def test_monomial_divisor(self):
        got = laurent_div_exact(x(2) + x(3), x(1))
        want = LaurentPoly(2, {(-1, 1, 0, 0): 1, (-1, 0, 1, 0): 1})
        assert got == want

    def test_frozen_divisor_leaves_ring(self):
        with pytest.raises(NonExactDivision) as exc:
            laurent_div_exact(x(1) + x(2), x(3))
        assert exc.value.remainder is not None

    def test_inexact_polynomial(self):
        with pytest.raises(NonExactDivision):
            laurent_div_exact(x(1) ** 2 + x(2), x(1) + x(2))

    def test_inexact_coefficient(self):
        p = LaurentPoly.const(2, 3)
        q = LaurentPoly.const(2, 2)
        with pytest.raises(NonExactDivision):
            laurent_div_exact(p, q)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            laurent_div_exact(x(1), LaurentPoly.zero(2))

    def test_roundtrip_random_products(self):
        rng = random.Random(21)

        def rand_poly(n):
            terms = {}
            for _ in range(rng.randint(1, 4)):
                exps = tuple(rng.randint(-2, 2) for _ in range(n)) + tuple(
                    rng.randint(0, 2) for _ in range(n)
                )
                terms[exps] = rng.choice([-3, -2, -1, 1, 2, 3])
            return LaurentPoly(n, terms)

        for _ in range(100):
            n = rng.randint(1, 3)
            p, q = rand_poly(n), rand_poly(n)
            if q.is_zero():
                continue
            prod = p * q
            assert laurent_div_exact(prod, q) == p


class TestRendering:
    def test_canonical_text_lex_order(self):
        p = LaurentPoly(2, {(-1, 1, 0, 0): 1, (-1, 0, 1, 0): 1})
        assert p.text() == "x1^-1*x3 + x1^-1*x2"

    def test_signs_and_coefficients(self):
        p = LaurentPoly(1, {(0, 0): -2, (3, 1): 5})
        assert p.text() == "-2 + 5*x1^3*x2"

    def test_zero(self):
        assert LaurentPoly.zero(2).text() == "0"
        assert LaurentPoly.zero(2).fraction_text() == "0"

    def test_fraction_text_matches_handwritten_form(self):
        p = LaurentPoly(2, {(-1, 1, 0, 0): 1, (-1, 0, 1, 0): 1})
        assert p.fraction_text() == "(x2+x3)/x1"

    def test_fraction_text_no_denominator(self):
        assert (x(1) + x(2)).fraction_text() == "x1+x2"

    def test_text_stable_under_reconstruction(self):
        p = LaurentPoly(2, {(-2, 1, 2, 0): 7, (0, 0, 0, 1): -1})
        q = LaurentPoly(2, dict(p.items()))
        assert p.text() == q.text()


class TestHashing:
    def test_equal_polys_hash_equal(self):
        p = x(1) + x(2)
        q = x(2) + x(1)
        assert p == q
        assert hash(p) == hash(q)

    def test_usable_in_sets(self):
        assert len({x(1) + x(2), x(2) + x(1), x(1)}) == 2
