"""Coefficient recursion for the genus-g, l-point series."""

from itertools import product

import pytest
import sympy

from monotone_hurwitz.core.exceptions import BoundExceededError
from monotone_hurwitz.toprec import TopologicalRecursion, reconcile


@pytest.fixture(scope="module")
def engine():
    return TopologicalRecursion()


class TestCoefficients:
    def test_one_point_genus_zero_is_catalan(self, engine):
        assert engine.mg_table(0, 1, 4).row() == [1, 1, 2, 5, 14]

    def test_raised_degree_cap(self):
        row = TopologicalRecursion({"degree": 10}).mg_table(0, 1, 10).row()
        assert row == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]

    @pytest.mark.parametrize("g,e,expected", [
        (0, (0, 0), 1),
        (0, (1, 0), 4),
        (0, (2, 0), 15),
        (0, (1, 1), 18),
        (1, (1,), 1),
        (1, (0,), 0),
    ])
    def test_entries(self, engine, g, e, expected):
        assert engine.coefficient(g, e) == expected

    def test_three_point_table_is_symmetric(self, engine):
        table = engine.mg_table(0, 3, 3)
        assert table.is_symmetric()
        assert table.entry((2, 1, 0)) == table.entry((0, 2, 1))

    def test_entry_arity(self, engine):
        with pytest.raises(ValueError):
            engine.mg_table(0, 2, 2).entry((1,))

    def test_dump_csv(self, engine):
        assert engine.mg_table(0, 1, 2).dump_csv() == "e1,value\n0,1\n1,1\n2,2\n"

    def test_caps(self):
        engine = TopologicalRecursion({"degree": 3})
        with pytest.raises(BoundExceededError):
            engine.mg_table(0, 1, 4)
        with pytest.raises(BoundExceededError):
            engine.mg_table(3, 1, 2)
        with pytest.raises(BoundExceededError):
            engine.mg_table(0, 0, 2)


class TestReconcile:
    @pytest.mark.parametrize("g,points,degree", [(0, 1, 6), (0, 2, 4), (1, 1, 4), (1, 2, 3), (2, 1, 3)])
    def test_matches_recurrence(self, engine, recurrence, g, points, degree):
        report = reconcile(g, points, degree, engine, recurrence)
        assert report.matches
        assert report.checked == (degree + 1) ** points

    @pytest.mark.slow
    def test_genus_one_two_point_to_degree_four(self, engine, recurrence):
        report = reconcile(1, 2, 4, engine, recurrence)
        assert report.matches
        assert report.checked == 25

    def test_closed_forms_are_counted(self, engine, recurrence):
        assert reconcile(0, 1, 5, engine, recurrence).closed_form_checked == 6
        assert reconcile(0, 2, 3, engine, recurrence).closed_form_checked == 16


class TestSymbolicTwoPoint:
    """The two-point genus-zero table against the recursion written as a rational function."""

    def test_recursion_in_closed_form(self, engine):
        n = 6
        x1, x2 = sympy.symbols("x1 x2")
        one = engine.mg_table(0, 1, n)
        two = engine.mg_table(0, 2, n)

        def rational(value):
            return sympy.Rational(value.numerator, value.denominator)

        f1 = sum(rational(one.entry((k,))) * x1**k for k in range(n + 1))
        f2 = f1.subs(x1, x2)
        m2 = sum(rational(two.entry((a, b))) * x1**a * x2**b for a, b in product(range(n + 1), repeat=2))

        divided = sympy.cancel((x1 * f1 - x2 * f2) / (x1 - x2))
        rhs = sympy.Poly(sympy.expand(sympy.diff(divided, x2) + 2 * x1 * f1 * m2), x1, x2)

        for a, b in product(range(n - 1), repeat=2):
            if a + b <= n - 2:
                assert rhs.coeff_monomial(x1**a * x2**b) == rational(two.entry((a, b)))
