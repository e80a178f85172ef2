import unittest
from fractions import Fraction

from milnor.errors import DegenerateForm, DimensionMismatch, NormalizationMismatch, NotAdmissible
from milnor.forms import (
    AdmissibleForm, GramReport, default_form, defining_poly_S, exp2, exp_map, form_from_covector, gram_b_pi,
    grading_form, graph_map, hypersurface_function, log_map, translation_between, translation_covector
)
from milnor.algebra import algebra_from_table, as_nilpotent
from test.helpers import TestCase, vector

EXP_LOG_POINTS = 100


class TestAdmissibleForm(TestCase):
    def test_grading_form(self):
        N = self.gorenstein()
        form = default_form(N)
        self.assertEqual(form.omega, vector(0, 0, 0, 1))
        self.assertEqual(form.annihilator, N.basis_vector(3))
        self.assertEqual(form.kernel, [N.basis_vector(0), N.basis_vector(1), N.basis_vector(2)])
        self.assertEqual(form.scale, 1)
        self.assertEqual(grading_form(N).omega, form.omega)

    def test_default_form_without_grading(self):
        N = as_nilpotent(algebra_from_table(2, ['e', 'f'], {(0, 0): {1: 1}}))
        form = default_form(N)
        self.assertEqual(form.omega, vector(0, 1))
        self.assertEqual(form.kernel, [N.basis_vector(0)])

    def test_tilted_kernel(self):
        N = self.gorenstein()
        tilted = default_form(N, N.basis_vector(3), [vector(1, 0, 0, 1), N.basis_vector(1), N.basis_vector(2)])
        self.assertEqual(tilted.omega, vector(-1, 0, 0, 1))

    def test_form_from_covector(self):
        N = self.cube()
        form = form_from_covector(N, vector(0, 0, 3), N.basis_vector(2))
        self.assertEqual(form.scale, 3)
        self.assertEqual(form.normalized().scale, 1)
        self.assertEqual(len(form.kernel), 2)

    def test_degenerate_forms(self):
        N = self.gorenstein()
        with self.assertRaises(DegenerateForm):
            form_from_covector(N, vector(1, 0, 0, 0))
        with self.assertRaises(DegenerateForm):
            default_form(N, N.basis_vector(3), [N.basis_vector(0), N.basis_vector(0), N.basis_vector(2)])
        with self.assertRaises(DegenerateForm):
            AdmissibleForm(N, vector(0, 0, 0, 1), N.basis_vector(0), [])
        with self.assertRaises(DimensionMismatch):
            AdmissibleForm(N, vector(0, 1), N.basis_vector(3), [])

    def test_not_admissible(self):
        N = as_nilpotent(algebra_from_table(2, ['a', 'b'], {}))
        with self.assertRaises(NotAdmissible):
            default_form(N)


class TestSeries(TestCase):
    def test_exp_log_are_inverse(self):
        for N in (self.cube(), self.gorenstein(), self.e8()[2], self.family13()[2]):
            for _ in range(EXP_LOG_POINTS):
                u = [Fraction(self.rng.randint(-4, 4), self.rng.randint(1, 3)) for _ in range(N.dimension)]
                self.assertEqual(log_map(N, exp_map(N, u)), u)
                self.assertEqual(exp_map(N, log_map(N, u)), u)

    def test_exp_on_cube(self):
        N = self.cube()
        self.assertEqual(exp_map(N, vector(1, 0, 0)), vector(1, Fraction(1, 2), Fraction(1, 6)))
        self.assertEqual(exp2(N, vector(1, 0, 0)), vector(0, Fraction(1, 2), Fraction(1, 6)))


class TestGram(TestCase):
    def test_gorenstein_gram(self):
        report = gram_b_pi(default_form(self.gorenstein()))
        self.assertIsInstance(report, GramReport)
        self.assertEqual(report.on_kernel, [vector(0, 1, 0), vector(1, 0, 0), vector(0, 0, 2)])
        self.assertEqual(report.det_kernel, -2)
        self.assertFalse(report.is_degenerate)
        self.assertEqual(report.radical, [])
        self.assertTrue(report.det_unital)

    def test_line_has_empty_kernel(self):
        report = GramReport(default_form(self.table('line')))
        self.assertEqual(report.on_kernel, [])
        self.assertEqual(report.det_kernel, 1)
        self.assertFalse(report.is_degenerate)


class TestHypersurface(TestCase):
    def test_gorenstein(self):
        form = default_form(self.gorenstein())
        self.assertPolynomialEqual(hypersurface_function(form), "u4 + u1*u2 + u3^2")
        self.assertPolynomialEqual(defining_poly_S(form), "2*u4 + 4*u1*u2 + 4*u3^2")

    def test_cube(self):
        form = default_form(self.cube())
        self.assertPolynomialEqual(defining_poly_S(form), "2*u3 + 4*u1*u2 + 4/3*u1^3")

    def test_graph_map(self):
        form = default_form(self.cube())
        self.assertEqual(graph_map(form), [
            vector(0, Fraction(1, 2), 0),
            vector(0, 0, Fraction(1, 2)),
            vector(Fraction(-1, 2), 0, 0)
        ])


class TestTranslation(TestCase):
    def test_tilted_gorenstein(self):
        N = self.gorenstein()
        form = default_form(N)
        tilted = default_form(N, N.basis_vector(3), [vector(1, 0, 0, 1), N.basis_vector(1), N.basis_vector(2)])
        self.assertEqual(translation_covector(form, tilted), vector(0, -1, 0, 0))
        self.assertEqual(translation_between(form, tilted), vector(0, Fraction(1, 2), 0, 0))

    def test_same_form(self):
        form = default_form(self.cube())
        self.assertEqual(translation_between(form, form), vector(0, 0, 0))

    def test_normalization_mismatch(self):
        N = self.gorenstein()
        with self.assertRaises(NormalizationMismatch):
            translation_covector(default_form(N), form_from_covector(N, vector(0, 0, 0, 2)))


if __name__ == '__main__':
    unittest.main()
