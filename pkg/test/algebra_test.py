import itertools
import unittest
from fractions import Fraction

from milnor import linalg
from milnor.algebra import (
    FiniteAlgebra, algebra_from_table, as_nilpotent, grading_from_weights, hilbert_chain, is_admissible,
    maximal_ideal, milnor_algebra, quotient_algebra, tjurina_algebra
)
from milnor.errors import (
    DimensionMismatch, GradingViolated, NonIsolatedSingularity, NotAdmissible, NotAssociative, NotCommutative,
    NotLocal, NotNilpotent, ParseException, PropertyFailure, QuotientNotLocal, SmoothPoint
)
from milnor.exactpoly import parse
from test.helpers import TestCase, vector


class TestTables(TestCase):
    def test_gorenstein(self):
        N = self.gorenstein()
        self.assertEqual(N.dimension, 4)
        self.assertEqual(N.nil_index, 2)
        self.assertEqual(hilbert_chain(N), [4, 1])
        self.assertTrue(is_admissible(N))
        self.assertTrue(linalg.same_span(N.annihilator, [N.basis_vector(3)]))

    def test_cube(self):
        N = self.cube()
        self.assertEqual(N.hilbert_chain, [3, 2, 1])
        self.assertEqual(N.nil_index, 3)
        self.assertTrue(N.check_power_closure())
        self.assertEqual(N.grading.top_degree, 3)

    def test_glued(self):
        N = self.glued()
        self.assertEqual(N.hilbert_chain, [3, 1])
        self.assertEqual(N.dim_ann, 1)

    def test_not_admissible(self):
        N = as_nilpotent(algebra_from_table(2, ['a', 'b'], {}))
        self.assertEqual(N.dim_ann, 2)
        self.assertFalse(is_admissible(N))
        with self.assertRaises(NotAdmissible) as cm:
            N.annihilator_generator()
        self.assertIn('dim Ann = 2', str(cm.exception))

    def test_not_commutative(self):
        with self.assertRaises(NotCommutative) as cm:
            algebra_from_table(3, ['a', 'b', 'c'], {(0, 1): {2: 1}, (1, 0): {2: 2}})
        self.assertEqual(cm.exception.witness, (0, 1, 2))

    def test_not_associative(self):
        with self.assertRaises(NotAssociative):
            algebra_from_table(2, ['a', 'b'], {(0, 0): {1: 1}, (1, 1): {1: 1}})

    def test_not_nilpotent(self):
        with self.assertRaises(NotNilpotent):
            as_nilpotent(algebra_from_table(1, ['e'], {(0, 0): {0: 1}}))

    def test_not_local(self):
        A = algebra_from_table(2, ['1', 'e'], {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 1): {1: 1}}, unital = True)
        with self.assertRaises(NotLocal):
            maximal_ideal(A)

    def test_label_count(self):
        with self.assertRaises(DimensionMismatch):
            algebra_from_table(3, ['a', 'b'], {})

    def test_grading_violated(self):
        fixture_products = {(0, 0): {1: 1}, (0, 1): {2: 1}}
        with self.assertRaises(GradingViolated):
            as_nilpotent(algebra_from_table(3, ['e', 'e^2', 'e^3'], fixture_products, grading = [1, 2, 4]))

    def test_multiply_and_powers(self):
        N = self.cube()
        e = N.basis_vector(0)
        self.assertEqual(N.power(e, 3), N.basis_vector(2))
        self.assertEqual(N.multiply(vector(1, 1, 0), vector(1, 1, 0)), vector(0, 1, 2))
        self.assertEqual(N.left_operator(e), [vector(0, 0, 0), vector(1, 0, 0), vector(0, 1, 0)])

    def test_change_basis(self):
        N = self.cube()
        # e -> e, e^2 -> e^2 + e^3, e^3 -> e^3
        M = [vector(1, 0, 0), vector(0, 1, 0), vector(0, 1, 1)]
        tilted = N.change_basis(M, ['e', 'f', 'e^3'])
        self.assertEqual(tilted.product(0, 0), vector(0, 1, -1))
        self.assertEqual(tilted.hilbert_chain, [3, 2, 1])

    def test_json(self):
        N = self.gorenstein()
        body = N.to_json()
        self.assertEqual(body['dim'], 4)
        self.assertEqual(body['grading'], [1, 1, 1, 2])
        self.assertEqual(body['table'][0], {'i': 0, 'j': 1, 'products': [{'k': 3, 'coeff': '1'}]})
        again = as_nilpotent(FiniteAlgebra.from_json(body))
        self.assertEqual(again.products(), N.products())
        with self.assertRaises(ParseException):
            FiniteAlgebra.from_json({'table': []})


class TestQuotients(TestCase):
    def test_e8_milnor_algebra(self):
        A = milnor_algebra(self.fixture_polynomial('e8'))
        self.assertTrue(A.unital)
        self.assertEqual(A.dimension, 10)
        self.assertEqual(A.labels[0], '1')
        N = maximal_ideal(A)
        self.assertEqual(N.dimension, 9)
        self.assertEqual(N.hilbert_chain, [9, 7, 5, 3, 2, 1])
        self.assertEqual(N.nil_index, 6)
        self.assertTrue(is_admissible(N))

    def test_e8_tjurina_equals_milnor(self):
        f = self.fixture_polynomial('e8', Fraction(1, 2))
        self.assertEqual(tjurina_algebra(f).dimension, milnor_algebra(f).dimension)

    def test_e8_listed_basis(self):
        f, A, N = self.e8()
        self.assertEqual(N.labels[0], 'z1^4*z2')
        self.assertTrue(linalg.same_span(N.annihilator, [N.basis_vector(0)]))
        self.assertEqual(N.grading.degrees, [6, 1, 2, 2, 3, 3, 4, 4, 5])
        self.assertEqual(N.grading.top_degree, 6)

    def test_family13(self):
        f, A, N = self.family13()
        self.assertEqual(A.dimension, 15)
        self.assertEqual(N.dimension, 14)
        self.assertTrue(N.is_admissible)
        self.assertTrue(linalg.same_span(N.annihilator, [N.basis_vector(0)]))

    def test_coordinates(self):
        f, A, N = self.e8()
        self.assertEqual(N.coordinates(parse("z1", f.variables)), N.basis_vector(1))
        self.assertEqual(N.coordinates(parse("z1^7", f.variables)), N.zero())
        self.assertEqual(A.coordinates(f), A.zero())

    def test_nongraded_ideal(self):
        N = maximal_ideal(quotient_algebra(self.nongraded_ideal()))
        self.assertTrue(is_admissible(N))
        self.assertEqual(N.dim_ann, 1)

    def test_nongraded_ideal_rejects_every_weight_grading(self):
        N = maximal_ideal(quotient_algebra(self.nongraded_ideal()))
        for weights in itertools.product(range(1, 7), repeat = 2):
            with self.assertRaises(PropertyFailure) as cm:
                grading_from_weights(N, weights)
            self.assertIn('grading violated', str(cm.exception))

    def test_non_quasi_homogeneous_needs_local(self):
        f = self.fixture_polynomial('non-qh')
        with self.assertRaises(QuotientNotLocal):
            milnor_algebra(f)
        self.assertEqual(milnor_algebra(f, local = True).dimension, 16)
        T = tjurina_algebra(f, local = True)
        self.assertEqual(T.dimension, 15)
        self.assertGreaterEqual(maximal_ideal(T).dim_ann, 2)

    def test_smooth_point(self):
        with self.assertRaises(SmoothPoint) as cm:
            milnor_algebra(parse("z1 + z2^2", ('z1', 'z2')))
        self.assertEqual(cm.exception.variable, 'z1')

    def test_non_isolated(self):
        with self.assertRaises(NonIsolatedSingularity):
            milnor_algebra(parse("z1^2", ('z1', 'z2')))

    def test_local_truncation_cap(self):
        with self.assertRaises(NonIsolatedSingularity):
            milnor_algebra(self.fixture_polynomial('non-qh'), local = True, max_local_power = 3)

    def test_grading_from_weights(self):
        A = milnor_algebra(self.fixture_polynomial('a2'))
        N = maximal_ideal(A)
        graded = grading_from_weights(N, (2, 3))
        self.assertEqual(graded.grading.degrees, [2])
        self.assertEqual(graded.grading_degrees, [2])
        self.assertEqual(graded.products(), N.products())
        self.assertIsNone(N.grading)
        self.assertIsNone(N.grading_degrees)


if __name__ == '__main__':
    unittest.main()
