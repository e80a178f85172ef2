import unittest
from fractions import Fraction

from milnor import linalg
from milnor.errors import ParseException, DimensionMismatch
from milnor.exactpoly import (
    Polynomial, WeightSystem, find_weights, gradient, is_quasi_homogeneous, parse, parse_bindings, parse_list,
    parse_variables, rational, substitute_linear
)
from test.helpers import TestCase

Z = ('z1', 'z2', 'z3')
X = ('x1', 'x2')


class TestParsing(TestCase):
    def test_parse_with_binding(self):
        f = parse("z1^6+t*z1^4*z2+z2^3+z3^2", Z, {'t': Fraction(1, 2)})
        self.assertEqual(f.coefficient((6, 0, 0)), 1)
        self.assertEqual(f.coefficient((4, 1, 0)), Fraction(1, 2))
        self.assertEqual(len(f), 4)

    def test_zero_binding_drops_the_term(self):
        f = parse("z1^6+t*z1^4*z2+z2^3+z3^2", Z, {'t': 0})
        self.assertEqual(len(f), 3)

    def test_canonical_printing(self):
        f = parse("z3^2 + z2^3 + z1^6 + z1^4*z2", Z)
        self.assertEqual(str(f), 'z3^2 + z2^3 + z1^4*z2 + z1^6')
        self.assertEqual(str(parse("1/6*x1^3 + x1*x2", X)), 'x1*x2 + 1/6*x1^3')
        self.assertEqual(str(parse("-x2 + 3/4", X)), '3/4 - x2')

    def test_printing_round_trips(self):
        f = parse("-2/3*z1^2*z2 + z3 - 5", Z)
        self.assertEqual(parse(str(f), Z), f)

    def test_rational_literals(self):
        self.assertEqual(rational('-3/4'), Fraction(-3, 4))
        self.assertEqual(rational(' 7 '), Fraction(7))
        with self.assertRaises(ParseException):
            rational('1/0')
        with self.assertRaises(ParseException):
            rational('0.5')

    def test_bindings(self):
        self.assertEqual(parse_bindings(['t=1/2', 's=-3']), {'t': Fraction(1, 2), 's': Fraction(-3)})
        with self.assertRaises(ParseException):
            parse_bindings(['t'])

    def test_syntax_errors(self):
        with self.assertRaises(ParseException) as cm:
            parse("z1^", Z)
        self.assertIn('syntax error', str(cm.exception))
        with self.assertRaises(ParseException):
            parse("z1 $ z2", Z)
        with self.assertRaises(ParseException):
            parse("", Z)

    def test_unbound_symbol(self):
        with self.assertRaises(ParseException) as cm:
            parse("t*z1", Z)
        self.assertIn("unbound symbol 't'", str(cm.exception))

    def test_zero_denominator(self):
        with self.assertRaises(ParseException):
            parse("1/0*z1", Z)

    def test_variables(self):
        self.assertEqual(parse_variables('z1, z2,z3'), Z)
        with self.assertRaises(ParseException):
            parse_variables('z1,z1')

    def test_parse_list(self):
        gens = parse_list("z1^3*z2; z1^5;", ('z1', 'z2'))
        self.assertEqual(len(gens), 2)


class TestArithmetic(TestCase):
    def test_ring_operations(self):
        x1, x2 = Polynomial.variable(X, 0), Polynomial.variable(X, 1)
        self.assertEqual((x1 + x2) ** 2, parse("x1^2 + 2*x1*x2 + x2^2", X))
        self.assertEqual((x1 - x1), Polynomial.zero(X))
        self.assertEqual(x1 * Fraction(1, 2) + x1 / 2, x1)
        self.assertEqual(Polynomial.constant(X, 3), 3)

    def test_mismatched_variables(self):
        with self.assertRaises(DimensionMismatch):
            Polynomial.variable(X, 0) + Polynomial.variable(Z, 0)

    def test_degrees_and_components(self):
        p = parse("x1*x2 + 1/6*x1^3", X)
        self.assertEqual(p.degree, 3)
        self.assertEqual(p.min_degree, 2)
        self.assertEqual(sorted(p.components()), [2, 3])
        self.assertEqual(Polynomial.zero(X).degree, -1)

    def test_derivatives(self):
        f = parse("z1^6 + z1^4*z2 + z2^3 + z3^2", Z)
        self.assertEqual(gradient(f), [
            parse("6*z1^5 + 4*z1^3*z2", Z),
            parse("z1^4 + 3*z2^2", Z),
            parse("2*z3", Z)
        ])

    def test_evaluate(self):
        f = parse("z1^2 - 1/2*z2*z3", Z)
        self.assertEqual(f.evaluate([Fraction(1), Fraction(2), Fraction(3)]), -2)

    def test_compose(self):
        f = parse("z1^4 + t*z1^2*z2^3 + z2^6", ('z1', 'z2'), {'t': Fraction(1)})
        flipped = parse("z1^4 - z1^2*z2^3 + z2^6", ('z1', 'z2'))
        images = [parse("z1", ('z1', 'z2')), parse("-z2", ('z1', 'z2'))]
        self.assertEqual(flipped.compose(images), f)

    def test_substitute_linear(self):
        p = parse("x1*x2 + 1/6*x1^3", X)
        C = [[Fraction(6), Fraction(0)], [Fraction(0), Fraction(6)]]
        self.assertEqual(substitute_linear(p, C), parse("36*x1*x2 + 36*x1^3", X))
        with self.assertRaises(DimensionMismatch):
            substitute_linear(p, [[1]])

    def test_json(self):
        p = parse("x1*x2 - 1/6*x1^3", X)
        self.assertEqual(p.to_json(), [[[1, 1], '1'], [[3, 0], '-1/6']])
        self.assertEqual(Polynomial.from_json(X, p.to_json()), p)


class TestWeights(TestCase):
    def test_e8_weights(self):
        f = self.fixture_polynomial('e8')
        self.assertEqual(find_weights(f), WeightSystem((1, 2, 3), 6))

    def test_family13_weights(self):
        w = find_weights(self.fixture_polynomial('family13', 2))
        self.assertEqual((w.weights, w.degree), ((3, 2), 12))
        self.assertTrue(is_quasi_homogeneous(self.fixture_polynomial('family13'), w))

    def test_skewed_weights(self):
        f = parse("z1*z2^10 + z3", ('z1', 'z2', 'z3'))
        w = find_weights(f)
        self.assertEqual(w, WeightSystem((1, 1, 11), 11))
        self.assertTrue(is_quasi_homogeneous(f, w))
        self.assertEqual(find_weights(parse("z1^7*z2 + z2^2", ('z1', 'z2'))), WeightSystem((1, 7), 14))

    def test_positive_kernel_vector(self):
        self.assertEqual(linalg.positive_solution([[1, 10, -1]], 3), [Fraction(1), Fraction(1), Fraction(11)])
        self.assertIsNone(linalg.positive_solution([[1, 1, 0], [0, 0, 1]], 3))

    def test_non_quasi_homogeneous(self):
        self.assertIsNone(find_weights(self.fixture_polynomial('non-qh')))

    def test_non_graded_relations(self):
        gens = self.nongraded_ideal()
        total = Polynomial.zero(gens[0].variables)
        for g in gens:
            total = total + Polynomial(g.variables, {m: 1 for m in g.terms})
        self.assertIsNone(find_weights(total))

    def test_weight_system_is_reduced(self):
        self.assertEqual(WeightSystem((2, 4, 6), 12), WeightSystem((1, 2, 3), 6))


if __name__ == '__main__':
    unittest.main()
