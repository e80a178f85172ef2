import unittest
from fractions import Fraction

from milnor.errors import DimensionMismatch, NoGrading, NotHomogeneous, TargetNotOnHypersurface
from milnor.algebra import algebra_from_table, as_nilpotent
from milnor.exactpoly import Polynomial
from milnor.forms import default_form, hypersurface_function
from milnor.homogeneity import AffineMap, check_L_xi, flow, lift_to_hypersurface, transport, xi_field
from test.helpers import TestCase, vector


def with_row(n, index, row):
    matrix = [vector(*[int(i == j) for j in range(n)]) for i in range(n)]
    matrix[index] = vector(*row)
    return matrix


class TestAffineMap(TestCase):
    def test_compose_and_inverse(self):
        g = AffineMap(with_row(2, 1, [1, 1]), vector(1, -2))
        self.assertEqual(g(vector(1, 1)), vector(2, 0))
        self.assertEqual(g.compose(g.inverse()), AffineMap.identity(2))
        self.assertEqual(AffineMap.translation(vector(1, 2))(vector(0, 0)), vector(1, 2))
        self.assertFalse(g.is_linear())

    def test_shape(self):
        with self.assertRaises(DimensionMismatch):
            AffineMap([vector(1, 0)], vector(0, 0))

    def test_substitute_into(self):
        variables = ('u1', 'u2')
        g = AffineMap(with_row(2, 1, [1, 1]), vector(0, 1))
        self.assertPolynomialEqual(g.substitute_into(Polynomial.variable(variables, 1)), "u1 + u2 + 1")


class TestVectorFields(TestCase):
    def test_fields_annihilate_f(self):
        for N in (self.gorenstein(), self.cube(), self.e8()[2]):
            f = hypersurface_function(default_form(N))
            top = N.grading.top_degree
            for i, d in enumerate(N.grading.degrees):
                if d < top:
                    self.assertTrue(check_L_xi(xi_field(N, N.basis_vector(i)), f))

    def test_non_homogeneous(self):
        N = self.gorenstein()
        with self.assertRaises(NotHomogeneous):
            xi_field(N, vector(1, 0, 0, 1))
        with self.assertRaises(NotHomogeneous):
            xi_field(N, N.basis_vector(3))

    def test_no_grading(self):
        N = as_nilpotent(algebra_from_table(2, ['e', 'f'], {(0, 0): {1: 1}}))
        with self.assertRaises(NoGrading):
            xi_field(N, N.basis_vector(0))

    def test_flow_of_constant_field(self):
        N = self.gorenstein()
        g = flow(xi_field(N, N.basis_vector(0)))
        self.assertEqual(g.shift, vector(1, 0, 0, 0))
        self.assertEqual(g.matrix, with_row(4, 3, [0, -1, 0, 1]))


class TestTransport(TestCase):
    def test_gorenstein_targets(self):
        N = self.gorenstein()
        g = transport(N, vector(1, 0, 0, 0))
        self.assertEqual(g.shift, vector(1, 0, 0, 0))
        self.assertEqual(g.matrix, with_row(4, 3, [0, -1, 0, 1]))

        g = transport(N, vector(0, -1, 0, 0))
        self.assertEqual(g.shift, vector(0, -1, 0, 0))
        self.assertEqual(g.matrix, with_row(4, 3, [1, 0, 0, 1]))

    def test_target_off_hypersurface(self):
        N = self.gorenstein()
        with self.assertRaises(TargetNotOnHypersurface) as cm:
            transport(N, N.basis_vector(3))
        self.assertEqual(cm.exception.value, 1)

    def test_lift(self):
        N = self.gorenstein()
        self.assertEqual(lift_to_hypersurface(N, vector(1, 1, 0, 5)), vector(1, 1, 0, -1))
        with self.assertRaises(DimensionMismatch):
            lift_to_hypersurface(N, vector(1, 1))

    def test_random_points(self):
        for N in (self.cube(), self.gorenstein(), self.e8()[2]):
            f = hypersurface_function(default_form(N))
            for _ in range(5):
                s = [Fraction(self.rng.randint(-3, 3), self.rng.randint(1, 2)) for _ in range(N.dimension)]
                s = lift_to_hypersurface(N, s)
                self.assertEqual(f.evaluate(s), 0)
                g = transport(N, s)
                self.assertEqual(g(N.zero()), s)
                self.assertEqual(g.substitute_into(f), f)


if __name__ == '__main__':
    unittest.main()
