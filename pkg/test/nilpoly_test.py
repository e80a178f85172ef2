import unittest
from fractions import Fraction

from milnor.algebra import milnor_algebra
from milnor.errors import DegenerateForm, NotABasis, PreconditionFailed
from milnor.exactpoly import Polynomial, parse
from milnor.forms import default_form
from milnor.nilpoly import (
    NilPolynomial, basis_from_monomials, blaschke_residual, build_nilpolynomial, multilinear_omega,
    reconstruct_from_23, square_field, w_product
)
from test.helpers import TestCase, vector

X2 = ('x1', 'x2')
X3 = ('x1', 'x2', 'x3')


class TestNilPolynomial(TestCase):
    def test_components(self):
        P = NilPolynomial.from_polynomial(parse("x1*x2 + 1/6*x1^3", X2))
        self.assertEqual(P.degrees, [2, 3])
        self.assertEqual(P.degree, 3)
        self.assertEqual(str(P), 'x1*x2 + 1/6*x1^3')
        self.assertEqual(P([Fraction(1), Fraction(2)]), Fraction(13, 6))

    def test_rejects_low_degree_terms(self):
        with self.assertRaises(PreconditionFailed):
            NilPolynomial.from_polynomial(parse("x1 + x1*x2", X2))
        with self.assertRaises(PreconditionFailed):
            NilPolynomial(X2, {2: parse("x1^3", X2)})

    def test_gram_and_cubic_tensor(self):
        P = NilPolynomial.from_polynomial(parse("x1*x2 + x3^2 + 3*x1^2*x2", X3))
        self.assertEqual(P.gram, [vector(0, Fraction(1, 2), 0), vector(Fraction(1, 2), 0, 0), vector(0, 0, 1)])
        self.assertEqual(P.cubic(0, 0, 1), 1)
        self.assertEqual(P.cubic(1, 0, 0), 1)
        self.assertEqual(P.cubic(1, 1, 0), 0)

    def test_degenerate_quadratic_part(self):
        P = NilPolynomial.from_polynomial(parse("x1^2 + x1^3", X2))
        with self.assertRaises(DegenerateForm):
            P.inverse_gram()

    def test_json(self):
        P = NilPolynomial.from_polynomial(parse("x1*x2 + 1/6*x1^3", X2))
        self.assertEqual(NilPolynomial.from_json(P.to_json()), P)


class TestBuild(TestCase):
    def test_gorenstein(self):
        P = build_nilpolynomial(default_form(self.gorenstein()))
        self.assertEqual(str(P), 'x1*x2 + x3^2')
        self.assertEqual(P.gram, [vector(0, Fraction(1, 2), 0), vector(Fraction(1, 2), 0, 0), vector(0, 0, 1)])
        self.assertEqual(P.provenance['basis'], ['e1', 'e2', 'e3', 'e4'])

    def test_cube(self):
        P = build_nilpolynomial(default_form(self.cube()))
        self.assertEqual(str(P), 'x1*x2 + 1/6*x1^3')

    def test_tilted_kernel_gives_the_same_polynomial(self):
        N = self.gorenstein()
        tilted = default_form(N, N.basis_vector(3), [vector(1, 0, 0, 1), N.basis_vector(1), N.basis_vector(2)])
        self.assertEqual(build_nilpolynomial(tilted), build_nilpolynomial(default_form(N)))

    def test_small_classes(self):
        self.assertEqual(build_nilpolynomial(default_form(self.table('line'))).degree, -1)
        self.assertEqual(str(build_nilpolynomial(default_form(self.table('square')))), '1/2*x1^2')
        self.assertEqual(str(build_nilpolynomial(default_form(self.glued()))), '1/2*x1^2 + 1/2*x2^2')

    def test_degree_is_nil_index(self):
        f, A, N = self.e8()
        P = build_nilpolynomial(default_form(N))
        self.assertEqual(P.degree, N.nil_index)
        self.assertEqual(P.n, 8)


class TestIdentities(TestCase):
    def test_blaschke_residual(self):
        P = build_nilpolynomial(default_form(self.cube()))
        self.assertEqual(blaschke_residual(P), vector(0, 0))
        perturbed = NilPolynomial.from_polynomial(P.polynomial + parse("3*x1^2*x2", X2))
        self.assertEqual(blaschke_residual(perturbed), vector(4, 0))

    def test_multilinear_omega(self):
        P = build_nilpolynomial(default_form(self.cube()))
        self.assertEqual(multilinear_omega(P, 2, [vector(1, 0), vector(0, 1)]), 1)
        self.assertEqual(multilinear_omega(P, 3, [vector(1, 0)] * 3), 1)
        self.assertEqual(multilinear_omega(P, 4, [vector(1, 0)] * 4), 0)

    def test_w_product_recovers_multiplication(self):
        P = build_nilpolynomial(default_form(self.cube()))
        self.assertEqual(w_product(P, vector(1, 0), vector(1, 0)), vector(0, 1))
        self.assertEqual(w_product(P, vector(1, 0), vector(0, 1)), vector(0, 0))

    def test_square_field(self):
        P = build_nilpolynomial(default_form(self.cube()))
        field = square_field(P.component(2), P.component(3))
        self.assertEqual(field[0], Polynomial.zero(X2))
        self.assertPolynomialEqual(field[1], "x1^2")

    def test_reconstruct(self):
        for P in (build_nilpolynomial(default_form(self.cube())), build_nilpolynomial(default_form(self.e8()[2]))):
            self.assertEqual(reconstruct_from_23(P.component(2), P.component(3)), P)


class TestMonomialBasis(TestCase):
    def test_rebasing(self):
        f = self.fixture_polynomial('a2')
        A = milnor_algebra(f)
        N = basis_from_monomials(A, [parse("3*z1", f.variables)])
        self.assertEqual(N.labels, ['z1'])
        self.assertEqual(N.coordinates(parse("z1", f.variables)), vector(Fraction(1, 3)))

    def test_not_a_basis(self):
        f = self.fixture_polynomial('e8')
        A = milnor_algebra(f)
        monomials = [parse(m, f.variables) for m in ['z1'] * 9]
        with self.assertRaises(NotABasis):
            basis_from_monomials(A, monomials)
        with self.assertRaises(NotABasis):
            basis_from_monomials(A, monomials[:3])


if __name__ == '__main__':
    unittest.main()
