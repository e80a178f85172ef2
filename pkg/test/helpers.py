import itertools
import logging
import random
import unittest
from fractions import Fraction

from milnor import fixtures, linalg
from milnor.algebra import FiniteAlgebra, grading_from_weights, maximal_ideal, milnor_algebra
from milnor.exactpoly import Polynomial, parse
from milnor.nilpoly import basis_from_monomials


logger = logging.getLogger()
handler = logging.StreamHandler()
formatter = logging.Formatter(
        '%(asctime)s %(name)-12s %(levelname)-8s %(message)s')
handler.setFormatter(formatter)
logger.addHandler(handler)
logger.setLevel(logging.WARNING)

SEED = 1729


def q(text):
    return Fraction(text)


def vector(*values):
    return [Fraction(v) for v in values]


def derivative(F, exponents):
    for i, e in enumerate(exponents):
        for _ in range(e):
            F = F.diff(i)
    return F


def inverse_system_algebra(F):
    """
    The Gorenstein algebra R / Ann(F) of differential operators acting on F,
    on a basis of monomial operators chosen greedily by degree. Element 0 is
    the unit.
    """
    variables = F.variables
    n = len(variables)
    top = F.degree
    exponents = sorted(
        (m for m in itertools.product(range(top + 1), repeat = n) if sum(m) <= top),
        key = lambda m: (sum(m), m)
    )
    support = sorted(set(m for e in exponents for m in derivative(F, e).terms))

    def coords(p):
        return [p.coefficient(m) for m in support]

    chosen = []
    vectors = []
    for e in exponents:
        v = coords(derivative(F, e))
        if any(v) and linalg.rank(vectors + [v]) > len(vectors):
            chosen.append(e)
            vectors.append(v)
    basis = linalg.columns(vectors)
    products = {}
    for i in range(len(chosen)):
        for j in range(i, len(chosen)):
            target = coords(derivative(F, [a + b for a, b in zip(chosen[i], chosen[j])]))
            if any(target):
                products[(i, j)] = linalg.solve(basis, target)
    labels = ['d{0}'.format(''.join(str(x) for x in e)) for e in chosen]
    return FiniteAlgebra(labels, products, unital = True)


def random_admissible(rng, max_dimension = 8):
    """Maximal ideal of a random Gorenstein algebra of dimension 3..max_dimension+1"""
    while True:
        n = rng.choice((1, 2, 2, 3))
        variables = tuple('y{0}'.format(i + 1) for i in range(n))
        degree = rng.choice((2, 3, 4))
        F = Polynomial.zero(variables)
        for _ in range(rng.randint(1, 4)):
            m = [0] * n
            for _ in range(rng.randint(1, degree)):
                m[rng.randrange(n)] += 1
            F = F + Polynomial.monomial(variables, m, rng.choice((-3, -2, -1, 1, 2, 3)))
        top = [0] * n
        for _ in range(degree):
            top[rng.randrange(n)] += 1
        F = F + Polynomial.monomial(variables, top, rng.choice((1, 2)))
        if F.degree < 2:
            continue
        A = inverse_system_algebra(F)
        if 3 <= A.dimension <= max_dimension + 1:
            return maximal_ideal(A)


class TestCase(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(SEED)

    def fixture_polynomial(self, name, t = None):
        fixture = fixtures.get(name)
        return fixture.polynomial(None if t is None else {'t': Fraction(t)})

    def graded_algebra(self, name, t = None):
        """Milnor algebra of a polynomial fixture, re-based on its listed monomials and graded"""
        fixture = fixtures.get(name)
        f = self.fixture_polynomial(name, t)
        A = milnor_algebra(f)
        N = basis_from_monomials(A, fixture.basis())
        N = grading_from_weights(N, fixture.weights)
        return f, A, N

    def e8(self, t = 1):
        return self.graded_algebra('e8', t)

    def family13(self, t = 1):
        return self.graded_algebra('family13', t)

    def table(self, name):
        return fixtures.get(name).algebra()

    def gorenstein(self):
        return self.table('gorenstein')

    def cube(self):
        return self.table('cube')

    def glued(self):
        return self.table('glued')

    def nongraded_ideal(self):
        return fixtures.get('nongraded').generators()

    def poly(self, text, variables):
        return parse(text, variables)

    def assertPolynomialEqual(self, actual, text, bindings = None):
        expected = parse(text, actual.variables, bindings)
        self.assertEqual(actual, expected, '{0} != {1}'.format(actual, expected))
