"""
Named fixtures: the polynomial families, ideals and structure-constant tables
used by the command line `--fixture` flag and by the tests.
"""
from fractions import Fraction

from milnor.algebra import algebra_from_table, as_nilpotent
from milnor.errors import ParseException
from milnor.exactpoly import parse, parse_list, parse_variables


class PolynomialFixture(object):
    kind = 'poly'

    def __init__(self, name, variables, text, bindings = None, monomials = None, weights = None):
        self.name = name
        self.variables = parse_variables(variables)
        self.text = text
        self.bindings = bindings or {}
        self.monomials = monomials
        self.weights = weights

    def polynomial(self, bindings = None):
        values = dict(self.bindings)
        values.update(bindings or {})
        return parse(self.text, self.variables, values)

    def basis(self):
        """The designated monomial basis of N, socle first"""
        if self.monomials is None:
            return None
        return [parse(m, self.variables) for m in self.monomials.split(',')]


class IdealFixture(object):
    kind = 'ideal'

    def __init__(self, name, variables, text):
        self.name = name
        self.variables = parse_variables(variables)
        self.text = text

    def generators(self, bindings = None):
        return parse_list(self.text, self.variables, bindings)


class TableFixture(object):
    kind = 'table'

    def __init__(self, name, labels, products, grading = None):
        self.name = name
        self.labels = labels
        self.products = products
        self.grading = grading

    def algebra(self):
        A = algebra_from_table(len(self.labels), self.labels, self.products, False, self.grading)
        return as_nilpotent(A)


_FIXTURES = [
    PolynomialFixture(
        'e8', 'z1,z2,z3', 'z1^6 + t*z1^4*z2 + z2^3 + z3^2', {'t': Fraction(1)},
        'z1^4*z2,z1,z2,z1^2,z1*z2,z1^3,z1^2*z2,z1^4,z1^3*z2', (1, 2, 3)
    ),
    PolynomialFixture(
        'family13', 'z1,z2', 'z1^4 + t*z1^2*z2^3 + z2^6', {'t': Fraction(1)},
        'z1^2*z2^4,z2,z1,z1^2,z1*z2,z2^2,z1^2*z2,z1*z2^2,z2^3,z1*z2^3,z1^2*z2^2,z2^4,z1^2*z2^3,z1*z2^4',
        (3, 2)
    ),
    PolynomialFixture('non-qh', 'z1,z2', 'z1^5 + z2^5 + z1^3*z2^3'),
    PolynomialFixture('a2', 'z1,z2', 'z1^3 + z2^2'),
    IdealFixture('nongraded', 'z1,z2', 'z1^3*z2; z1^5; z1*z2^3 + z1^3; z1^2*z2^2 + z2^4'),
    # (u1..u4).(v1..v4) = (0, 0, 0, u1 v2 + u2 v1 + 2 u3 v3)
    TableFixture('gorenstein', ['e1', 'e2', 'e3', 'e4'], {
        (0, 1): {3: 1},
        (2, 2): {3: 2}
    }, [1, 1, 1, 2]),
    TableFixture('cube', ['e', 'e^2', 'e^3'], {
        (0, 0): {1: 1},
        (0, 1): {2: 1}
    }, [1, 2, 3]),
    # two copies of <a, a^2> glued along their annihilators
    TableFixture('glued', ['a', 'b', 'z'], {
        (0, 0): {2: 1},
        (1, 1): {2: 1}
    }, [1, 1, 2]),
    TableFixture('line', ['e'], {}, [1]),
    TableFixture('square', ['e', 'e^2'], {
        (0, 0): {1: 1}
    }, [1, 2]),
]

FIXTURES = {f.name: f for f in _FIXTURES}


def get(name):
    try:
        return FIXTURES[name]
    except KeyError:
        raise ParseException("unknown fixture (known: {0})".format(', '.join(sorted(FIXTURES))), name)


def names():
    return sorted(FIXTURES)
