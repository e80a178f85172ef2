"""
Affine homogeneity of S for graded algebras.

For a homogeneous alpha in N_j (j < d) the vector field

    xi_alpha(u) = (d - j) alpha - alpha * (sum_{m <= d-j} m u_m)

is affine with nilpotent linear part and annihilates f = omega o exp_1 when
omega is the grading form. Its time-1 flow is an affine map preserving f;
composing such flows degree by degree moves 0 to any point of {f = 0}.
"""
import logging
from fractions import Fraction
from math import factorial

from milnor import linalg
from milnor.errors import (
    NotHomogeneous, TargetNotOnHypersurface, InternalInconsistency, PreconditionFailed, DimensionMismatch,
    NoGrading
)
from milnor.exactpoly import Polynomial
from milnor.forms import grading_form, hypersurface_function

log = logging.getLogger(__name__)


class AffineMap(object):
    """u -> M u + b"""
    def __init__(self, matrix, shift):
        n = len(shift)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise DimensionMismatch(n, len(matrix), 'affine map size')
        self.matrix = [[Fraction(x) for x in row] for row in matrix]
        self.shift = [Fraction(x) for x in shift]

    @classmethod
    def identity(cls, n):
        return cls(linalg.identity(n), [Fraction(0)] * n)

    @classmethod
    def translation(cls, b):
        return cls(linalg.identity(len(b)), b)

    @property
    def dimension(self):
        return len(self.shift)

    @property
    def linear_part(self):
        return self.matrix

    def __call__(self, u):
        return [a + b for a, b in zip(linalg.matvec(self.matrix, u), self.shift)]

    def compose(self, other):
        """self o other"""
        return AffineMap(linalg.matmul(self.matrix, other.matrix), self(other.shift))

    def inverse(self):
        inverse = linalg.inverse(self.matrix, 'affine map')
        return AffineMap(inverse, [-x for x in linalg.matvec(inverse, self.shift)])

    def substitute_into(self, poly):
        """poly(M u + b), over the same variables"""
        variables = poly.variables
        if len(variables) != self.dimension:
            raise DimensionMismatch(self.dimension, len(variables), 'variable count')
        images = [Polynomial.linear(variables, row) + b for row, b in zip(self.matrix, self.shift)]
        return poly.compose(images)

    def is_linear(self):
        return not any(self.shift)

    def __eq__(self, other):
        return isinstance(other, AffineMap) and self.matrix == other.matrix and self.shift == other.shift

    def __ne__(self, other):
        return not self.__eq__(other)

    def to_json(self):
        return {
            'matrix': [[str(x) for x in row] for row in self.matrix],
            'shift': [str(x) for x in self.shift]
        }

    def __repr__(self):
        return 'AffineMap(matrix={0}, shift={1})'.format(
            [[str(x) for x in row] for row in self.matrix], [str(x) for x in self.shift]
        )


class VectorField(object):
    """The affine vector field u -> M u + b"""
    def __init__(self, matrix, constant):
        self.matrix = matrix
        self.constant = constant

    @property
    def dimension(self):
        return len(self.constant)

    def components(self, variables):
        return [Polynomial.linear(variables, row) + b for row, b in zip(self.matrix, self.constant)]

    def lie_derivative(self, f):
        """sum_i xi_i df/du_i"""
        total = Polynomial.zero(f.variables)
        for i, xi in enumerate(self.components(f.variables)):
            if xi:
                total = total + xi * f.diff(i)
        return total


def _degree_of(grading, alpha):
    j = grading.degree_of(alpha)
    if j is None:
        raise NotHomogeneous("alpha is not homogeneous")
    return j


def xi_field(N, alpha, grading = None):
    """
    Args:
    ```
        N (NilpotentAlgebra): a graded algebra
        alpha (list of Fraction): a homogeneous element of degree j < d
    ```

    Returns:
    ```
        VectorField
    ```
    """
    grading = grading or N.grading
    if grading is None:
        raise NoGrading()
    n = N.dimension
    j = _degree_of(grading, alpha)
    d = grading.top_degree
    if j >= d:
        raise NotHomogeneous("alpha has degree {0}, fields need degree below {1}".format(j, d))
    # E(u) = sum_{m <= d-j} m u_m, diagonal in the graded basis
    euler = [Fraction(grading.degrees[i]) if grading.degrees[i] <= d - j else Fraction(0) for i in range(n)]
    L = N.left_operator(alpha)
    matrix = [[-L[r][c] * euler[c] for c in range(n)] for r in range(n)]
    constant = [Fraction(d - j) * a for a in alpha]
    return VectorField(matrix, constant)


def check_L_xi(field, f):
    return field.lie_derivative(f).is_zero()


def flow(field):
    """
    Exact time-1 flow of an affine field with nilpotent linear part:
    exp(M) u + sum_k M^k b / (k+1)!
    """
    n = field.dimension
    A = linalg.identity(n)
    shift = list(field.constant)
    power = linalg.identity(n)
    vector = list(field.constant)
    for k in range(1, n + 2):
        power = linalg.matmul(field.matrix, power)
        vector = linalg.matvec(field.matrix, vector)
        if not any(any(row) for row in power) and not any(vector):
            break
        A = [[a + p / factorial(k) for a, p in zip(ra, rp)] for ra, rp in zip(A, power)]
        shift = [s + v / factorial(k + 1) for s, v in zip(shift, vector)]
    else:
        raise PreconditionFailed("flow needs a nilpotent linear part")
    return AffineMap(A, shift)


def transport(N, s, form = None, grading = None):
    """
    An affine map g with f o g = f and g(0) = s, where f = omega o exp_1 for the
    grading form omega and f(s) = 0.

    The correction runs by ascending degree: at degree j the flow of xi_alpha with
    alpha = (s_j - g(0)_j) / (d - j) fixes the degree j component and leaves the
    lower ones alone. The top component is then forced by f(s) = 0.
    """
    grading = grading or N.grading
    if grading is None:
        raise NoGrading()
    form = form or grading_form(N, grading)
    f = hypersurface_function(form)
    value = f.evaluate(s)
    if value:
        raise TargetNotOnHypersurface(value)
    n = N.dimension
    g = AffineMap.identity(n)
    d = grading.top_degree
    for j in range(1, d):
        indices = grading.components(j)
        if not indices:
            continue
        current = g.shift
        alpha = [Fraction(0)] * n
        for i in indices:
            alpha[i] = (s[i] - current[i]) / (d - j)
        if not any(alpha):
            continue
        g = flow(xi_field(N, alpha, grading)).compose(g)
        log.debug('transport: degree %s corrected', j)
    if g.shift != list(s):
        raise InternalInconsistency("transport ended at {0}, expected {1}".format(
            [str(x) for x in g.shift], [str(x) for x in s]
        ))
    if g.substitute_into(f) != f:
        raise InternalInconsistency("transport does not preserve f")
    return g


def lift_to_hypersurface(N, s, form = None, grading = None):
    """
    Replace the top degree coordinate of s so that f(s) = 0. The top
    component enters f linearly, through omega alone.
    """
    grading = grading or N.grading
    if grading is None:
        raise NoGrading()
    form = form or grading_form(N, grading)
    if len(s) != N.dimension:
        raise DimensionMismatch(N.dimension, len(s), 'point length')
    top = grading.components(grading.top_degree)[0]
    point = [Fraction(x) for x in s]
    point[top] = Fraction(0)
    value = hypersurface_function(form).evaluate(point)
    point[top] = -value / form.value(N.basis_vector(top))
    return point
