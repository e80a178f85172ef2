"""
Admissible forms on a nilpotent algebra and the objects they determine:
the truncated exponential and logarithm, the bilinear form b_pi, the
hypersurface S_pi and translations between the hypersurfaces of two forms.

Elements of 1 + N are handled through their N part, so `exp_map(N, u)` returns
the coordinates of exp(u) - 1.
"""
import logging
from fractions import Fraction
from math import factorial

from milnor import linalg
from milnor.errors import (
    DegenerateForm, NotAdmissible, NormalizationMismatch, NoGrading, DimensionMismatch, InternalInconsistency
)
from milnor.exactpoly import Polynomial

log = logging.getLogger(__name__)


def coordinate_variables(prefix, n):
    return tuple('{0}{1}'.format(prefix, i + 1) for i in range(n))


class AdmissibleForm(object):
    """
    A linear form omega on an admissible algebra N with omega(Ann N) != 0,
    together with an ordered basis of its kernel.

    Args:
    ```
        algebra (NilpotentAlgebra): an admissible algebra
        omega (list of Fraction): the covector, one entry per basis element
        annihilator (list of Fraction): a vector spanning Ann(N)
        kernel (list of vectors): ordered basis of ker omega
    ```
    """
    def __init__(self, algebra, omega, annihilator, kernel):
        n = algebra.dimension
        if not algebra.is_admissible:
            raise NotAdmissible(algebra.dim_ann)
        if len(omega) != n:
            raise DimensionMismatch(n, len(omega), 'covector length')
        self.algebra = algebra
        self.omega = [Fraction(x) for x in omega]
        self.annihilator = [Fraction(x) for x in annihilator]
        self.kernel = [[Fraction(x) for x in v] for v in kernel]

        if not linalg.same_span([self.annihilator], algebra.annihilator):
            raise DegenerateForm("the designated generator does not span Ann(N)")
        if not self.value(self.annihilator):
            raise DegenerateForm("omega vanishes on Ann(N)")
        if len(self.kernel) != n - 1:
            raise DegenerateForm("kernel basis has {0} vectors, expected {1}".format(len(self.kernel), n - 1))
        for k in self.kernel:
            if self.value(k):
                raise DegenerateForm("kernel vector {0} is not in ker omega".format([str(x) for x in k]))
        if linalg.rank(self.kernel + [self.annihilator]) != n:
            raise DegenerateForm("kernel basis is not linearly independent")

    @property
    def n(self):
        return len(self.kernel)

    def value(self, u):
        return linalg.dot(self.omega, u)

    def value_poly(self, coordinates, variables):
        total = Polynomial.zero(variables)
        for w, c in zip(self.omega, coordinates):
            if w:
                total = total + c * w
        return total

    @property
    def scale(self):
        """omega(a0)"""
        return self.value(self.annihilator)

    def projection(self, u):
        """pi(u): the multiple of a0 with the same omega value"""
        t = self.value(u) / self.scale
        return [t * a for a in self.annihilator]

    def projection_matrix(self):
        n = self.algebra.dimension
        return linalg.columns([self.projection(self.algebra.basis_vector(j)) for j in range(n)])

    def normalized(self):
        s = self.scale
        if s == 1:
            return self
        return AdmissibleForm(self.algebra, [x / s for x in self.omega], self.annihilator, self.kernel)

    def with_annihilator(self, a0):
        return AdmissibleForm(self.algebra, self.omega, a0, self.kernel)

    def phi(self, variables):
        """phi(x) = sum x_alpha k_alpha as a vector of polynomials"""
        if len(variables) != self.n:
            raise DimensionMismatch(self.n, len(variables), 'variable count')
        out = [Polynomial.zero(variables) for _ in range(self.algebra.dimension)]
        for alpha, k in enumerate(self.kernel):
            x = Polynomial.variable(variables, alpha)
            for i, c in enumerate(k):
                if c:
                    out[i] = out[i] + x * c
        return out

    def to_json(self):
        return {
            'omega': [str(x) for x in self.omega],
            'annihilator': [str(x) for x in self.annihilator],
            'kernel': [[str(x) for x in v] for v in self.kernel]
        }

    def __repr__(self):
        return 'AdmissibleForm(omega={0})'.format([str(x) for x in self.omega])


def default_form(N, annihilator = None, kernel = None):
    """
    The form with omega(a0) = 1 and omega = 0 on the given kernel basis.

    Without arguments a0 is the computed annihilator generator and the kernel
    is spanned by the degree < d components when N is graded, otherwise by all
    basis vectors except the last one a0 involves.
    """
    if not N.is_admissible:
        raise NotAdmissible(N.dim_ann)
    n = N.dimension
    if annihilator is None and kernel is None and N.grading is not None:
        return grading_form(N, N.grading)
    if annihilator is None:
        annihilator = N.annihilator[0]
    if kernel is None:
        pivot = max(i for i, c in enumerate(annihilator) if c)
        kernel = [N.basis_vector(i) for i in range(n) if i != pivot]
    if len(kernel) != n - 1:
        raise DegenerateForm("kernel basis has {0} vectors, expected {1}".format(len(kernel), n - 1))
    basis = [annihilator] + list(kernel)
    if linalg.rank(basis) != n:
        raise DegenerateForm("a0 and the kernel basis do not span N")
    # omega is the first row of the inverse of the matrix with columns a0, k_1, ..., k_n
    inverse = linalg.inverse(linalg.columns(basis), 'basis matrix')
    return AdmissibleForm(N, inverse[0], annihilator, kernel)


def form_from_covector(N, omega, annihilator = None):
    """Any covector with omega(Ann N) != 0; the kernel basis comes from its nullspace"""
    if annihilator is None:
        annihilator = N.annihilator[0]
    kernel = linalg.nullspace([list(omega)], N.dimension) if any(omega) else []
    return AdmissibleForm(N, omega, annihilator, kernel)


def grading_form(N, grading = None):
    """The form whose kernel is the sum of the components of degree below the top degree"""
    grading = grading or N.grading
    if grading is None:
        raise NoGrading()
    top = grading.components(grading.top_degree)
    if len(top) != 1:
        raise DegenerateForm("top degree component has dimension {0}".format(len(top)))
    kernel = [N.basis_vector(i) for i in range(N.dimension) if i != top[0]]
    return default_form(N, N.basis_vector(top[0]), kernel)


def _series(N, u, coefficient, zero):
    total = [x * coefficient(1) for x in u]
    term = u
    for m in range(2, N.nil_index + 1):
        term = N.multiply(term, u, zero)
        c = coefficient(m)
        total = [a + b * c for a, b in zip(total, term)]
    return total


def exp_map(N, u, zero = None):
    """exp(u) - 1 = u + u^2/2 + ..., truncated at the nil-index"""
    return _series(N, u, lambda m: Fraction(1, factorial(m)), zero)


def exp2(N, u, zero = None):
    """exp(u) - 1 - u"""
    return [a - b for a, b in zip(exp_map(N, u, zero), u)]


def log_map(N, v, zero = None):
    """log(1 + v) = v - v^2/2 + v^3/3 - ..."""
    return _series(N, v, lambda m: Fraction((-1) ** (m + 1), m), zero)


class GramReport(object):
    """
    Gram matrices of b_pi(u, v) = omega(u v) on N^0 = C.1 + N, on N and on the
    kernel basis, with determinants and radicals.
    """
    def __init__(self, form):
        N = form.algebra
        n = N.dimension
        omega = form.value
        basis = [N.basis_vector(i) for i in range(n)]
        self.on_algebra = [[omega(N.product(i, j)) for j in range(n)] for i in range(n)]
        # omega(1) = 0 and 1 * e_i = e_i
        self.on_unital = [[Fraction(0)] + [omega(b) for b in basis]] + \
            [[omega(basis[i])] + self.on_algebra[i] for i in range(n)]
        self.on_kernel = [[omega(N.multiply(k, l)) for l in form.kernel] for k in form.kernel]
        self.det_algebra = linalg.determinant(self.on_algebra)
        self.det_unital = linalg.determinant(self.on_unital)
        self.det_kernel = linalg.determinant(self.on_kernel)
        self.radical = linalg.nullspace(self.on_kernel, len(form.kernel)) if self.on_kernel else []

    @property
    def is_degenerate(self):
        return not self.det_kernel

    @property
    def matrix(self):
        return self.on_kernel

    def __repr__(self):
        return 'GramReport(det kernel={0}, det N0={1})'.format(self.det_kernel, self.det_unital)


def gram_b_pi(form):
    report = GramReport(form)
    if report.is_degenerate:
        log.warning('b_pi is degenerate; radical %s', report.radical)
    return report


def hypersurface_function(form, variables = None):
    """f(u) = omega(exp(u) - 1) as a polynomial in the N coordinates u1..uN"""
    N = form.algebra
    variables = variables or coordinate_variables('u', N.dimension)
    u = [Polynomial.variable(variables, i) for i in range(N.dimension)]
    return form.value_poly(exp_map(N, u, Polynomial.zero(variables)), variables)


def defining_poly_S(form, variables = None):
    """omega(exp_1(2u)); its zero set is S_pi"""
    N = form.algebra
    variables = variables or coordinate_variables('u', N.dimension)
    u = [Polynomial.variable(variables, i) * 2 for i in range(N.dimension)]
    return form.value_poly(exp_map(N, u, Polynomial.zero(variables)), variables)


def graph_map(form):
    """
    Matrix of (x0, x1..xn) -> -(x0/2) a0/omega(a0) + sum (x_alpha/2) k_alpha, taking
    the graph x0 = P(x) onto S_pi.
    """
    s = form.scale
    cols = [[-a / (2 * s) for a in form.annihilator]] + [[c / 2 for c in k] for k in form.kernel]
    return linalg.columns(cols)


def translation_covector(form, other):
    """
    The element c of ker omega with other(v) = omega((1 + c) v) for all v.
    """
    if form.algebra is not other.algebra and form.algebra.dimension != other.algebra.dimension:
        raise DimensionMismatch(form.algebra.dimension, other.algebra.dimension, 'algebra dimension')
    a0 = form.annihilator
    if form.value(a0) != other.value(a0):
        raise NormalizationMismatch(form.value(a0), other.value(a0))
    N = form.algebra
    gram = [[form.value(N.multiply(k, l)) for l in form.kernel] for k in form.kernel]
    rhs = [other.value(k) - form.value(k) for k in form.kernel]
    coefficients = linalg.solve(gram, rhs, 'kernel Gram matrix')
    c = N.zero()
    for t, k in zip(coefficients, form.kernel):
        c = [a + t * b for a, b in zip(c, k)]
    return c


def translation_between(form, other, verify = True):
    """
    The element a with S_other = S_form + a, i.e.
    other(exp_1(2u)) = omega(exp_1(2(u - a))).

    Args:
    ```
        form (AdmissibleForm): the reference form
        other (AdmissibleForm): a form on the same algebra agreeing with `form` on Ann(N)
    ```

    Returns:
    ```
        list of Fraction
    ```
    """
    N = form.algebra
    c = translation_covector(form, other)
    a = [x * Fraction(-1, 2) for x in log_map(N, c)]
    if verify:
        variables = coordinate_variables('u', N.dimension)
        zero = Polynomial.zero(variables)
        u = [Polynomial.variable(variables, i) for i in range(N.dimension)]
        shifted = [(x - s) * 2 for x, s in zip(u, a)]
        lhs = other.value_poly(exp_map(N, [x * 2 for x in u], zero), variables)
        rhs = form.value_poly(exp_map(N, shifted, zero), variables)
        if lhs != rhs:
            raise InternalInconsistency("translation identity failed: {0} != {1}".format(lhs, rhs))
    log.debug('translation between forms: c=%s a=%s', [str(x) for x in c], [str(x) for x in a])
    return a
