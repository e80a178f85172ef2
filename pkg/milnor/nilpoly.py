"""
Nil-polynomials P = omega o exp_2 o phi of admissible algebras, their
quadratic and cubic coefficient tensors, and the identities they satisfy.
"""
import logging
from fractions import Fraction
from math import factorial

from milnor import linalg
from milnor.algebra import NilpotentAlgebra, maximal_ideal
from milnor.errors import NotABasis, NotAdmissible, DegenerateForm, SingularMatrix, PreconditionFailed
from milnor.exactpoly import Polynomial, format_monomial
from milnor.forms import coordinate_variables

log = logging.getLogger(__name__)


def _multinomial(m):
    out = factorial(sum(m))
    for e in m:
        out //= factorial(e)
    return out


def _exponents(variables, indices):
    m = [0] * len(variables)
    for i in indices:
        m[i] += 1
    return tuple(m)


class NilPolynomial(object):
    """
    A polynomial without constant and linear terms, kept split into its
    homogeneous components P^[l], with the Gram matrix g of P^[2] and the
    symmetric cubic tensor h of P^[3].

    Args:
    ```
        variables (tuple of str): x1..xn
        components (dict): degree -> homogeneous Polynomial
        provenance (dict): how the polynomial was produced
    ```
    """
    def __init__(self, variables, components, provenance = None):
        self.variables = tuple(variables)
        self.components = {}
        for l, p in sorted(components.items()):
            if p.variables != self.variables:
                raise PreconditionFailed("component of degree {0} is over {1}".format(l, p.variables))
            if p and not all(sum(m) == l for m in p.terms):
                raise PreconditionFailed("component of degree {0} is not homogeneous".format(l))
            if l < 2 and p:
                raise PreconditionFailed("nil-polynomials have no terms of degree below 2")
            if p:
                self.components[l] = p
        self.provenance = provenance or {}
        self.gram = self._gram()
        self._cubic = self.component(3)

    @classmethod
    def from_polynomial(cls, p, provenance = None):
        return cls(p.variables, p.components(), provenance)

    @property
    def n(self):
        return len(self.variables)

    @property
    def degree(self):
        return max(self.components) if self.components else -1

    @property
    def degrees(self):
        return sorted(self.components)

    @property
    def polynomial(self):
        total = Polynomial.zero(self.variables)
        for p in self.components.values():
            total = total + p
        return total

    def component(self, l):
        return self.components.get(l, Polynomial.zero(self.variables))

    def _gram(self):
        n = self.n
        P2 = self.component(2)
        g = linalg.zeros(n, n)
        for a in range(n):
            for b in range(n):
                c = P2.coefficient(_exponents(self.variables, (a, b)))
                g[a][b] = c if a == b else c / 2
        return g

    def cubic(self, a, b, c):
        """h_abc with P^[3](x) = sum h_abc x_a x_b x_c"""
        m = _exponents(self.variables, (a, b, c))
        return self._cubic.coefficient(m) / _multinomial(m)

    def cubic_form(self, x, y):
        """The vector h(x, y, .)"""
        n = self.n
        out = []
        for c in range(n):
            total = Fraction(0)
            for a in range(n):
                if not x[a]:
                    continue
                for b in range(n):
                    if y[b]:
                        total += self.cubic(a, b, c) * x[a] * y[b]
            out.append(total)
        return out

    def inverse_gram(self):
        det = linalg.determinant(self.gram)
        if not det:
            raise DegenerateForm("P^[2] is degenerate")
        return [[x / det for x in row] for row in linalg.adjugate(self.gram)] if self.n else []

    def __call__(self, x):
        return self.polynomial.evaluate(x)

    def __eq__(self, other):
        return isinstance(other, NilPolynomial) and \
            self.variables == other.variables and self.components == other.components

    def __ne__(self, other):
        return not self.__eq__(other)

    def __str__(self):
        return str(self.polynomial)

    def to_json(self):
        return {
            'variables': list(self.variables),
            'components': {str(l): p.to_json() for l, p in self.components.items()}
        }

    @classmethod
    def from_json(cls, body):
        variables = tuple(body['variables'])
        return cls(variables, {
            int(l): Polynomial.from_json(variables, pairs) for l, pairs in body['components'].items()
        })

    def __repr__(self):
        return 'NilPolynomial({0!r}, degrees={1})'.format(str(self), self.degrees)


def build_nilpolynomial(form):
    """
    P = omega(exp(phi(x)) - 1 - phi(x)) with phi(x) = sum x_alpha k_alpha over the
    form's ordered kernel basis.

    Args:
    ```
        form (AdmissibleForm): the form, with its kernel basis
    ```

    Returns:
    ```
        NilPolynomial over x1..xn
    ```
    """
    N = form.algebra
    if not N.is_admissible:
        raise NotAdmissible(N.dim_ann)
    variables = coordinate_variables('x', form.n)
    zero = Polynomial.zero(variables)
    phi = form.phi(variables)
    components = {}
    power = phi
    for l in range(2, N.nil_index + 1):
        power = N.multiply(power, phi, zero)
        components[l] = form.value_poly(power, variables) / factorial(l)
    P = NilPolynomial(variables, components, {
        'basis': N.labels,
        'form': form.to_json()
    })
    log.info('nil-polynomial with %s variables, degrees %s', P.n, P.degrees)
    return P


def multilinear_omega(P, l, vectors):
    """
    omega_l(x^1, ..., x^l): the coefficient of t1*...*tl in P^[l](sum t_i x^i).
    """
    if len(vectors) != l:
        raise ValueError('Expected %s vectors, got %s' % (l, len(vectors)))
    component = P.component(l)
    if not component:
        return Fraction(0)
    ts = coordinate_variables('t', l)
    images = []
    for alpha in range(P.n):
        images.append(Polynomial.linear(ts, [v[alpha] for v in vectors]))
    return component.compose(images).coefficient((1,) * l)


def w_product(P, x, y):
    """The vector x.y with omega_2(x.y, z) = omega_3(x, y, z) for all z"""
    inverse = P.inverse_gram()
    h = P.cubic_form(x, y)
    return [3 * v for v in linalg.matvec(inverse, h)]


def square_field(P2, P3):
    """x.x as polynomials: g^-1 grad P^[3]"""
    quadratic = NilPolynomial(P2.variables, {2: P2})
    inverse = quadratic.inverse_gram()
    gradient = [P3.diff(i) for i in range(P3.nvars)]
    out = []
    for row in inverse:
        total = Polynomial.zero(P3.variables)
        for c, dp in zip(row, gradient):
            if c:
                total = total + dp * c
        out.append(total)
    return out


def reconstruct_from_23(P2, P3, bound = None):
    """
    Rebuild all components from the quadratic and cubic ones through
    omega_(l+1)(x, ..., x) = omega_l(x.x, x, ..., x), i.e.
    P^[l+1] = D_(x.x) P^[l] / (l (l + 1)).
    """
    variables = P2.variables
    if P3.variables != variables:
        raise PreconditionFailed("P2 and P3 are over different variables")
    n = len(variables)
    bound = bound or n + 1
    square = square_field(P2, P3)
    components = {2: P2, 3: P3}
    current = P3
    l = 3
    while current and l < bound:
        derivative = Polynomial.zero(variables)
        for i, s in enumerate(square):
            if s:
                derivative = derivative + s * current.diff(i)
        current = derivative / (l * (l + 1))
        l += 1
        components[l] = current
    log.debug('reconstructed components up to degree %s', l)
    return NilPolynomial(variables, components, {'reconstructed_from': [2, 3]})


def blaschke_residual(P):
    """(sum_ab g^ab h_abc)_c with the inverse Gram taken as adj(g)/det(g)"""
    inverse = P.inverse_gram()
    n = P.n
    return [sum((inverse[a][b] * P.cubic(a, b, c) for a in range(n) for b in range(n)), Fraction(0))
            for c in range(n)]


def basis_from_monomials(A, monomials):
    """
    Re-express the maximal ideal of a quotient algebra in the basis given by
    the residues of `monomials` (Polynomials); the first one becomes e_0.
    """
    N = maximal_ideal(A) if A.unital else A
    if not isinstance(N, NilpotentAlgebra):
        raise PreconditionFailed("basis_from_monomials needs a nilpotent algebra")
    if len(monomials) != N.dimension:
        raise NotABasis(len(monomials), N.dimension)
    columns = [N.coordinates(m) for m in monomials]
    rank = linalg.rank(columns)
    if rank != N.dimension:
        raise NotABasis(rank, N.dimension)
    labels = [format_monomial(m.variables, next(iter(m.terms))) if len(m) == 1 else str(m) for m in monomials]
    try:
        rebased = N.change_basis(linalg.columns(columns), labels, list(monomials))
    except SingularMatrix:
        raise NotABasis(rank, N.dimension)
    log.info('re-based algebra on %s', ', '.join(labels))
    return rebased
