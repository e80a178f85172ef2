"""
Finite dimensional commutative algebras given by structure constants.

`FiniteAlgebra` stores e_i * e_j = sum_k c_ij^k e_k sparsely and validates
commutativity and associativity on construction. `NilpotentAlgebra` adds the
power chain N^1 > N^2 > ..., the nil-index and the annihilator, all computed
eagerly. Algebras that come from a polynomial quotient remember their Groebner
basis so that any polynomial can be mapped to coordinates.
"""
import itertools
import logging
from fractions import Fraction

from milnor import linalg
from milnor.errors import (
    NotCommutative, NotAssociative, NotNilpotent, NotLocal, NonIsolatedSingularity,
    QuotientNotLocal, SmoothPoint, GradingViolated, NotAdmissible, DimensionMismatch, PreconditionFailed,
    PropertyFailure, ParseException
)
from milnor.exactpoly import Polynomial, WeightSystem, format_monomial, gradient, rational
from milnor.groebner import (
    MonomialOrdering, buchberger, standard_monomials, non_nilpotent_variables
)

log = logging.getLogger(__name__)

# Local truncation gives up after this power of the maximal ideal unless told otherwise
MAX_LOCAL_POWER = 32


class QuotientData(object):
    """Groebner basis and standard monomials of the polynomial quotient an algebra came from"""
    def __init__(self, gb, monomials):
        self.gb = gb
        self.monomials = monomials
        self.variables = gb.variables

    def standard_coordinates(self, poly):
        nf = self.gb.normal_form(poly)
        return [nf.coefficient(m) for m in self.monomials]


def _sparse(vector):
    return tuple((k, c) for k, c in enumerate(vector) if c)


class FiniteAlgebra(object):
    """
    Args:
    ```
        labels (list of str): one label per basis element
        products (dict): (i, j) -> vector of length dim (or {k: coeff}); missing pairs are zero
        unital (bool): whether basis element 0 is the unit
    ```
    """
    def __init__(self, labels, products, unital = False, quotient = None,
                 from_standard = None, representatives = None, grading_degrees = None):
        self.labels = list(labels)
        self.dimension = len(self.labels)
        self.unital = unital
        self.quotient = quotient
        self._from_standard = from_standard
        self.representatives = representatives
        self.grading_degrees = grading_degrees
        self._table = self._build_table(products)
        self._validate()

    def _build_table(self, products):
        n = self.dimension
        table = [[() for _ in range(n)] for _ in range(n)]
        seen = {}
        for (i, j), value in products.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionMismatch(n, (i, j), 'basis index')
            if isinstance(value, dict):
                vector = [Fraction(0)] * n
                for k, c in value.items():
                    if not 0 <= k < n:
                        raise DimensionMismatch(n, k, 'basis index')
                    vector[k] = rational(c)
            else:
                if len(value) != n:
                    raise DimensionMismatch(n, len(value), 'product vector length')
                vector = [rational(c) for c in value]
            seen[(i, j)] = vector
        for (i, j), vector in seen.items():
            other = seen.get((j, i))
            if other is not None and other != vector:
                k = next(k for k in range(n) if other[k] != vector[k])
                raise NotCommutative(i, j, k)
            entries = _sparse(vector)
            table[i][j] = entries
            table[j][i] = entries
        return table

    def _validate(self):
        n = self.dimension
        basis = [self.basis_vector(i) for i in range(n)]
        for i, j, l in itertools.product(range(n), repeat = 3):
            if j < i:
                continue
            left = self.multiply(self.product(i, j), basis[l])
            right = self.multiply(basis[i], self.product(j, l))
            if left != right:
                raise NotAssociative(i, j, l)
        if self.unital:
            for i in range(n):
                if self.product(0, i) != basis[i]:
                    raise PropertyFailure("basis element 0 is not a unit: e0 * e{0} != e{0}".format(i))

    def basis_vector(self, i):
        v = [Fraction(0)] * self.dimension
        v[i] = Fraction(1)
        return v

    def zero(self):
        return [Fraction(0)] * self.dimension

    def product(self, i, j):
        v = [Fraction(0)] * self.dimension
        for k, c in self._table[i][j]:
            v[k] = c
        return v

    def structure_constants(self, i, j):
        return self._table[i][j]

    def multiply(self, u, v, zero = None):
        """
        Product of two elements given by coordinates. Coordinates may be
        Fractions or anything else supporting + and * (e.g. Polynomials), in
        which case pass the additive identity as `zero`.
        """
        if zero is None:
            zero = Fraction(0)
        out = [zero] * self.dimension
        for i, a in enumerate(u):
            if not a:
                continue
            row = self._table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                entries = row[j]
                if not entries:
                    continue
                ab = a * b
                for k, c in entries:
                    out[k] = out[k] + ab * c
        return out

    def power(self, u, k, zero = None):
        result = u
        for _ in range(k - 1):
            result = self.multiply(result, u, zero)
        return result

    def left_operator(self, u):
        """Matrix of v -> u*v"""
        cols = [self.multiply(u, self.basis_vector(j)) for j in range(self.dimension)]
        return linalg.columns(cols)

    def products(self):
        return {(i, j): self.product(i, j)
                for i in range(self.dimension) for j in range(i, self.dimension)
                if self._table[i][j]}

    def coordinates(self, poly):
        """Coordinates of the residue class of `poly` (quotient algebras only)"""
        if self.quotient is None:
            raise PreconditionFailed("algebra does not come from a polynomial quotient")
        std = self.quotient.standard_coordinates(poly)
        if self._from_standard is None:
            return std
        return linalg.matvec(self._from_standard, std)

    def change_basis(self, M, labels = None, representatives = None):
        """
        Re-express the algebra in the basis given by the columns of M
        (old coordinates).
        """
        n = self.dimension
        if len(M) != n or any(len(row) != n for row in M):
            raise DimensionMismatch(n, len(M), 'change of basis size')
        inverse = linalg.inverse(M, 'change of basis')
        new_basis = linalg.transpose(M)
        products = {}
        for i in range(n):
            for j in range(i, n):
                p = self.multiply(new_basis[i], new_basis[j])
                if any(p):
                    products[(i, j)] = linalg.matvec(inverse, p)
        from_standard = None
        if self.quotient is not None:
            base = self._from_standard if self._from_standard is not None else linalg.identity(n)
            from_standard = linalg.matmul(inverse, base)
        return self._rebuilt(labels or ['b{0}'.format(i) for i in range(n)], products,
                             from_standard, representatives)

    def _rebuilt(self, labels, products, from_standard, representatives):
        return FiniteAlgebra(labels, products, unital = self.unital, quotient = self.quotient,
                             from_standard = from_standard, representatives = representatives)

    def to_json(self):
        table = []
        for i in range(self.dimension):
            for j in range(i, self.dimension):
                entries = self._table[i][j]
                if entries:
                    table.append({
                        'i': i,
                        'j': j,
                        'products': [{'k': k, 'coeff': str(c)} for k, c in entries]
                    })
        body = {
            'dim': self.dimension,
            'unital': self.unital,
            'basis': self.labels,
            'table': table
        }
        if self.grading_degrees is not None:
            body['grading'] = list(self.grading_degrees)
        return body

    @classmethod
    def from_json(cls, body):
        try:
            dim = int(body['dim'])
            labels = body.get('basis') or ['e{0}'.format(i + 1) for i in range(dim)]
            constants = {}
            for entry in body.get('table', []):
                i, j = int(entry['i']), int(entry['j'])
                constants[(i, j)] = {int(p['k']): rational(p['coeff']) for p in entry['products']}
            unital = bool(body.get('unital', False))
            grading = body.get('grading')
        except (KeyError, TypeError, ValueError) as e:
            raise ParseException("malformed algebra file: {0}".format(e))
        return algebra_from_table(dim, labels, constants, unital, grading)

    def __repr__(self):
        return '{0}(dim={1}, basis={2})'.format(self.__class__.__name__, self.dimension, self.labels)


class NilpotentAlgebra(FiniteAlgebra):
    """
    A nilpotent commutative algebra N. On construction it computes the power
    chain N^j (each as an echelon basis), the nil-index nu and Ann(N).
    """
    def __init__(self, labels, products, quotient = None, from_standard = None,
                 representatives = None, grading_degrees = None, parent = None):
        super(NilpotentAlgebra, self).__init__(
            labels, products, unital = False, quotient = quotient, from_standard = from_standard,
            representatives = representatives, grading_degrees = grading_degrees
        )
        self.parent = parent
        self.chain = self._power_chain()
        self.nil_index = len(self.chain)
        self.annihilator = self._annihilator()
        self.grading = None
        if grading_degrees is not None:
            self.grading = Grading(self, grading_degrees)

    def _power_chain(self):
        n = self.dimension
        if not n:
            return []
        current = linalg.identity(n)
        chain = []
        while current:
            chain.append(current)
            if len(chain) > n:
                raise NotNilpotent("power chain does not vanish")
            products = [self.multiply(self.basis_vector(i), v) for i in range(n) for v in current]
            current = linalg.row_basis(products, n)
        return chain

    def _annihilator(self):
        n = self.dimension
        if not n:
            return []
        rows = []
        for i in range(n):
            operator = self.left_operator(self.basis_vector(i))
            rows.extend(row for row in operator if any(row))
        return linalg.nullspace(rows, n)

    def coordinates(self, poly):
        if self.quotient is None:
            raise PreconditionFailed("algebra does not come from a polynomial quotient")
        std = self.quotient.standard_coordinates(poly)
        if std and std[0]:
            raise PreconditionFailed("{0} is not in the maximal ideal".format(poly))
        return linalg.matvec(self._from_standard, std)

    def graded(self, degrees):
        """A copy of this algebra carrying the grading `degrees`"""
        return NilpotentAlgebra(self.labels, self.products(), quotient = self.quotient,
                                from_standard = self._from_standard, representatives = self.representatives,
                                grading_degrees = list(degrees), parent = self.parent)

    def _rebuilt(self, labels, products, from_standard, representatives):
        return NilpotentAlgebra(labels, products, quotient = self.quotient, from_standard = from_standard,
                                representatives = representatives, parent = self.parent)

    @property
    def hilbert_chain(self):
        return [len(basis) for basis in self.chain]

    @property
    def dim_ann(self):
        return len(self.annihilator)

    @property
    def is_admissible(self):
        return self.dim_ann == 1

    def power_space(self, j):
        """Echelon basis of N^j; empty beyond the nil-index"""
        if j < 1:
            raise ValueError('Powers start at 1, got %s' % j)
        return self.chain[j - 1] if j <= self.nil_index else []

    def check_power_closure(self):
        """N^j * N^m is contained in N^(j+m) for all j + m <= nu + 1"""
        for j in range(1, self.nil_index + 1):
            for m in range(1, self.nil_index + 2 - j):
                target = self.power_space(j + m)
                for u in self.power_space(j):
                    for v in self.power_space(m):
                        if not linalg.in_span(target, self.multiply(u, v)):
                            return False
        return True

    def annihilator_generator(self):
        if not self.is_admissible:
            raise NotAdmissible(self.dim_ann)
        return self.annihilator[0]


class Grading(object):
    """
    Positive integer degrees attached to the basis elements of a nilpotent
    algebra, with N_j N_m inside N_(j+m) checked on every basis pair.
    """
    def __init__(self, algebra, degrees):
        degrees = [int(d) for d in degrees]
        if len(degrees) != algebra.dimension:
            raise DimensionMismatch(algebra.dimension, len(degrees), 'grading length')
        if any(d <= 0 for d in degrees):
            raise ParseException("grading degrees must be positive", str(degrees))
        self.algebra = algebra
        self.degrees = degrees
        self.top_degree = max(degrees) if degrees else 0
        n = algebra.dimension
        for i in range(n):
            for j in range(i, n):
                for k, _ in algebra.structure_constants(i, j):
                    if degrees[k] != degrees[i] + degrees[j]:
                        raise GradingViolated(i, j)
        if algebra.is_admissible:
            a0 = algebra.annihilator[0]
            top = self.components(self.top_degree)
            if len(top) != 1 or any(c for k, c in enumerate(a0) if k not in top):
                raise PropertyFailure("grading violated: Ann(N) is not the top degree component")

    def components(self, j):
        return [k for k, d in enumerate(self.degrees) if d == j]

    def degree_of(self, vector):
        """Degree of a homogeneous vector, None when inhomogeneous or zero"""
        degrees = set(self.degrees[k] for k, c in enumerate(vector) if c)
        if len(degrees) != 1:
            return None
        return degrees.pop()

    def split(self, vector):
        """dict degree -> component"""
        parts = {}
        for k, c in enumerate(vector):
            if c:
                parts.setdefault(self.degrees[k], [Fraction(0)] * len(vector))[k] = c
        return parts

    def __repr__(self):
        return 'Grading({0}, d={1})'.format(self.degrees, self.top_degree)


def algebra_from_table(dimension, labels, constants, unital = False, grading = None):
    """
    Build and validate an algebra from explicit structure constants.

    Args:
    ```
        dimension (int): number of basis elements
        labels (list of str): basis labels
        constants (dict): (i, j) -> {k: coeff} or a vector; the (j, i) entry is implied
        unital (bool): basis element 0 is the unit
        grading (list of int): optional degrees, kept for the maximal ideal
    ```
    """
    if len(labels) != dimension:
        raise DimensionMismatch(dimension, len(labels), 'label count')
    return FiniteAlgebra(labels, constants, unital = unital, grading_degrees = grading)


def as_nilpotent(A):
    """The maximal ideal of a unital algebra, or the algebra itself re-checked as nilpotent"""
    if isinstance(A, NilpotentAlgebra):
        return A
    if A.unital:
        return maximal_ideal(A)
    return NilpotentAlgebra(A.labels, A.products(), quotient = A.quotient,
                            from_standard = A._from_standard, representatives = A.representatives,
                            grading_degrees = A.grading_degrees)


def maximal_ideal(A):
    """
    The ideal spanned by the non-unit basis elements of a local unital algebra.
    """
    if not A.unital:
        raise PreconditionFailed("maximal_ideal needs a unital algebra")
    n = A.dimension
    products = {}
    for i in range(1, n):
        for j in range(i, n):
            p = A.product(i, j)
            if p[0]:
                raise NotLocal("not local: e{0} * e{1} has a unit component".format(i, j))
            if any(p):
                products[(i - 1, j - 1)] = p[1:]
    from_standard = None
    if A.quotient is not None:
        base = A._from_standard if A._from_standard is not None else linalg.identity(n)
        from_standard = base[1:]
    representatives = A.representatives[1:] if A.representatives is not None else None
    grading = A.grading_degrees[1:] if A.grading_degrees is not None else None
    try:
        N = NilpotentAlgebra(A.labels[1:], products, quotient = A.quotient, from_standard = from_standard,
                             representatives = representatives, grading_degrees = grading, parent = A)
    except NotNilpotent:
        raise NotLocal("not local: the non-unit basis elements are not nilpotent")
    log.info('maximal ideal: dim %s, nil-index %s, dim Ann %s', N.dimension, N.nil_index, N.dim_ann)
    return N


def is_admissible(N):
    if not N.is_admissible:
        return False
    if not linalg.same_span(N.power_space(N.nil_index), N.annihilator):
        raise PropertyFailure("admissible algebra with N^nu != Ann(N)")
    return True


def hilbert_chain(N):
    return N.hilbert_chain


def _monomials_of_degree(variables, k):
    n = len(variables)
    out = []
    for combo in itertools.combinations_with_replacement(range(n), k):
        m = [0] * n
        for i in combo:
            m[i] += 1
        out.append(Polynomial.monomial(variables, m))
    return out


def localize(generators, ordering, max_power = None):
    """
    Generators of the primary component at the origin: I + m^k for the first k
    with dim R/(I + m^k) = dim R/(I + m^(k+1)).
    """
    max_power = max_power or MAX_LOCAL_POWER
    variables = ordering.variables
    previous = None
    for k in range(1, max_power + 2):
        gens = list(generators) + _monomials_of_degree(variables, k)
        dim = len(standard_monomials(buchberger(gens, ordering)))
        log.debug('localize: k=%s dim=%s', k, dim)
        if previous is not None and previous[1] == dim:
            log.info('local quotient stabilised at m^%s, dimension %s', k - 1, dim)
            return previous[0]
        previous = (gens, dim)
    raise NonIsolatedSingularity("local dimension still growing at m^{0}".format(max_power))


def quotient_algebra(generators, ordering = None, local = False, max_local_power = None):
    """
    The unital algebra R/I on the standard monomials of I = (generators).

    Args:
    ```
        generators (list of Polynomial): ideal generators over a common variable list
        ordering (MonomialOrdering): defaults to graded-lex
        local (bool): compute the local algebra at the origin instead of the global quotient
    ```

    Returns:
    ```
        FiniteAlgebra (unital)
    ```
    """
    generators = [g for g in generators if g]
    if not generators:
        raise NonIsolatedSingularity("zero ideal")
    variables = generators[0].variables
    if ordering is None:
        ordering = MonomialOrdering(variables)
    if local:
        generators = localize(generators, ordering, max_local_power)
    gb = buchberger(generators, ordering)
    monomials = standard_monomials(gb)
    if monomials is None:
        raise NonIsolatedSingularity()
    if not monomials:
        raise PreconditionFailed("the ideal is the whole ring (the origin is not a point of V)")
    bad = non_nilpotent_variables(gb, len(monomials))
    if bad:
        raise QuotientNotLocal(bad[0])
    quotient = QuotientData(gb, monomials)
    index = {m: k for k, m in enumerate(monomials)}
    n = len(monomials)
    products = {}
    for i in range(n):
        for j in range(i, n):
            product = tuple(a + b for a, b in zip(monomials[i], monomials[j]))
            nf = gb.reduce_terms({product: Fraction(1)})
            if nf:
                products[(i, j)] = {index[m]: c for m, c in nf.items()}
    labels = [format_monomial(variables, m) for m in monomials]
    representatives = [Polynomial.monomial(variables, m) for m in monomials]
    log.info('quotient algebra of dimension %s over %s', n, ','.join(variables))
    return FiniteAlgebra(labels, products, unital = True, quotient = quotient,
                         representatives = representatives)


def _jacobian_generators(f):
    if f.is_zero():
        raise NonIsolatedSingularity("f = 0")
    if f.constant_term:
        raise PreconditionFailed("f(0) != 0: the origin is not on the hypersurface")
    partials = gradient(f)
    for name, p in zip(f.variables, partials):
        if p.constant_term:
            raise SmoothPoint(name)
    return partials


def milnor_algebra(f, ordering = None, local = False, max_local_power = None):
    partials = _jacobian_generators(f)
    if ordering is None:
        ordering = MonomialOrdering.for_polynomial(f)
    return quotient_algebra(partials, ordering, local, max_local_power)


def tjurina_algebra(f, ordering = None, local = False, max_local_power = None):
    partials = _jacobian_generators(f)
    if ordering is None:
        ordering = MonomialOrdering.for_polynomial(f)
    return quotient_algebra(partials + [f], ordering, local, max_local_power)


def grading_from_weights(N, w):
    """
    A copy of a quotient's nilpotent algebra graded by the weighted degrees of
    its monomial basis. `N` itself is left unchanged.
    """
    weights = w.weights if isinstance(w, WeightSystem) else tuple(w)
    if N.representatives is None or any(len(r) != 1 for r in N.representatives):
        raise PreconditionFailed("grading_from_weights needs a basis of monomials")
    degrees = []
    for r in N.representatives:
        m = next(iter(r.terms))
        degrees.append(sum(a * e for a, e in zip(weights, m)))
    return N.graded(degrees)
