"""
Linear equivalence of nil-polynomials.

A certificate (c, C) states c * Ptilde(x) = P(Cx). Certificates are verified
exactly; they are produced from explicit germ maps, from algebra isomorphisms
(through translation and transport on the hypersurface S) or by a bounded
search over diagonal scalings.
"""
import itertools
import logging
from fractions import Fraction

from milnor import linalg
from milnor.algebra import grading_from_weights
from milnor.configs import DEFAULTS
from milnor.errors import (
    CertificateError, DimensionMismatch, InternalInconsistency, NotAnIsomorphism, NoGrading,
    NotGermEquivalence, OutOfRange, NotAdmissible, PreconditionFailed, SingularMatrix, GradingViolated,
    ParseException
)
from milnor.exactpoly import rational, substitute_linear, find_weights
from milnor.forms import AdmissibleForm, default_form, grading_form, graph_map, translation_between
from milnor.homogeneity import transport
from milnor.nilpoly import build_nilpolynomial

log = logging.getLogger(__name__)

CONVENTION = 'c*Ptilde(x)=P(Cx)'


class EquivalenceCertificate(object):
    """
    Args:
    ```
        c (Fraction): nonzero scalar
        C (list of rows): invertible n x n matrix
    ```
    """
    def __init__(self, c, C):
        self.c = rational(c)
        self.C = [[rational(x) for x in row] for row in C]
        n = len(self.C)
        if any(len(row) != n for row in self.C):
            raise DimensionMismatch(n, [len(row) for row in self.C], 'certificate matrix shape')
        if not self.c:
            raise CertificateError("certificate scalar is zero")
        if n and not linalg.determinant(self.C):
            raise CertificateError("certificate matrix is singular")

    @classmethod
    def identity(cls, n, c = 1):
        return cls(c, linalg.identity(n))

    @property
    def n(self):
        return len(self.C)

    def compose(self, other):
        """(c, C) for (P, Ptilde) and (c', C') for (Ptilde, Phat) give (cc', CC') for (P, Phat)"""
        if other.n != self.n:
            raise DimensionMismatch(self.n, other.n, 'certificate size')
        return EquivalenceCertificate(self.c * other.c, linalg.matmul(self.C, other.C))

    def inverse(self):
        """Certificate for the swapped pair"""
        return EquivalenceCertificate(1 / self.c, linalg.inverse(self.C, 'certificate matrix'))

    def reciprocal(self):
        return EquivalenceCertificate(1 / self.c, self.C)

    def to_json(self):
        return {
            'c': str(self.c),
            'C': [[str(x) for x in row] for row in self.C],
            'convention': CONVENTION
        }

    @classmethod
    def from_json(cls, body):
        convention = body.get('convention', CONVENTION)
        if convention != CONVENTION:
            raise ParseException("unknown certificate convention", convention)
        try:
            return cls(body['c'], body['C'])
        except (KeyError, TypeError) as e:
            raise ParseException("malformed certificate file: {0}".format(e))

    def __eq__(self, other):
        return isinstance(other, EquivalenceCertificate) and self.c == other.c and self.C == other.C

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return 'EquivalenceCertificate(c={0}, C={1})'.format(self.c, [[str(x) for x in row] for row in self.C])


class VerificationReport(object):
    def __init__(self, per_degree, full):
        self.per_degree = per_degree
        self.full = full
        self.low_degree = all(ok for l, ok in per_degree.items() if l in (2, 3))

    @property
    def consistent(self):
        return self.low_degree == self.full

    def __bool__(self):
        return self.full

    def to_json(self):
        return {
            'verified': self.full,
            'degrees_2_3': self.low_degree,
            'per_degree': {str(l): ok for l, ok in sorted(self.per_degree.items())},
            'consistent': self.consistent
        }

    def __repr__(self):
        return 'VerificationReport(full={0}, low_degree={1})'.format(self.full, self.low_degree)


def verify_certificate(P, P_tilde, certificate):
    """
    Check c * Ptilde(x) = P(Cx) exactly, degree by degree.

    Returns:
    ```
        VerificationReport, truthy when the full identity holds
    ```
    """
    if P.n != P_tilde.n:
        raise DimensionMismatch(P.n, P_tilde.n, 'variable count')
    if certificate.n != P.n:
        raise DimensionMismatch(P.n, certificate.n, 'certificate size')
    if P.variables != P_tilde.variables:
        P_tilde_components = {l: p.with_variables(P.variables) for l, p in P_tilde.components.items()}
    else:
        P_tilde_components = P_tilde.components
    degrees = sorted(set(P.components) | set(P_tilde_components) | {2, 3})
    per_degree = {}
    for l in degrees:
        lhs = P_tilde_components.get(l)
        lhs = lhs * certificate.c if lhs is not None else P.component(l) * 0
        rhs = substitute_linear(P.component(l), certificate.C)
        per_degree[l] = lhs == rhs
    report = VerificationReport(per_degree, all(per_degree.values()))
    if not report.consistent:
        log.warning('degree 2/3 check disagrees with the full check: %s', report.to_json())
    return report


class Fingerprint(object):
    def __init__(self, dimension, nil_index, chain, degrees):
        self.dimension = dimension
        self.nil_index = nil_index
        self.chain = tuple(chain)
        self.degrees = tuple(degrees)

    def _key(self):
        return (self.dimension, self.nil_index, self.chain, self.degrees)

    def __eq__(self, other):
        return isinstance(other, Fingerprint) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def to_json(self):
        return {
            'dimension': self.dimension,
            'nil_index': self.nil_index,
            'chain': list(self.chain),
            'degrees': list(self.degrees)
        }

    def __repr__(self):
        return 'Fingerprint({0}, {1}, {2}, degrees={3})'.format(
            self.dimension, self.nil_index, self.chain, self.degrees
        )


def fingerprint(N, P = None):
    """Isomorphism invariants of N; the degree list comes from P, built with the default form if absent"""
    if not N.is_admissible:
        raise NotAdmissible(N.dim_ann)
    if P is None:
        P = build_nilpolynomial(default_form(N))
    return Fingerprint(N.dimension, N.nil_index, N.hilbert_chain, P.degrees)


def separate(first, second):
    """'distinct' when the fingerprints differ; equality proves nothing"""
    return 'distinct' if first != second else 'inconclusive'


def _check_isomorphism(L, N, N_tilde):
    n = N.dimension
    if N_tilde.dimension != n or len(L) != n or any(len(row) != n for row in L):
        raise NotAnIsomorphism("dimensions {0} and {1}".format(n, N_tilde.dimension))
    if not linalg.determinant(L):
        raise NotAnIsomorphism("the map is singular")
    images = linalg.transpose(L)
    for i in range(n):
        for j in range(i, n):
            lhs = linalg.matvec(L, N.product(i, j))
            rhs = N_tilde.multiply(images[i], images[j])
            if lhs != rhs:
                raise NotAnIsomorphism("L(e{0} e{1}) != L(e{0}) L(e{1})".format(i, j))


def _linear_part_of_transport(N, s, grading):
    if not any(s):
        return linalg.identity(N.dimension)
    return transport(N, s, grading = grading).linear_part


def _certificate_with_grading(L, form, form_tilde, grading):
    N = form.algebra
    N_tilde = form_tilde.algebra
    n = N.dimension
    L_inverse = linalg.inverse(L, 'algebra isomorphism')

    # pull the tilde form back to N
    omega_pulled = [linalg.dot(form_tilde.omega, col) for col in linalg.transpose(L)]
    kernel_pulled = [linalg.matvec(L_inverse, k) for k in form_tilde.kernel]
    a0 = N.basis_vector(grading.components(grading.top_degree)[0])
    pulled = AdmissibleForm(N, omega_pulled, a0, kernel_pulled)
    own = form.with_annihilator(a0)
    kappa = pulled.value(a0)
    scale = own.value(a0)
    pulled_n = pulled.normalized()
    own_n = own.normalized()

    a = translation_between(own_n, pulled_n)
    log.info('certificate: translation %s', [str(x) for x in a])
    if any(a):
        a_g = translation_between(grading_form(N, grading), own_n)
        start = [-2 * x for x in a_g]
        end = [-2 * (x + y) for x, y in zip(a, a_g)]
        A1 = _linear_part_of_transport(N, start, grading)
        A2 = _linear_part_of_transport(N, end, grading)
        T = linalg.matmul(A2, linalg.inverse(A1, 'transport'))
    else:
        T = linalg.identity(n)

    graph = graph_map(own_n)
    graph_pulled = graph_map(pulled_n)
    M = linalg.matmul(linalg.inverse(graph_pulled, 'graph map'), linalg.matmul(T, graph))
    if any(M[0][1:]) or any(row[0] for row in M[1:]):
        raise InternalInconsistency("graph map is not block diagonal: {0}".format(
            [[str(x) for x in row] for row in M]
        ))
    k = M[0][0]
    C_prime = [row[1:] for row in M[1:]]
    K = kappa * k / scale
    log.debug('certificate: k=%s kappa=%s omega(a0)=%s', k, kappa, scale)
    return EquivalenceCertificate(1 / K, linalg.inverse(C_prime, 'graph block') if C_prime else [])


def certificate_from_iso(L, form, form_tilde, grading = None, P = None, P_tilde = None):
    """
    Certificate between the nil-polynomials of `form` and `form_tilde` from an
    algebra isomorphism L: N -> Ntilde (a matrix in the two bases).

    Args:
    ```
        L (list of rows): the isomorphism, columns are images of the basis of N
        form (AdmissibleForm): form on N
        form_tilde (AdmissibleForm): form on Ntilde
        grading (Grading): grading of N; otherwise N's or Ntilde's own grading is used
    ```

    Returns:
    ```
        EquivalenceCertificate with c * Ptilde(x) = P(Cx)
    ```
    """
    N = form.algebra
    N_tilde = form_tilde.algebra
    _check_isomorphism(L, N, N_tilde)
    grading = grading or N.grading
    if grading is not None:
        certificate = _certificate_with_grading(L, form, form_tilde, grading)
    elif N_tilde.grading is not None:
        log.info('certificate: using the grading of the target algebra')
        certificate = _certificate_with_grading(
            linalg.inverse(L, 'algebra isomorphism'), form_tilde, form, N_tilde.grading
        ).inverse()
    else:
        raise NoGrading()

    P = P or build_nilpolynomial(form)
    P_tilde = P_tilde or build_nilpolynomial(form_tilde)
    if verify_certificate(P, P_tilde, certificate):
        return certificate
    flipped = certificate.reciprocal()
    if verify_certificate(P, P_tilde, flipped):
        log.warning('certificate verified only with the reciprocal scalar %s', flipped.c)
        return flipped
    raise CertificateError("assembled certificate does not verify: {0!r}".format(certificate))


def pullback_matrix(psi, N, N_tilde):
    """
    Matrix of [g] -> [g o psi] from Ntilde to N; psi is a list of image
    polynomials (the new coordinates in terms of the old ones).
    """
    if N_tilde.representatives is None:
        raise PreconditionFailed("the target algebra has no polynomial representatives")
    columns = []
    for rep in N_tilde.representatives:
        columns.append(N.coordinates(rep.compose(psi)))
    return linalg.columns(columns)


def _grading_for(N, f):
    if N.grading is not None:
        return N.grading
    w = find_weights(f)
    if w is None:
        return None
    try:
        return grading_from_weights(N, w).grading
    except (PreconditionFailed, GradingViolated):
        return None


def induced_certificate(psi, f, f_tilde, form, form_tilde):
    """
    Certificate induced by a germ map psi with f_tilde o psi = r f.

    Args:
    ```
        psi (list of Polynomial): images of the coordinates, over f's variables
        f (Polynomial): the germ of the source
        f_tilde (Polynomial): the germ of the target
        form (AdmissibleForm): form on the maximal ideal of f's algebra
        form_tilde (AdmissibleForm): form on the maximal ideal of f_tilde's algebra
    ```
    """
    composed = f_tilde.with_variables(f.variables).compose(psi) if f_tilde.variables != f.variables \
        else f_tilde.compose(psi)
    m = next(iter(f.terms))
    r = composed.coefficient(m) / f.coefficient(m)
    if not r or composed != f * r:
        raise NotGermEquivalence()
    log.info('germ map scales f by %s', r)
    N = form.algebra
    N_tilde = form_tilde.algebra
    pullback = pullback_matrix(psi, N, N_tilde)
    try:
        L = linalg.inverse(pullback, 'induced map')
    except SingularMatrix:
        raise InternalInconsistency("induced map not invertible")
    grading = _grading_for(N, f)
    if grading is None and _grading_for(N_tilde, f_tilde) is None:
        raise NoGrading()
    return certificate_from_iso(L, form, form_tilde, grading)


CLASS_LABELS = ('0', 'x1^2', 'x1x2+x1^3', 'x1x2')


def classify_small(N):
    """Label of the linear equivalence class of nil-polynomials for dim N <= 3"""
    if not N.is_admissible:
        raise NotAdmissible(N.dim_ann)
    if N.dimension == 1:
        return '0'
    if N.dimension == 2:
        return 'x1^2'
    if N.dimension == 3:
        return 'x1x2+x1^3' if N.nil_index == 3 else 'x1x2'
    raise OutOfRange("dimension out of range: dim N = {0}, classification covers dim N <= 3".format(N.dimension))


def default_patterns(n):
    if n <= 4:
        return list(itertools.product((0, 1), repeat = n))
    return [(0,) * n, (1,) * n]


def monomial_search(P, P_tilde, lambdas = None, patterns = None):
    """
    Try C = diag(lambda^w_1, ..., lambda^w_n) for the given weight patterns and
    scalars, with c read off one coefficient. Returns a verified certificate or
    None; None proves nothing.
    """
    if P.n != P_tilde.n:
        raise DimensionMismatch(P.n, P_tilde.n, 'variable count')
    target = P_tilde.polynomial.with_variables(P.variables)
    if target.is_zero():
        if P.polynomial.is_zero():
            return EquivalenceCertificate.identity(P.n)
        return None
    anchor = target.monomials()[0]
    lambdas = lambdas or DEFAULTS['search_lambdas']
    patterns = patterns or default_patterns(P.n)
    tried = 0
    for lam in lambdas:
        for pattern in patterns:
            C = [[lam ** w if i == j else Fraction(0) for j, w in enumerate(pattern)] for i in range(P.n)]
            image = substitute_linear(P.polynomial, C)
            c = image.coefficient(anchor) / target.coefficient(anchor)
            tried += 1
            if not c or image != target * c:
                continue
            certificate = EquivalenceCertificate(c, C)
            if verify_certificate(P, P_tilde, certificate):
                log.info('monomial search: found after %s candidates', tried)
                return certificate
    log.info('monomial search: nothing among %s candidates', tried)
    return None
