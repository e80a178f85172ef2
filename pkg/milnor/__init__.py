from milnor.configs import Config
from milnor.exactpoly import Polynomial, WeightSystem, parse, parse_list, find_weights
from milnor.groebner import MonomialOrdering, buchberger, standard_monomials
from milnor.algebra import (
    FiniteAlgebra, NilpotentAlgebra, Grading, algebra_from_table, maximal_ideal, milnor_algebra,
    tjurina_algebra, quotient_algebra, grading_from_weights
)
from milnor.forms import AdmissibleForm, default_form, grading_form, translation_between
from milnor.nilpoly import NilPolynomial, build_nilpolynomial, reconstruct_from_23, basis_from_monomials
from milnor.homogeneity import transport, xi_field
from milnor.equivalence import (
    EquivalenceCertificate, verify_certificate, certificate_from_iso, induced_certificate, fingerprint,
    monomial_search, classify_small
)

__all__ = [
    'Milnor', 'Config', 'Polynomial', 'WeightSystem', 'parse', 'parse_list', 'find_weights',
    'MonomialOrdering', 'buchberger', 'standard_monomials', 'FiniteAlgebra', 'NilpotentAlgebra', 'Grading',
    'algebra_from_table', 'maximal_ideal', 'milnor_algebra', 'tjurina_algebra', 'quotient_algebra',
    'grading_from_weights', 'AdmissibleForm', 'default_form', 'grading_form', 'translation_between',
    'NilPolynomial', 'build_nilpolynomial', 'reconstruct_from_23', 'basis_from_monomials', 'transport',
    'xi_field', 'EquivalenceCertificate', 'verify_certificate', 'certificate_from_iso', 'induced_certificate',
    'fingerprint', 'monomial_search', 'classify_small'
]


class Milnor(object):
    """
    Top level object: the pipeline from a germ to its nil-polynomial under
    one configuration.

    Examples:
    ```python
        m = Milnor()
        f = parse("z1^4 + z2^2", ('z1', 'z2'))
        P = m.nilpolynomial(f)
        str(P)  # '1/2*x1^2'
    ```
    """
    def __init__(self, config = None):
        self.config = config or Config.from_env()

    def algebra(self, f, tjurina = False, local = False, ordering = None):
        """
        The Milnor (or Tjurina) algebra of f, with its maximal ideal graded
        by the weights of f when f is quasi-homogeneous.

        Args:
        ```
            f (Polynomial): the germ
            tjurina (bool): quotient by (f, J(f)) instead of J(f)
            local (bool): local algebra at the origin
        ```

        Returns:
        ```
            (FiniteAlgebra, NilpotentAlgebra): the unital algebra and its maximal ideal
        ```
        """
        build = tjurina_algebra if tjurina else milnor_algebra
        A = build(f, ordering, local, self.config.max_local_power)
        N = maximal_ideal(A)
        w = find_weights(f)
        if w is not None:
            N = grading_from_weights(N, w)
        return A, N

    def nilpolynomial(self, f, monomials = None, tjurina = False):
        A, N = self.algebra(f, tjurina)
        if monomials is not None:
            N = basis_from_monomials(A, monomials)
            w = find_weights(f)
            if w is not None:
                N = grading_from_weights(N, w)
        return build_nilpolynomial(default_form(N))

    def search(self, P, P_tilde):
        return monomial_search(P, P_tilde, self.config.search_lambdas)
