"""
Buchberger's algorithm over the rationals with weighted graded orderings.

The pair bookkeeping follows the Gebauer-Moeller style update used by sympy's
groebnertools; pairs are taken with the normal selection strategy (smallest
lcm first).
"""
import itertools
import logging

from milnor.errors import DimensionMismatch, PreconditionFailed, ParseException
from milnor.exactpoly import (
    Polynomial, find_weights,
    monomial_mul, monomial_div, monomial_lcm, monomial_divides
)

log = logging.getLogger(__name__)

GRADED_LEX = 'graded-lex'
WEIGHTED_GRADED_LEX = 'weighted-graded-lex'


class MonomialOrdering(object):
    """
    Weighted degree first, ties broken lexicographically along `precedence`
    (a list of variable indices, largest variable first). By default the last
    listed variable is the largest.

    Args:
    ```
        variables (tuple of str): the ambient variables
        weights (sequence of int): positive weights, or None for graded-lex
        precedence (sequence of str or int): variables from largest to smallest
    ```
    """
    def __init__(self, variables, weights = None, precedence = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        if weights is None:
            self.kind = GRADED_LEX
            self.weights = (1,) * n
        else:
            self.kind = WEIGHTED_GRADED_LEX
            self.weights = tuple(int(w) for w in weights)
            if len(self.weights) != n:
                raise DimensionMismatch(n, len(self.weights), 'weight vector length')
            if any(w <= 0 for w in self.weights):
                raise ParseException("weights must be positive", str(list(self.weights)))
        if precedence is None:
            precedence = list(reversed(range(n)))
        precedence = [self.variables.index(p) if isinstance(p, str) else int(p) for p in precedence]
        if sorted(precedence) != list(range(n)):
            raise ParseException("precedence must be a permutation of the variables", str(precedence))
        self.precedence = tuple(precedence)

    @classmethod
    def for_polynomial(cls, f, precedence = None):
        """Weighted ordering from find_weights(f) when f is quasi-homogeneous, graded-lex otherwise"""
        w = find_weights(f)
        if w is None:
            return cls(f.variables, precedence = precedence)
        return cls(f.variables, w.weights, precedence)

    def degree(self, m):
        return sum(w * e for w, e in zip(self.weights, m))

    def key(self, m):
        return (self.degree(m), tuple(m[i] for i in self.precedence))

    def leading_monomial(self, terms):
        return max(terms, key = self.key)

    def sort(self, monomials, reverse = False):
        return sorted(monomials, key = self.key, reverse = reverse)

    def to_json(self):
        return {
            'kind': self.kind,
            'weights': list(self.weights) if self.kind == WEIGHTED_GRADED_LEX else None,
            'precedence': [self.variables[i] for i in self.precedence]
        }

    @classmethod
    def from_json(cls, variables, body):
        return cls(variables, body.get('weights'), body.get('precedence'))

    def __eq__(self, other):
        return isinstance(other, MonomialOrdering) and \
            (self.variables, self.weights, self.precedence, self.kind) == \
            (other.variables, other.weights, other.precedence, other.kind)

    def __repr__(self):
        return 'MonomialOrdering({0}, weights={1}, precedence={2})'.format(
            self.kind, self.weights, '>'.join(self.variables[i] for i in self.precedence)
        )


def _monic(terms, lm):
    lc = terms[lm]
    if lc == 1:
        return terms
    return {m: c / lc for m, c in terms.items()}


def _reduce(terms, divisors, key):
    """
    Fully reduce `terms` by monic `divisors` (list of (lm, terms)), returning
    the remainder as a dict.
    """
    p = dict(terms)
    remainder = {}
    while p:
        m = max(p, key = key)
        c = p[m]
        for lm, g in divisors:
            q = monomial_div(m, lm)
            if q is None:
                continue
            for mg, cg in g.items():
                mm = monomial_mul(mg, q)
                value = p.get(mm, 0) - c * cg
                if value:
                    p[mm] = value
                else:
                    p.pop(mm, None)
            break
        else:
            remainder[m] = c
            del p[m]
    return remainder


def _spoly(f, g, fm, gm):
    lcm = monomial_lcm(fm, gm)
    uf = monomial_div(lcm, fm)
    ug = monomial_div(lcm, gm)
    out = {}
    for m, c in f.items():
        out[monomial_mul(m, uf)] = c
    for m, c in g.items():
        mm = monomial_mul(m, ug)
        value = out.get(mm, 0) - c
        if value:
            out[mm] = value
        else:
            out.pop(mm, None)
    return out


class GroebnerBasis(object):
    """
    A reduced, monic Groebner basis. Generators are kept sorted by leading
    monomial, ascending.
    """
    def __init__(self, ordering, generators):
        self.ordering = ordering
        self.variables = ordering.variables
        pairs = []
        for g in generators:
            if g.variables != self.variables:
                raise DimensionMismatch(self.variables, g.variables, 'variables')
            if g:
                lm = ordering.leading_monomial(g.terms)
                pairs.append((lm, _monic(g.terms, lm)))
        pairs.sort(key = lambda pair: ordering.key(pair[0]))
        self._divisors = pairs
        self.generators = [Polynomial(self.variables, t) for _, t in pairs]

    @property
    def leading_monomials(self):
        return [lm for lm, _ in self._divisors]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def reduce_terms(self, terms):
        return _reduce(terms, self._divisors, self.ordering.key)

    def normal_form(self, p):
        if p.variables != self.variables:
            raise DimensionMismatch(self.variables, p.variables, 'variables')
        return Polynomial(self.variables, self.reduce_terms(p.terms))

    def contains(self, p):
        return self.normal_form(p).is_zero()

    def s_polynomials_reduce(self):
        """True when every S-polynomial of the basis reduces to zero"""
        for (fm, f), (gm, g) in itertools.combinations(self._divisors, 2):
            if self.reduce_terms(_spoly(f, g, fm, gm)):
                return False
        return True

    def is_reduced(self):
        lms = self.leading_monomials
        for i, (lm, g) in enumerate(self._divisors):
            if g[lm] != 1:
                return False
            for j, other in enumerate(lms):
                if i == j:
                    continue
                if any(monomial_divides(other, m) for m in g):
                    return False
        return True

    def __repr__(self):
        return 'GroebnerBasis([{0}], {1!r})'.format(', '.join(str(g) for g in self.generators), self.ordering)


def buchberger(generators, ordering):
    """
    The reduced Groebner basis of the ideal spanned by `generators`.

    Args:
    ```
        generators (list of Polynomial): ideal generators, not all zero
        ordering (MonomialOrdering): the monomial ordering
    ```

    Returns:
    ```
        GroebnerBasis
    ```
    """
    key = ordering.key
    f = []
    for g in generators:
        if g.variables != ordering.variables:
            raise DimensionMismatch(ordering.variables, g.variables, 'variables')
        if g:
            f.append(dict(g.terms))
    if not f:
        raise PreconditionFailed("buchberger needs at least one nonzero generator")

    # interreduce the input until it stops changing
    while True:
        before = f
        f = []
        for p in before:
            r = _reduce(p, [(ordering.leading_monomial(q), q) for q in f], key)
            if r:
                f.append(_monic(r, ordering.leading_monomial(r)))
        if f == before:
            break

    lms = [ordering.leading_monomial(p) for p in f]

    def update(G, B, ih):
        mh = lms[ih]
        C = sorted(G)
        D = []
        while C:
            ig = C.pop()
            mg = lms[ig]
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                return monomial_divides(monomial_lcm(mh, lms[ip]), lcm_hg)

            if monomial_mul(mh, mg) == lcm_hg or (
                    not any(lcm_divides(ipx) for ipx in C) and
                    not any(lcm_divides(pr[1]) for pr in D)):
                D.append((ih, ig))

        E = [(ih, ig) for ih, ig in D if monomial_mul(mh, lms[ig]) != monomial_lcm(mh, lms[ig])]

        B_new = set()
        for ig1, ig2 in B:
            lcm12 = monomial_lcm(lms[ig1], lms[ig2])
            if not monomial_divides(mh, lcm12) or \
                    monomial_lcm(lms[ig1], mh) == lcm12 or \
                    monomial_lcm(lms[ig2], mh) == lcm12:
                B_new.add((ig1, ig2))
        B_new.update(E)

        G_new = set(ig for ig in G if not monomial_divides(mh, lms[ig]))
        G_new.add(ih)
        return G_new, B_new

    G = set()
    CP = set()
    for ih in sorted(range(len(f)), key = lambda i: key(lms[i])):
        G, CP = update(G, CP, ih)

    reductions_to_zero = 0
    while CP:
        pair = min(CP, key = lambda pr: (key(monomial_lcm(lms[pr[0]], lms[pr[1]])), pr))
        CP.remove(pair)
        ig1, ig2 = pair
        h = _spoly(f[ig1], f[ig2], lms[ig1], lms[ig2])
        divisors = [(lms[i], f[i]) for i in sorted(G, key = lambda i: key(lms[i]))]
        h = _reduce(h, divisors, key)
        if h:
            lm = ordering.leading_monomial(h)
            f.append(_monic(h, lm))
            lms.append(lm)
            G, CP = update(G, CP, len(f) - 1)
        else:
            reductions_to_zero += 1

    reduced = []
    for ig in sorted(G):
        divisors = [(lms[i], f[i]) for i in sorted(G - {ig}, key = lambda i: key(lms[i]))]
        r = _reduce(f[ig], divisors, key)
        if r:
            reduced.append(Polynomial(ordering.variables, _monic(r, ordering.leading_monomial(r))))

    log.debug('buchberger: %s generators in, %s out, %s pairs reduced to zero',
              len(generators), len(reduced), reductions_to_zero)
    return GroebnerBasis(ordering, reduced)


def normal_form(p, gb):
    return gb.normal_form(p)


def standard_monomials(gb):
    """
    Monomials outside the leading term ideal in increasing order, or None
    when there are infinitely many.
    """
    n = len(gb.variables)
    lms = gb.leading_monomials
    if any(not any(lm) for lm in lms):
        return []
    bounds = []
    for i in range(n):
        pure = [lm[i] for lm in lms if lm[i] and not any(e for j, e in enumerate(lm) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    found = []
    for m in itertools.product(*[range(b) for b in bounds]):
        if not any(monomial_divides(lm, m) for lm in lms):
            found.append(m)
    return gb.ordering.sort(found)


def is_local_zero_dimensional(gb):
    basis = standard_monomials(gb)
    if basis is None:
        return False
    return not non_nilpotent_variables(gb, len(basis))


def non_nilpotent_variables(gb, dimension):
    """Variables whose residue is not nilpotent, checked by repeated squaring past `dimension`"""
    bad = []
    n = len(gb.variables)
    for i in range(n):
        p = gb.normal_form(Polynomial.variable(gb.variables, i))
        exponent = 1
        while p and exponent < dimension:
            p = gb.normal_form(p * p)
            exponent *= 2
        if p:
            bad.append(gb.variables[i])
    return bad