"""
Resolution of the shared input flags (--fixture, --algebra, --poly, --gens,
--vars, --let, ordering and basis options) into an algebra and its form.
"""
import logging
import re

from milnor import fixtures
from milnor.algebra import (
    as_nilpotent, grading_from_weights, milnor_algebra, quotient_algebra, tjurina_algebra
)
from milnor.documents import AlgebraFile
from milnor.errors import ParseException, PreconditionFailed, GradingViolated
from milnor.exactpoly import (
    find_weights, gradient, parse, parse_bindings, parse_list, parse_variables, WeightSystem
)
from milnor.forms import default_form
from milnor.groebner import MonomialOrdering
from milnor.nilpoly import basis_from_monomials

log = logging.getLogger(__name__)

SOURCES = ('fixture', 'algebra', 'table', 'poly', 'gens')
SHARED = ('vars', 'tjurina', 'local', 'weights', 'precedence', 'monomials', 'e0', 'kernel')

_NAME = re.compile(r'[A-Za-z][A-Za-z0-9_]*')
_SPLIT = re.compile(r'(\d+)')


def _natural(name):
    return [int(piece) if piece.isdigit() else piece for piece in _SPLIT.split(name)]


def infer_variables(text, bindings):
    """Every identifier that is not bound, in natural order (z2 before z10)"""
    names = set(_NAME.findall(text)) - set(bindings)
    if not names:
        raise ParseException("no variables in input; pass --vars", text)
    return tuple(sorted(names, key = _natural))


def side_options(properties, prefix = ''):
    """
    The input options of one side of a comparison. The tilde side falls back
    to the plain flags for anything it does not set itself.
    """
    own = {name: properties.get(prefix + name) for name in SOURCES + SHARED + ('let',)}
    if not prefix:
        return own
    if not any(own[name] for name in SOURCES):
        own.update({name: properties.get(name) for name in SOURCES})
    for name in SHARED:
        if own[name] is None:
            own[name] = properties.get(name)
    own['let'] = list(properties.get('let') or []) + list(own['let'] or [])
    return own


def _weights(text):
    try:
        return tuple(int(w) for w in text.split(',') if w.strip())
    except ValueError:
        raise ParseException("weights must be comma separated integers", text)


def _ordering(variables, options, f = None):
    precedence = parse_variables(options['precedence']) if options.get('precedence') else None
    if options.get('weights'):
        return MonomialOrdering(variables, _weights(options['weights']), precedence)
    if f is not None:
        return MonomialOrdering.for_polynomial(f, precedence)
    return MonomialOrdering(variables, precedence = precedence)


class Problem(object):
    """
    One resolved input: the algebra as given (unital quotient or table), its
    nilpotent part in the designated basis, and the germ when there is one.
    """
    def __init__(self, algebra, nilpotent, f = None, generators = None, ordering = None,
                 local = False, weights = None, label = None):
        self.algebra = algebra
        self.nilpotent = nilpotent
        self.f = f
        self.generators = generators
        self.ordering = ordering
        self.local = local
        self.weights = weights
        self.label = label

    @property
    def variables(self):
        return self.ordering.variables if self.ordering is not None else None

    def to_file(self):
        if self.generators is None:
            return AlgebraFile.from_algebra(self.algebra)
        return AlgebraFile.from_algebra(self.algebra, self.generators, self.ordering, self.local, self.f)


def _from_polynomial(config, text, variables, values, options, tjurina):
    f = parse(text, variables, values)
    ordering = _ordering(variables, options, f)
    local = bool(options.get('local'))
    build = tjurina_algebra if tjurina else milnor_algebra
    A = build(f, ordering, local, config.max_local_power)
    generators = gradient(f) + ([f] if tjurina else [])
    return A, f, generators, ordering


def resolve(config, options, bindings = None):
    """
    Args:
    ```
        config (Config): tunables (max_local_power)
        options (dict): one side's options, see `side_options`
        bindings (dict): values overriding --let, used by grid runs
    ```

    Returns:
    ```
        Problem
    ```
    """
    values = parse_bindings(options.get('let'))
    values.update(bindings or {})
    local = bool(options.get('local'))
    tjurina = bool(options.get('tjurina'))
    f = generators = ordering = None
    monomials = options.get('monomials')
    label = None

    if options.get('fixture'):
        fixture = fixtures.get(options['fixture'])
        label = fixture.name
        if fixture.kind == 'table':
            N = fixture.algebra()
            return Problem(N, N, label = label)
        variables = fixture.variables
        if fixture.kind == 'poly':
            A, f, generators, ordering = _from_polynomial(config, fixture.text, variables,
                                                          dict(fixture.bindings, **values), options, tjurina)
            monomials = monomials or fixture.monomials
            if not options.get('weights') and fixture.weights:
                options = dict(options, weights = ','.join(str(w) for w in fixture.weights))
        else:
            generators = fixture.generators(values)
            ordering = _ordering(variables, options)
            A = quotient_algebra(generators, ordering, local, config.max_local_power)
    elif options.get('algebra') or options.get('table'):
        document = AlgebraFile.from_file(options.get('algebra') or options.get('table'))
        A = document.algebra(config.max_local_power)
        label = document.path
        source = document.source
        if source:
            variables = tuple(source['vars'])
            generators = [parse(g, variables) for g in source['generators']]
            ordering = MonomialOrdering.from_json(variables, source.get('ordering', {}))
            local = bool(source.get('local', False))
            if source.get('poly'):
                f = parse(source['poly'], variables)
    elif options.get('poly'):
        text = options['poly']
        variables = parse_variables(options['vars']) if options.get('vars') else infer_variables(text, values)
        A, f, generators, ordering = _from_polynomial(config, text, variables, values, options, tjurina)
    elif options.get('gens'):
        text = options['gens']
        variables = parse_variables(options['vars']) if options.get('vars') else infer_variables(text, values)
        generators = parse_list(text, variables, values)
        ordering = _ordering(variables, options)
        A = quotient_algebra(generators, ordering, local, config.max_local_power)
    else:
        raise ParseException("no input: pass one of --fixture, --algebra, --poly or --gens")

    if monomials:
        variables = ordering.variables if ordering is not None else None
        if variables is None:
            raise ParseException("--monomials needs a polynomial quotient", monomials)
        N = basis_from_monomials(A, [parse(m, variables) for m in monomials.split(',') if m.strip()])
    else:
        N = as_nilpotent(A)

    weights = None
    if options.get('weights'):
        weights = _weights(options['weights'])
    elif f is not None:
        found = find_weights(f)
        weights = found.weights if found is not None else None
    if N.grading is None and weights is not None and N.representatives is not None:
        try:
            N = grading_from_weights(N, weights)
        except (PreconditionFailed, GradingViolated) as e:
            log.info('weights %s do not grade the algebra: %s', weights, e)
    if weights is None and N.grading is not None:
        weights = tuple(N.grading.degrees)
    log.debug('resolved input %s: dim %s', label or options, N.dimension)
    return Problem(A, N, f, generators, ordering, local, weights, label)


def weight_system(problem):
    """The quasi-homogeneity weights (p; q) of the germ, if any"""
    if problem.f is None:
        return None
    if problem.weights is not None:
        degrees = set(sum(w * e for w, e in zip(problem.weights, m)) for m in problem.f.terms)
        if len(degrees) == 1 and len(problem.weights) == problem.f.nvars:
            return WeightSystem(problem.weights, degrees.pop())
    return find_weights(problem.f)


def _index(N, label):
    if label in N.labels:
        return N.labels.index(label)
    try:
        index = int(label)
    except ValueError:
        raise ParseException("unknown basis label (known: {0})".format(', '.join(N.labels)), label)
    if not 0 <= index < N.dimension:
        raise ParseException("basis index out of range", label)
    return index


def form_for(problem, options):
    """The admissible form designated by --e0 and --kernel, else the default one"""
    N = problem.nilpotent
    e0 = options.get('e0')
    kernel = options.get('kernel')
    if not e0 and not kernel:
        return default_form(N)
    annihilator = N.basis_vector(_index(N, e0)) if e0 else None
    vectors = None
    if kernel:
        vectors = [N.basis_vector(_index(N, label.strip())) for label in kernel.split(',') if label.strip()]
    return default_form(N, annihilator, vectors)
