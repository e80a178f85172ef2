"""
`milnor check NAME`: one named verification on the resolved input.
"""
import logging
import random
from fractions import Fraction

from milnor.algebra import is_admissible, milnor_algebra, tjurina_algebra
from milnor.errors import ParseException, PreconditionFailed, NoGrading, InternalInconsistency
from milnor.exactpoly import gradient
from milnor.forms import form_from_covector, gram_b_pi, grading_form, hypersurface_function, translation_between
from milnor.groebner import buchberger
from milnor.homogeneity import check_L_xi, lift_to_hypersurface, transport, xi_field
from milnor.nilpoly import blaschke_residual, build_nilpolynomial, reconstruct_from_23
from milnor.operations.inputs import form_for, resolve, side_options
from milnor.operations.operation import Operation, Report

log = logging.getLogger(__name__)

CHECKS = ('admissible', 'nondegen', 'blaschke', 'recursion', 'saito', 'grading', 'translation', 'homogeneity')


def random_rational(rng, bound = 3):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def tilted_form(form, rng):
    """A random form agreeing with `form` on Ann(N)"""
    N = form.algebra
    a0 = form.annihilator
    pivot = max(i for i, c in enumerate(a0) if c)
    shift = [random_rational(rng) for _ in range(N.dimension)]
    shift[pivot] = Fraction(0)
    shift[pivot] = -sum(s * a for s, a in zip(shift, a0)) / a0[pivot]
    omega = [w + s for w, s in zip(form.omega, shift)]
    return form_from_covector(N, omega, a0)


def random_point_on_S(N, form, rng):
    return lift_to_hypersurface(N, [random_rational(rng) for _ in range(N.dimension)], form)


class Check(Operation):
    name = 'check'

    def run(self, bindings = None):
        which = self.option('check')
        if which not in CHECKS:
            raise ParseException("unknown check (known: {0})".format(', '.join(CHECKS)), which)
        options = side_options(self.properties)
        problem = resolve(self.config, options, bindings)
        report = Report(self.name)
        report.add('CHECK', which)
        getattr(self, '_' + which)(problem, options, report)
        log.info('check %s: %s', which, 'pass' if report.passed else 'fail')
        return report

    def _rng(self):
        return random.Random(self.option('seed', 0))

    def _admissible(self, problem, options, report):
        N = problem.nilpotent
        report.add('DIM_ANN', N.dim_ann)
        report.check('admissible', is_admissible(N))

    def _nondegen(self, problem, options, report):
        form = form_for(problem, options)
        gram = gram_b_pi(form)
        report.add('DET_N', gram.det_algebra)
        report.add('DET_N0', gram.det_unital)
        report.add('DET_KERNEL', gram.det_kernel)
        report.check('nondegen', bool(gram.det_unital) and not gram.is_degenerate)

    def _blaschke(self, problem, options, report):
        P = build_nilpolynomial(form_for(problem, options))
        residual = blaschke_residual(P)
        report.add('RESIDUAL', residual)
        report.check('blaschke', not any(residual))

    def _recursion(self, problem, options, report):
        P = build_nilpolynomial(form_for(problem, options))
        rebuilt = reconstruct_from_23(P.component(2), P.component(3), self.config.nil_bound)
        matched = [l for l in P.degrees if rebuilt.component(l) == P.component(l)]
        report.add('DEGREES', P.degrees)
        report.add('MATCHED', matched)
        report.check('recursion', rebuilt.polynomial == P.polynomial)

    def _saito(self, problem, options, report):
        f = problem.f
        if f is None:
            raise PreconditionFailed("check saito needs a polynomial input")
        gb = buchberger(gradient(f), problem.ordering)
        remainder = gb.normal_form(f)
        local = problem.local
        milnor = milnor_algebra(f, problem.ordering, local, self.config.max_local_power).dimension
        tjurina = tjurina_algebra(f, problem.ordering, local, self.config.max_local_power).dimension
        report.add('NORMAL_FORM', str(remainder))
        report.add('MILNOR', milnor)
        report.add('TJURINA', tjurina)
        report.check('saito', remainder.is_zero() and milnor == tjurina)

    def _grading(self, problem, options, report):
        N = problem.nilpotent
        if N.grading is None:
            raise NoGrading()
        report.add('DEGREES', N.grading.degrees)
        report.add('TOP_DEGREE', N.grading.top_degree)
        report.check('grading', N.check_power_closure())

    def _translation(self, problem, options, report):
        form = form_for(problem, options).normalized()
        rng = self._rng()
        trials = self.option('trials', 10)
        failures = 0
        for _ in range(trials):
            other = tilted_form(form, rng)
            try:
                translation_between(form, other)
            except InternalInconsistency as e:
                log.warning('%s', e)
                failures += 1
        report.add('TRIALS', trials)
        report.check('translation', not failures)

    def _homogeneity(self, problem, options, report):
        N = problem.nilpotent
        if N.grading is None:
            raise NoGrading()
        grading = N.grading
        form = grading_form(N, grading)
        f = hypersurface_function(form)
        fields = 0
        ok = True
        for i in range(N.dimension):
            if grading.degrees[i] < grading.top_degree:
                fields += 1
                ok = ok and check_L_xi(xi_field(N, N.basis_vector(i), grading), f)
        rng = self._rng()
        points = self.option('trials', 5)
        for _ in range(points):
            s = random_point_on_S(N, form, rng)
            g = transport(N, s, form, grading)
            ok = ok and g.shift == s and g.substitute_into(f) == f
        report.add('FIELDS', fields)
        report.add('POINTS', points)
        report.check('homogeneity', ok)
