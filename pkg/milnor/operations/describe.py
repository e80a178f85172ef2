import logging

from milnor.algebra import is_admissible
from milnor.exactpoly import find_weights, Polynomial
from milnor.operations.inputs import resolve, side_options, weight_system
from milnor.operations.operation import Operation, Report

log = logging.getLogger(__name__)


def _ideal_weights(generators):
    # weights shared by the support of every generator, at a common degree
    if not generators:
        return None
    total = Polynomial.zero(generators[0].variables)
    for g in generators:
        total = total + Polynomial(g.variables, {m: 1 for m in g.terms})
    return find_weights(total) if total else None


class Describe(Operation):
    """
    `milnor algebra`: build the algebra, print its invariants and optionally
    write it to an algebra file.
    """
    name = 'algebra'

    def run(self, bindings = None):
        problem = resolve(self.config, side_options(self.properties), bindings)
        A = problem.algebra
        N = problem.nilpotent
        report = Report(self.name)
        report.add('DIMENSION', A.dimension)
        if A.unital:
            report.add('DIM_N', N.dimension)
        report.add('NIL_INDEX', N.nil_index)
        report.add('DIM_ANN', N.dim_ann)
        report.add('ADMISSIBLE', is_admissible(N))
        report.add('HILBERT_CHAIN', N.hilbert_chain)
        if problem.f is not None:
            w = weight_system(problem)
            report.add('WEIGHTS', None if w is None else list(w.weights) + [w.degree])
        elif problem.generators is not None:
            w = _ideal_weights(problem.generators)
            report.add('WEIGHTS', None if w is None else list(w.weights))
        else:
            report.add('WEIGHTS', N.grading.degrees if N.grading is not None else None)
        if A.quotient is not None:
            report.add('LEADING_MONOMIALS', [str(m) for m in _leading(A)])
        report.add('BASIS', N.labels)
        report.attach('algebra', A.to_json())

        out = self.option('out')
        if out:
            problem.to_file().write(out)
            log.info('algebra written to %s', out)
            report.add('OUT', out)
        return report


def _leading(A):
    gb = A.quotient.gb
    return [Polynomial.monomial(gb.variables, m) for m in gb.leading_monomials]
