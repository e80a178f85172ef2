import logging
from fractions import Fraction

from milnor.exactpoly import parse, parse_bindings
from milnor.nilpoly import build_nilpolynomial
from milnor.operations.inputs import form_for, resolve, side_options
from milnor.operations.operation import Operation, Report

log = logging.getLogger(__name__)


def compare_displayed(P, expected):
    """
    Compare P with an expected polynomial on the monomials the expected one
    shows. Returns (verdict, factor): 'exact', 'scaled' with the common factor
    k such that P = k * expected on those monomials, or 'mismatch'.
    """
    ratios = set()
    for m, c in expected.terms.items():
        ratios.add(P.polynomial.coefficient(m) / c)
    if ratios == {Fraction(1)}:
        return 'exact', Fraction(1)
    if len(ratios) == 1 and Fraction(0) not in ratios:
        return 'scaled', ratios.pop()
    return 'mismatch', None


class Expand(Operation):
    """`milnor nilpoly`: the nil-polynomial of the designated form"""
    name = 'nilpoly'

    def run(self, bindings = None):
        options = side_options(self.properties)
        problem = resolve(self.config, options, bindings)
        form = form_for(problem, options)
        P = build_nilpolynomial(form)
        report = Report(self.name)
        report.add('NILPOLY', str(P))
        report.add('DEGREES', P.degrees)
        report.add('BASIS', problem.nilpotent.labels)
        report.attach('nilpoly', P.to_json())
        report.attach('provenance', P.provenance)

        expected = self.option('expect')
        if expected:
            values = parse_bindings(options.get('let'))
            values.update(bindings or {})
            verdict, factor = compare_displayed(P, parse(expected, P.variables, values))
            report.add('MATCH', verdict)
            if verdict == 'scaled':
                log.warning('nil-polynomial matches the expected one up to the factor %s', factor)
                report.add('SCALE', factor)
            report.passed = verdict != 'mismatch'
        return report
