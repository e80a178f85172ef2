"""
`milnor equiv MODE`: verify, derive, search for or rule out a linear
equivalence between two nil-polynomials.
"""
import logging
import re

from milnor.documents import CertificateFile
from milnor.equivalence import (
    CONVENTION, classify_small, fingerprint, induced_certificate, monomial_search, separate, verify_certificate
)
from milnor.errors import ParseException, PreconditionFailed
from milnor.exactpoly import parse
from milnor.forms import coordinate_variables
from milnor.nilpoly import NilPolynomial, build_nilpolynomial
from milnor.operations.inputs import form_for, resolve, side_options
from milnor.operations.operation import Operation, Report

log = logging.getLogger(__name__)

MODES = ('verify', 'from-map', 'fingerprint', 'search')

_COORDINATE = re.compile(r'x(\d+)')


def nilpoly_from_text(text):
    """A nil-polynomial typed in x1..xn; n is the largest index that occurs"""
    indices = [int(i) for i in _COORDINATE.findall(text)]
    if not indices:
        raise ParseException("nil-polynomials are written in x1..xn", text)
    return NilPolynomial.from_polynomial(parse(text, coordinate_variables('x', max(indices))),
                                         {'text': text})


def parse_map(text, variables):
    """
    "z1->z1; z2->-z2" as the list of coordinate images; unlisted variables
    are left alone.
    """
    images = {}
    for piece in text.split(';'):
        if not piece.strip():
            continue
        if '->' not in piece:
            raise ParseException("map entries look like z1->expression", piece)
        name, image = piece.split('->', 1)
        name = name.strip()
        if name not in variables:
            raise ParseException("map entry for an unknown variable", name)
        if name in images:
            raise ParseException("variable mapped twice", name)
        images[name] = parse(image, variables)
    return [images[name] if name in images else parse(name, variables) for name in variables]


def _certificate_fields(report, certificate):
    report.add('CONVENTION', CONVENTION)
    report.add('C_SCALAR', certificate.c)
    report.add('C_MATRIX', certificate.C)
    report.attach('certificate', certificate.to_json())


def _verification_fields(report, verification):
    report.add('VERIFIED', verification.full)
    report.add('DEGREES_2_3', verification.low_degree)
    report.add('CONSISTENT', verification.consistent)
    report.attach('verification', verification.to_json())
    report.passed = report.passed and bool(verification)


class Equiv(Operation):
    name = 'equiv'

    def run(self, bindings = None):
        mode = self.option('mode')
        if mode not in MODES:
            raise ParseException("unknown equiv mode (known: {0})".format(', '.join(MODES)), mode)
        report = Report(self.name)
        report.add('MODE', mode)
        getattr(self, '_' + mode.replace('-', '_'))(report, bindings)
        return report

    def _sides(self, bindings):
        options = side_options(self.properties)
        tilde_options = side_options(self.properties, 'tilde_')
        problem = resolve(self.config, options, bindings)
        tilde = resolve(self.config, tilde_options)
        return (problem, form_for(problem, options)), (tilde, form_for(tilde, tilde_options))

    def _nilpolys(self, bindings):
        text = self.option('nilpoly')
        tilde_text = self.option('tilde_nilpoly')
        if text and tilde_text:
            return nilpoly_from_text(text), nilpoly_from_text(tilde_text)
        (problem, form), (tilde, tilde_form) = self._sides(bindings)
        P = nilpoly_from_text(text) if text else build_nilpolynomial(form)
        P_tilde = nilpoly_from_text(tilde_text) if tilde_text else build_nilpolynomial(tilde_form)
        return P, P_tilde

    def _write(self, certificate, report):
        out = self.option('out')
        if out:
            CertificateFile.from_certificate(certificate).write(out)
            report.add('OUT', out)

    def _verify(self, report, bindings):
        path = self.option('certificate')
        if not path:
            raise ParseException("equiv verify needs --certificate FILE")
        certificate = CertificateFile.from_file(path).certificate()
        P, P_tilde = self._nilpolys(bindings)
        _verification_fields(report, verify_certificate(P, P_tilde, certificate))

    def _from_map(self, report, bindings):
        text = self.option('map')
        if not text:
            raise ParseException("equiv from-map needs --map")
        (problem, form), (tilde, tilde_form) = self._sides(bindings)
        if problem.f is None or tilde.f is None:
            raise PreconditionFailed("equiv from-map needs polynomial inputs on both sides")
        psi = parse_map(text, problem.f.variables)
        certificate = induced_certificate(psi, problem.f, tilde.f, form, tilde_form)
        _certificate_fields(report, certificate)
        verification = verify_certificate(build_nilpolynomial(form), build_nilpolynomial(tilde_form), certificate)
        _verification_fields(report, verification)
        self._write(certificate, report)

    def _fingerprint(self, report, bindings):
        (problem, form), (tilde, tilde_form) = self._sides(bindings)
        N, N_tilde = problem.nilpotent, tilde.nilpotent
        first = fingerprint(N, build_nilpolynomial(form))
        second = fingerprint(N_tilde, build_nilpolynomial(tilde_form))
        report.add('FINGERPRINT', [first.dimension, first.nil_index, list(first.chain)])
        report.add('TILDE_FINGERPRINT', [second.dimension, second.nil_index, list(second.chain)])
        if N.dimension <= 3 and N_tilde.dimension <= 3:
            report.add('CLASS', classify_small(N))
            report.add('TILDE_CLASS', classify_small(N_tilde))
        report.add('VERDICT', separate(first, second))
        report.attach('fingerprints', [first.to_json(), second.to_json()])

    def _search(self, report, bindings):
        P, P_tilde = self._nilpolys(bindings)
        certificate = monomial_search(P, P_tilde, self.config.search_lambdas)
        if certificate is None:
            report.add('RESULT', 'not found')
            return
        report.add('RESULT', 'found')
        _certificate_fields(report, certificate)
        self._write(certificate, report)
