"""
The JSON files the command line reads and writes: algebras, certificates and
run manifests.
"""
import logging

from milnor.algebra import FiniteAlgebra, quotient_algebra
from milnor.equivalence import EquivalenceCertificate
from milnor.errors import ParseException
from milnor.exactpoly import parse
from milnor.groebner import MonomialOrdering
from milnor.resource import Resource

log = logging.getLogger(__name__)


class AlgebraFile(Resource):
    """
    Structure constants in the algebra file format, optionally with a
    "source" block (variables, generators, ordering, local flag) from which a
    quotient algebra can be recomputed with its Groebner basis.
    """
    @classmethod
    def from_algebra(cls, A, generators = None, ordering = None, local = False, poly = None):
        document = A.to_json()
        if generators is not None:
            document['source'] = {
                'vars': list(ordering.variables),
                'generators': [str(g) for g in generators],
                'ordering': ordering.to_json(),
                'local': bool(local)
            }
            if poly is not None:
                document['source']['poly'] = str(poly)
        return cls(document)

    @property
    def source(self):
        return self.attributes.get('source')

    def algebra(self, max_local_power = None):
        if not self.source:
            return FiniteAlgebra.from_json(self.attributes)
        try:
            variables = tuple(self.source['vars'])
            generators = [parse(g, variables) for g in self.source['generators']]
            ordering = MonomialOrdering.from_json(variables, self.source.get('ordering', {}))
            local = bool(self.source.get('local', False))
        except (KeyError, TypeError) as e:
            raise ParseException("malformed source block in algebra file: {0}".format(e))
        A = quotient_algebra(generators, ordering, local, max_local_power)
        if A.to_json()['table'] != self.attributes.get('table'):
            raise ParseException("algebra file table does not match its source block", self.path)
        log.debug('recomputed %s from its source block', self.path)
        return A


class CertificateFile(Resource):
    @classmethod
    def from_certificate(cls, certificate):
        return cls(certificate.to_json())

    def certificate(self):
        return EquivalenceCertificate.from_json(self.attributes)


class RunManifest(Resource):
    """
    A recorded invocation: command, argument vector, inputs, ordering options,
    basis designation and output paths. `milnor replay` re-runs the argument
    vector.
    """
    FIELDS = ('command', 'argv', 'inputs', 'ordering', 'basis', 'outputs')

    def _on_document(self, document):
        missing = [f for f in ('command', 'argv') if f not in document]
        if missing:
            raise ParseException("manifest is missing {0}".format(', '.join(missing)))
        if not isinstance(document['argv'], list):
            raise ParseException("manifest argv must be a list")
        self.attributes = {f: document.get(f, {}) for f in self.FIELDS}

    @classmethod
    def from_args(cls, command, argv, args):
        inputs = {}
        for name in ('fixture', 'algebra', 'poly', 'vars', 'gens', 'let', 'tjurina', 'local', 'table',
                     'tilde_poly', 'tilde_vars', 'tilde_let', 'map', 'grid', 'certificate'):
            value = getattr(args, name, None)
            if value not in (None, False, []):
                inputs[name] = value
        ordering = {name: getattr(args, name) for name in ('weights', 'precedence')
                    if getattr(args, name, None)}
        basis = {name: getattr(args, name) for name in ('e0', 'kernel', 'monomials')
                 if getattr(args, name, None)}
        outputs = {name: getattr(args, name) for name in ('out', 'csv')
                   if getattr(args, name, None)}
        return cls({
            'command': command,
            'argv': list(argv),
            'inputs': inputs,
            'ordering': ordering,
            'basis': basis,
            'outputs': outputs
        })

    @property
    def argv(self):
        return list(self.attributes['argv'])
