import os
import logging
from fractions import Fraction

from milnor.resource import Resource
from milnor.builders.options import OptionBuilder
from milnor.errors import ParseException
from milnor.exactpoly import rational

log = logging.getLogger(__name__)

DEFAULTS = {
    'workers': 4,
    'max_local_power': 32,
    'search_lambdas': [Fraction(x) for x in (1, -1, 2, -2, 3, -3, 6, -6)] +
                      [Fraction(1, x) for x in (2, -2, 3, -3, 6, -6)],
    'nil_bound': None
}

ENVIRONMENT = {
    'MILNOR_WORKERS': 'workers',
    'MILNOR_MAX_LOCAL_POWER': 'max_local_power',
    'MILNOR_SEARCH_LAMBDAS': 'search_lambdas'
}


def _positive_int(name, value):
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ParseException("{0} must be an integer".format(name), str(value))
    if value <= 0:
        raise ParseException("{0} must be positive".format(name), str(value))
    return value


def _lambdas(value):
    if isinstance(value, str):
        value = [piece for piece in value.split(',') if piece.strip()]
    lambdas = [rational(x) for x in value]
    if not lambdas or any(not x for x in lambdas):
        raise ParseException("search_lambdas must be nonzero rationals", str(value))
    return lambdas


class Config(Resource, OptionBuilder):
    """
    Tunables for the library and the command line frontend.

    Examples:
    ```python
        config = Config.from_env().change_option('workers').to(2).run()
        config.workers  # 2
    ```
    """
    def __init__(self, document = None, path = None):
        options = dict(DEFAULTS)
        options.update(document or {})
        super(Config, self).__init__(options, path)

    def _on_document(self, document):
        document = dict(document)
        document['workers'] = _positive_int('workers', document['workers'])
        document['max_local_power'] = _positive_int('max_local_power', document['max_local_power'])
        document['search_lambdas'] = _lambdas(document['search_lambdas'])
        if document.get('nil_bound') is not None:
            document['nil_bound'] = _positive_int('nil_bound', document['nil_bound'])
        self.attributes = document

    @classmethod
    def from_env(cls, environ = None):
        environ = os.environ if environ is None else environ
        overrides = {}
        for variable, name in ENVIRONMENT.items():
            if environ.get(variable):
                overrides[name] = environ[variable]
                log.debug('config: %s from %s', name, variable)
        return cls(overrides)

    def update(self, options):
        return self._clone(options)

    def dumps(self):
        document = dict(self.attributes)
        document['search_lambdas'] = [str(x) for x in document['search_lambdas']]
        return Resource(document).dumps()

    def __getattr__(self, name):
        attributes = self.__dict__.get('attributes', {})
        if name in attributes:
            return attributes[name]
        raise AttributeError(name)
