import json
import os
import pprint
import tempfile
import logging

from milnor.errors import ParseException, MilnorException

log = logging.getLogger(__name__)


class ResourceFailedException(MilnorException):
    def __init__(self, path, reason):
        super(ResourceFailedException, self).__init__(
            "Could not write {path}: {reason}".format(path = path, reason = reason)
        )
        self.path = path


def write_atomically(path, text):
    """
    Write `text` to a temporary sibling of `path` and move it into place, so a
    failed run never leaves a partial file behind.
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix = '.milnor-', dir = directory)
    try:
        with os.fdopen(fd, 'w') as f:
            f.write(text)
        os.replace(tmp, path)
    except OSError as e:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise ResourceFailedException(path, e)
    log.debug('wrote %s', path)


class Resource(object):
    """
    A JSON document (algebra, certificate or manifest file). The parsed body
    lives in `attributes`; subclasses add the conversions to domain objects.
    """
    def __init__(self, document, path = None):
        self.path = path
        self._on_document(document)

    @classmethod
    def from_file(cls, path):
        try:
            with open(path) as f:
                document = json.load(f)
        except (OSError, IOError) as e:
            raise ParseException("cannot read {0}: {1}".format(path, e))
        except ValueError as e:
            raise ParseException("{0} is not valid JSON: {1}".format(path, e))
        if not isinstance(document, dict):
            raise ParseException("{0} does not contain a JSON object".format(path))
        return cls(document, path)

    def _on_document(self, document):
        self.attributes = document

    def _clone(self, document):
        return self.__class__(document, self.path)

    def _mutate(self, document):
        self._on_document(document)
        return self

    def dumps(self):
        return json.dumps(self.attributes, indent = 2, sort_keys = True) + '\n'

    def write(self, path):
        write_atomically(path, self.dumps())
        self.path = path
        return self

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.attributes == other.attributes

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, pprint.pformat(self.attributes))
