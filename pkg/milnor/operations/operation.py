from fractions import Fraction


def _text(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if value is None:
        return 'none'
    if isinstance(value, (list, tuple)):
        return '(' + ', '.join(_text(v) for v in value) + ')'
    return str(value)


def _plain(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


class Report(object):
    """
    Ordered KEY: value lines printed by a subcommand. A report that recorded a
    failed check makes the command exit with 1.
    """
    def __init__(self, command):
        self.command = command
        self.fields = []
        self.extra = {}
        self.passed = True

    def add(self, key, value):
        self.fields.append((key, value))
        return self

    def check(self, name, ok, detail = None):
        self.add(name.upper(), 'pass' if ok else 'fail')
        if detail is not None:
            self.add(name.upper() + '_DETAIL', detail)
        self.passed = self.passed and bool(ok)
        return self

    def attach(self, key, body):
        """Structured data that only shows up in the JSON form"""
        self.extra[key] = body
        return self

    def get(self, key):
        for k, v in self.fields:
            if k == key:
                return v
        raise KeyError(key)

    def row(self):
        return {k: _text(v) for k, v in self.fields}

    def lines(self):
        return ['{0}: {1}'.format(k, _text(v)) for k, v in self.fields]

    def to_json(self):
        body = {k.lower(): _plain(v) for k, v in self.fields}
        body.update(_plain(self.extra))
        body['command'] = self.command
        return body


class Operation(object):
    name = None

    def __init__(self, config, **kwargs):
        self.config = config
        self.properties = kwargs

    def option(self, name, default = None):
        value = self.properties.get(name)
        return default if value is None else value

    def run(self, bindings = None):
        """Run once, with `bindings` overriding the --let values; returns a Report"""
        raise NotImplementedError()
