from copy import copy

from milnor.errors import ParseException


class OptionChange(object):
    def __init__(self, name, obj):
        self._name = name
        self._obj = obj
        self._obj.option_changes = getattr(self._obj, 'option_changes', [])

    def to(self, value):
        self._obj.option_changes.append((self._name, value))
        return self._obj


class OptionBuilder(object):
    def change_option(self, name):
        """
        Change one configuration option. Changes are collected until `run()`
        applies them all at once and returns the updated configuration.

        Options are:
        workers (int): worker threads used for grid runs
        max_local_power (int): largest k tried by the local truncation I + m^k
        search_lambdas (list of Fraction): scalars tried by monomial_search
        nil_bound (int): degree bound for reconstruct_from_23, None for n + 1

        Args:
        ```
            name (string): One of the options above, ie: "workers"
        ```

        Returns:
        ```
            change (OptionChange): implements a `.to(value)` function which you call to set the value
        ```

        Examples:
        ```python
            config = config\
            .change_option('workers').to(8)\
            .change_option('max_local_power').to(12)\
            .run()
        ```
        """
        if name not in self.attributes:
            raise ParseException("unknown option", name)
        return OptionChange(name, self)

    def run(self):
        options = copy(self.attributes)
        options.update({key: value for key, value in getattr(self, 'option_changes', [])})

        self.option_changes = []
        return self.update(options)
