"""
Exact multivariate polynomials over the rationals.

Coefficients are `fractions.Fraction`, monomials are exponent tuples, and a
`Polynomial` is immutable once built. Text goes in through `parse` and comes
back out through `str()`, both using the same grammar:

```
poly   := ['-'] term (('+'|'-') term)*
term   := factor ('*' factor)*
factor := (variable | bound symbol | natural ['/' natural]) ['^' natural]
```
"""
import re
import logging
from fractions import Fraction
from math import gcd

from milnor.errors import ParseException, DimensionMismatch, PreconditionFailed
from milnor import linalg

log = logging.getLogger(__name__)


def rational(value):
    """
    Coerce an int, Fraction or a "p/q" string into a Fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        match = re.match(r'^([+-]?)\s*(\d+)(?:\s*/\s*(\d+))?$', text)
        if not match:
            raise ParseException("not a rational literal", text)
        sign, num, den = match.groups()
        den = int(den) if den is not None else 1
        if den == 0:
            raise ParseException("zero denominator in literal", text)
        q = Fraction(int(num), den)
        return -q if sign == '-' else q
    raise ParseException("cannot interpret {0!r} as a rational".format(value))


def format_rational(q):
    return str(Fraction(q))


def parse_variables(text):
    names = [v.strip() for v in text.split(',') if v.strip()]
    for name in names:
        if not re.match(r'^[A-Za-z][A-Za-z0-9_]*$', name):
            raise ParseException("bad variable name", name)
    if len(set(names)) != len(names):
        raise ParseException("duplicate variable names", text)
    return tuple(names)


def parse_bindings(items):
    """
    Turn `["t=1", "s=-1/2"]` into `{'t': Fraction(1), 's': Fraction(-1, 2)}`
    """
    bindings = {}
    for item in items or []:
        if '=' not in item:
            raise ParseException("binding must look like name=value", item)
        name, value = item.split('=', 1)
        bindings[name.strip()] = rational(value)
    return bindings


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """a / b, or None when b does not divide a"""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        return None
    return out


def monomial_divides(b, a):
    return all(y <= x for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(m):
    return sum(m)


def format_monomial(variables, m):
    factors = []
    for name, e in zip(variables, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append('{0}^{1}'.format(name, e))
    return '*'.join(factors) if factors else '1'


def _canonical_key(m):
    # total degree ascending, then lexicographically descending exponents
    return (sum(m), tuple(-e for e in m))


class WeightSystem(object):
    def __init__(self, weights, degree):
        weights = tuple(int(w) for w in weights)
        degree = int(degree)
        if degree <= 0 or any(w <= 0 for w in weights):
            raise ValueError('Weights and degree must be positive, got %s; %s' % (weights, degree))
        g = degree
        for w in weights:
            g = gcd(g, w)
        self.weights = tuple(w // g for w in weights)
        self.degree = degree // g

    def degree_of(self, m):
        return sum(w * e for w, e in zip(self.weights, m))

    def __eq__(self, other):
        return isinstance(other, WeightSystem) and \
            (self.weights, self.degree) == (other.weights, other.degree)

    def __hash__(self):
        return hash((self.weights, self.degree))

    def __repr__(self):
        return 'WeightSystem({0}; {1})'.format(self.weights, self.degree)


class Polynomial(object):
    """
    A polynomial with Fraction coefficients in a fixed, ordered list of variables.

    Args:
    ```
        variables (tuple of str): the ambient variables
        terms (dict): exponent tuple -> coefficient; zero coefficients are dropped
    ```

    Examples:
    ```python
        p = Polynomial(('x1', 'x2'), {(1, 1): 1, (3, 0): Fraction(1, 6)})
        str(p)  # 'x1*x2 + 1/6*x1^3'
    ```
    """
    __slots__ = ('variables', 'terms', '_hash')

    def __init__(self, variables, terms = None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for m, c in (terms or {}).items():
            c = rational(c)
            if not c:
                continue
            m = tuple(m)
            if len(m) != n:
                raise DimensionMismatch(n, len(m), 'monomial length')
            clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def constant(cls, variables, value):
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables, index):
        m = [0] * len(variables)
        m[index] = 1
        return cls(variables, {tuple(m): 1})

    @classmethod
    def monomial(cls, variables, exponents, coefficient = 1):
        return cls(variables, {tuple(exponents): coefficient})

    @classmethod
    def linear(cls, variables, coefficients):
        n = len(variables)
        terms = {}
        for i, c in enumerate(coefficients):
            m = [0] * n
            m[i] = 1
            terms[tuple(m)] = c
        return cls(variables, terms)

    @property
    def nvars(self):
        return len(self.variables)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    @property
    def min_degree(self):
        if not self.terms:
            return -1
        return min(sum(m) for m in self.terms)

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), Fraction(0))

    @property
    def constant_term(self):
        return self.coefficient((0,) * self.nvars)

    def monomials(self):
        return sorted(self.terms, key = _canonical_key)

    def homogeneous_component(self, d):
        return Polynomial(self.variables, {m: c for m, c in self.terms.items() if sum(m) == d})

    def components(self):
        """dict total degree -> homogeneous component, nonzero ones only"""
        out = {}
        for m, c in self.terms.items():
            out.setdefault(sum(m), {})[m] = c
        return {d: Polynomial(self.variables, t) for d, t in sorted(out.items())}

    def is_homogeneous(self, weights = None):
        if weights is None:
            weights = (1,) * self.nvars
        degrees = set(sum(w * e for w, e in zip(weights, m)) for m in self.terms)
        return len(degrees) <= 1

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.variables != self.variables:
                raise DimensionMismatch(self.variables, other.variables, 'variables')
            return other
        return Polynomial.constant(self.variables, rational(other))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.variables, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, factor):
        factor = rational(factor)
        if not factor:
            return Polynomial.zero(self.variables)
        return Polynomial(self.variables, {m: c * factor for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(self.variables, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.scale(1 / rational(other))

    def __pow__(self, k):
        if k < 0:
            raise ValueError('Negative powers are not polynomials')
        result = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(self.variables, other).terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise DimensionMismatch(self.nvars, len(point))
        total = 0
        for m, c in self.terms.items():
            value = c
            for x, e in zip(point, m):
                if e:
                    value = value * x ** e
            total = total + value
        return total

    def compose(self, images):
        """
        Substitute `images[i]` for the i-th variable. The images are polynomials
        over a common (possibly different) variable list.
        """
        if len(images) != self.nvars:
            raise DimensionMismatch(self.nvars, len(images), 'substitution length')
        if not images:
            return self
        target = images[0].variables
        powers = [[Polynomial.constant(target, 1)] for _ in images]

        def power(i, e):
            cache = powers[i]
            while len(cache) <= e:
                cache.append(cache[-1] * images[i])
            return cache[e]

        total = Polynomial.zero(target)
        for m, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def diff(self, index):
        terms = {}
        for m, c in self.terms.items():
            e = m[index]
            if e:
                m2 = list(m)
                m2[index] = e - 1
                terms[tuple(m2)] = c * e
        return Polynomial(self.variables, terms)

    def with_variables(self, variables):
        if len(variables) != self.nvars:
            raise DimensionMismatch(self.nvars, len(variables), 'variable count')
        return Polynomial(variables, self.terms)

    def to_json(self):
        return [[list(m), format_rational(self.terms[m])] for m in self.monomials()]

    @classmethod
    def from_json(cls, variables, pairs):
        return cls(variables, {tuple(m): rational(c) for m, c in pairs})

    def __str__(self):
        if not self.terms:
            return '0'
        pieces = []
        for m in self.monomials():
            c = self.terms[m]
            sign = '-' if c < 0 else '+'
            c = abs(c)
            if not any(m):
                body = format_rational(c)
            elif c == 1:
                body = format_monomial(self.variables, m)
            else:
                body = '{0}*{1}'.format(format_rational(c), format_monomial(self.variables, m))
            if not pieces:
                pieces.append(body if sign == '+' else '-' + body)
            else:
                pieces.append('{0} {1}'.format(sign, body))
        return ' '.join(pieces)

    def __repr__(self):
        return 'Polynomial({0!r}, vars={1})'.format(str(self), ','.join(self.variables))


_TOKEN = re.compile(r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))')


class _Parser(object):
    def __init__(self, text, variables, bindings):
        self.text = text
        self.variables = tuple(variables)
        self.index = {name: i for i, name in enumerate(self.variables)}
        self.bindings = bindings or {}
        for name in self.bindings:
            if name in self.index:
                raise ParseException("symbol is both a variable and bound", name)
        self.tokens = self._tokenize()
        self.pos = 0

    def _tokenize(self):
        tokens = []
        i = 0
        text = self.text
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            match = _TOKEN.match(text, i)
            if not match or match.end() == i:
                raise ParseException("syntax error: unexpected character", text, i)
            kind = match.lastgroup
            start = match.start(kind)
            tokens.append((kind, match.group(kind), start))
            i = match.end()
        tokens.append(('end', None, len(text)))
        return tokens

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind, value = None):
        token = self.tokens[self.pos]
        if token[0] != kind or (value is not None and token[1] != value):
            expected = value or kind
            raise ParseException("syntax error: expected {0}".format(expected), self.text, token[2])
        self.pos += 1
        return token

    def at(self, kind, value = None):
        token = self.tokens[self.pos]
        return token[0] == kind and (value is None or token[1] == value)

    def parse(self):
        if self.at('end'):
            raise ParseException("syntax error: empty polynomial", self.text, 0)
        sign = 1
        if self.at('op', '-'):
            self.take('op')
            sign = -1
        elif self.at('op', '+'):
            self.take('op')
        total = self.term().scale(sign)
        while self.at('op', '+') or self.at('op', '-'):
            op = self.take('op')[1]
            term = self.term()
            total = total + term if op == '+' else total - term
        if not self.at('end'):
            raise ParseException("syntax error: unexpected token", self.text, self.peek()[2])
        return total

    def term(self):
        value = self.factor()
        while self.at('op', '*'):
            self.take('op')
            value = value * self.factor()
        return value

    def factor(self):
        kind, text, position = self.peek()
        if kind == 'number':
            self.take('number')
            value = Fraction(int(text))
            if self.at('op', '/'):
                self.take('op')
                _, den, den_pos = self.take('number')
                if int(den) == 0:
                    raise ParseException("zero denominator in literal", self.text, den_pos)
                value = value / int(den)
            base = Polynomial.constant(self.variables, value)
        elif kind == 'name':
            self.take('name')
            if text in self.index:
                base = Polynomial.variable(self.variables, self.index[text])
            elif text in self.bindings:
                base = Polynomial.constant(self.variables, self.bindings[text])
            else:
                raise ParseException("unbound symbol {0!r}".format(text), self.text, position)
        else:
            raise ParseException("syntax error: expected a factor", self.text, position)
        if self.at('op', '^'):
            self.take('op')
            _, exponent, _ = self.take('number')
            base = base ** int(exponent)
        return base


def parse(text, variables, bindings = None):
    """
    Parse `text` into a Polynomial over `variables`.

    Args:
    ```
        text (str): polynomial in the grammar described at the top of this module
        variables (sequence of str): the ambient variables, in order
        bindings (dict): optional name -> rational constants substituted at parse time
    ```

    Returns:
    ```
        Polynomial
    ```

    Examples:
    ```python
        parse("z1^6 + t*z1^4*z2 + z2^3 + z3^2", ('z1', 'z2', 'z3'), {'t': Fraction(1)})
    ```
    """
    return _Parser(text, variables, bindings).parse()


def parse_list(text, variables, bindings = None):
    """Semicolon separated generators, e.g. "z1^3*z2; z1^5" """
    return [parse(piece, variables, bindings) for piece in text.split(';') if piece.strip()]


def partial_derivative(p, var):
    if not 0 <= var < p.nvars:
        raise DimensionMismatch(p.nvars, var, 'variable index')
    return p.diff(var)


def gradient(p):
    return [p.diff(i) for i in range(p.nvars)]


def substitute_linear(p, M):
    """
    Return p(Mx), i.e. the i-th variable replaced by sum_j M[i][j] x_j.
    """
    n = p.nvars
    if len(M) != n or any(len(row) != n for row in M):
        raise DimensionMismatch(n, (len(M), len(M[0]) if M else 0), 'matrix shape')
    images = [Polynomial.linear(p.variables, row) for row in M]
    return p.compose(images)


def is_quasi_homogeneous(p, w):
    return all(w.degree_of(m) == w.degree for m in p.terms)


def find_weights(p):
    """
    Positive integer weights (p_1..p_m; q) making `p` weighted homogeneous, or
    None when no such weights exist. When several systems exist, the rational
    one with every entry >= 1 and the smallest sum is scaled to integers.
    """
    if p.is_zero():
        raise PreconditionFailed("find_weights needs a nonzero polynomial")
    rows = [list(m) + [-1] for m in sorted(p.terms)]
    v = linalg.positive_solution(rows, p.nvars + 1)
    if v is None:
        log.debug('no positive weights for %s', p)
        return None
    denominator = 1
    for x in v:
        denominator = denominator * x.denominator // gcd(denominator, x.denominator)
    ints = [int(x * denominator) for x in v]
    return WeightSystem(ints[:-1], ints[-1])
