# Process exit codes used by the command line frontend
EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class MilnorException(Exception):
    exit_code = EXIT_PROPERTY


class ParseException(MilnorException):
    exit_code = EXIT_USAGE

    def __init__(self, message, text = None, position = None):
        if position is not None:
            message = "{message} at position {position}".format(message = message, position = position)
        if text is not None:
            message = "{message}: {text!r}".format(message = message, text = text)
        super(ParseException, self).__init__(message)
        self.text = text
        self.position = position


class DimensionMismatch(MilnorException):
    exit_code = EXIT_USAGE

    def __init__(self, expected, actual, what = 'dimension'):
        super(DimensionMismatch, self).__init__(
            "{what} mismatch: expected {expected}, got {actual}".format(what = what, expected = expected, actual = actual)
        )
        self.expected = expected
        self.actual = actual


class PreconditionFailed(MilnorException):
    exit_code = EXIT_PRECONDITION


class NonIsolatedSingularity(PreconditionFailed):
    def __init__(self, detail = None):
        message = "non-isolated singularity / infinite quotient"
        if detail:
            message = "{0} ({1})".format(message, detail)
        super(NonIsolatedSingularity, self).__init__(message)


class QuotientNotLocal(PreconditionFailed):
    def __init__(self, variable):
        super(QuotientNotLocal, self).__init__(
            "quotient not local: residue of {0} is not nilpotent".format(variable)
        )
        self.variable = variable


class SmoothPoint(PreconditionFailed):
    def __init__(self, variable):
        super(SmoothPoint, self).__init__(
            "smooth point: d/d{0} has a nonzero constant term".format(variable)
        )
        self.variable = variable


class NotLocal(PreconditionFailed):
    pass


class NotAdmissible(PreconditionFailed):
    def __init__(self, dim_ann):
        super(NotAdmissible, self).__init__("not admissible: dim Ann = {0}".format(dim_ann))
        self.dim_ann = dim_ann


class DegenerateForm(PreconditionFailed):
    pass


class NormalizationMismatch(PreconditionFailed):
    def __init__(self, value, other):
        super(NormalizationMismatch, self).__init__(
            "normalization mismatch: forms take values {0} and {1} on Ann(N)".format(value, other)
        )
        self.value = value
        self.other = other


class NoGrading(PreconditionFailed):
    def __init__(self):
        super(NoGrading, self).__init__("no grading available on either algebra")


class NotGermEquivalence(PreconditionFailed):
    def __init__(self):
        super(NotGermEquivalence, self).__init__("not a germ equivalence: ftilde o psi is not proportional to f")


class TargetNotOnHypersurface(PreconditionFailed):
    def __init__(self, value):
        super(TargetNotOnHypersurface, self).__init__("target not on S: f(s) = {0}".format(value))
        self.value = value


class NotHomogeneous(PreconditionFailed):
    pass


class OutOfRange(PreconditionFailed):
    pass


class PropertyFailure(MilnorException):
    exit_code = EXIT_PROPERTY


class NotCommutative(PropertyFailure):
    def __init__(self, i, j, k):
        super(NotCommutative, self).__init__(
            "not commutative: c[{i}][{j}][{k}] != c[{j}][{i}][{k}]".format(i = i, j = j, k = k)
        )
        self.witness = (i, j, k)


class NotAssociative(PropertyFailure):
    def __init__(self, i, j, l):
        super(NotAssociative, self).__init__(
            "not associative: (e{i} e{j}) e{l} != e{i} (e{j} e{l})".format(i = i, j = j, l = l)
        )
        self.witness = (i, j, l)


class NotNilpotent(PropertyFailure):
    pass


class GradingViolated(PropertyFailure):
    def __init__(self, i, j):
        super(GradingViolated, self).__init__(
            "grading violated: product of basis elements {i} and {j} is not homogeneous of the expected degree".format(i = i, j = j)
        )
        self.witness = (i, j)


class NotABasis(PropertyFailure):
    def __init__(self, rank, expected):
        super(NotABasis, self).__init__(
            "not a basis: rank {rank}, expected {expected}".format(rank = rank, expected = expected)
        )
        self.rank = rank
        self.expected = expected


class NotAnIsomorphism(PropertyFailure):
    def __init__(self, detail):
        super(NotAnIsomorphism, self).__init__("not an isomorphism: {0}".format(detail))


class CertificateError(PropertyFailure):
    pass


class InternalInconsistency(PropertyFailure):
    pass


class SingularMatrix(PropertyFailure):
    def __init__(self, what = 'matrix'):
        super(SingularMatrix, self).__init__("singular {0}".format(what))
