"""
Exact linear algebra on lists of Fractions, delegated to sympy.Matrix.

Vectors are lists of Fraction, matrices are lists of rows. Everything that
leaves this module is converted back to Fraction so that callers never see
sympy numbers.
"""
from fractions import Fraction

import sympy
from sympy.solvers.simplex import InfeasibleLPError, lpmin

from milnor.errors import SingularMatrix, DimensionMismatch


def to_sympy(rows, ncols = None):
    if not rows:
        return sympy.zeros(0, ncols or 0)
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sympy.Rational(x)
                          for x in row] for row in rows])


def to_fraction(x):
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def from_sympy(M):
    return [[to_fraction(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def matmul(A, B):
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch(len(A[0]), len(B), 'inner dimension')
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def columns(vectors):
    """Matrix whose columns are the given vectors"""
    return transpose(vectors) if vectors else []


def rank(rows, ncols = None):
    if not rows:
        return 0
    return to_sympy(rows).rank()


def nullspace(rows, ncols):
    """Basis of {x : A x = 0} as a list of vectors of length ncols"""
    if not rows:
        return identity(ncols)
    return [[to_fraction(x) for x in v] for v in to_sympy(rows).nullspace()]


def row_basis(vectors, ncols):
    """Reduced row echelon basis of the span of `vectors`"""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    R, pivots = to_sympy(vectors).rref()
    return [[to_fraction(R[i, j]) for j in range(ncols)] for i in range(len(pivots))]


def in_span(basis, v):
    if not any(v):
        return True
    if not basis:
        return False
    return rank(basis + [v]) == rank(basis)


def same_span(a, b):
    r = rank(a) if a else 0
    return r == (rank(b) if b else 0) and r == (rank(a + b) if a + b else 0)


def determinant(A):
    if not A:
        return Fraction(1)
    return to_fraction(to_sympy(A).det(method = 'bareiss'))


def adjugate(A):
    return from_sympy(to_sympy(A).adjugate())


def inverse(A, what = 'matrix'):
    det = determinant(A)
    if not det:
        raise SingularMatrix(what)
    if not A:
        return []
    adj = adjugate(A)
    return [[x / det for x in row] for row in adj]


def solve(A, b, what = 'system'):
    """
    The unique solution of A x = b. Raises SingularMatrix when there is none
    or when it is not unique.
    """
    if not A:
        return []
    M = to_sympy(A)
    try:
        solution, params = M.gauss_jordan_solve(to_sympy([[x] for x in b]))
    except ValueError:
        raise SingularMatrix(what)
    if params.shape[0]:
        raise SingularMatrix(what)
    return [to_fraction(solution[i, 0]) for i in range(solution.rows)]


def positive_solution(rows, ncols):
    """
    The solution of A x = 0 with every x_i >= 1 that minimises sum(x), or None
    when A x = 0 has no strictly positive solution. Solved exactly by sympy's
    simplex method over the rationals.
    """
    xs = sympy.symbols('x0:{0}'.format(ncols))
    constraints = [x >= 1 for x in xs]
    for row in rows:
        lhs = sum((sympy.Rational(Fraction(a).numerator, Fraction(a).denominator) * x
                   for a, x in zip(row, xs) if a), sympy.Integer(0))
        constraints.append(sympy.Eq(lhs, 0))
    try:
        _, point = lpmin(sum(xs), constraints)
    except InfeasibleLPError:
        return None
    return [to_fraction(point[x]) for x in xs]
