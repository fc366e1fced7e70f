"""
Exact arithmetic over Q and Q(i) and dense exact matrices.

Scalars are sympy's polys-domain elements: ``QQ`` for rationals and ``QQ_I``
(Gaussian rationals) for everything that may be complex. Matrices are stored
row-major as immutable tuples and handed to sympy's ``DomainMatrix`` for
elimination, inversion and products.
"""
import re
from dataclasses import dataclass
from typing import NamedTuple

from sympy import QQ, QQ_I
from sympy import Rational as SympyRational
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .exceptions import DimensionMismatch, InconsistentSystem, ParseError, SingularMatrix

Rational = QQ.dtype
GaussRational = QQ_I.dtype


def rational(numerator, denominator=1):
    return QQ(numerator, denominator)


def gauss(re=0, im=0):
    """Build the Gaussian rational re + im*i from ints or rationals."""
    return QQ_I(QQ.convert(re), QQ.convert(im))


ZERO = gauss(0)
ONE = gauss(1)
I = gauss(0, 1)


def to_gauss(value):
    if isinstance(value, GaussRational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return QQ_I(QQ.convert(value), QQ.zero)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ_I(QQ(int(value.numerator), int(value.denominator)), QQ.zero)
    raise TypeError(f"cannot use {value!r} as an exact scalar")


def is_zero(value):
    return value.x == 0 and value.y == 0


def to_complex(value):
    return complex(float(value.x), float(value.y))


# Text encodings

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(i?)")


def parse_rational(text):
    """Read "p/q", "p" or a bare integer exactly; floats are refused."""
    if isinstance(text, bool):
        raise ParseError(f"expected a rational, got {text!r}")
    if isinstance(text, int):
        return QQ(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    match = _RATIONAL.match(text)
    if match is None:
        raise ParseError(f"malformed rational {text!r}")
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return QQ(int(match.group(1)), denominator)


def format_rational(value):
    value = QQ.convert(value)
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def parse_gauss(value):
    """Read a ["re", "im"] pair; a lone rational is taken as a real part."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ParseError(f"a Gaussian rational needs exactly two parts, got {value!r}")
        return QQ_I(parse_rational(value[0]), parse_rational(value[1]))
    return QQ_I(parse_rational(value), QQ.zero)


def format_gauss(value, compact=False):
    if compact and value.y == 0:
        return format_rational(value.x)
    return [format_rational(value.x), format_rational(value.y)]


def parse_gauss_literal(text):
    """
    Read a literal such as "2", "i", "-i", "1/2-3i" or "2/3i".

    A coefficient directly in front of "i" belongs to the imaginary part, so
    "2/3i" is (2/3)i.
    """
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty complex literal")
    real_part, imag_part = QQ.zero, QQ.zero
    position = 0
    while position < len(compact):
        match = _TERM.match(compact, position)
        sign, number, unit = match.groups()
        if match.end() == position or not (number or unit) or (position and not sign):
            raise ParseError(f"malformed complex literal {text!r}")
        term = parse_rational(number) if number else QQ.one
        if sign == "-":
            term = -term
        if unit:
            imag_part += term
        else:
            real_part += term
        position = match.end()
    return QQ_I(real_part, imag_part)


def format_gauss_literal(value):
    real_part, imag_part = value.x, value.y
    if imag_part == 0:
        return format_rational(real_part)
    if imag_part == 1:
        imaginary = "i"
    elif imag_part == -1:
        imaginary = "-i"
    else:
        imaginary = f"{format_rational(imag_part)}i"
    if real_part == 0:
        return imaginary
    if not imaginary.startswith("-"):
        imaginary = "+" + imaginary
    return format_rational(real_part) + imaginary


def snap_rational(x, tolerance, max_denominator):
    candidate = SympyRational(x).limit_denominator(max_denominator)
    if abs(float(candidate) - x) > tolerance:
        return None
    return QQ(int(candidate.p), int(candidate.q))


def snap_gauss(z, tolerance=1e-9, max_denominator=10**6):
    """Continued-fraction snap of a complex double; None when either part misses."""
    real_part = snap_rational(z.real, tolerance, max_denominator)
    imag_part = snap_rational(z.imag, tolerance, max_denominator)
    if real_part is None or imag_part is None:
        return None
    return QQ_I(real_part, imag_part)


# Matrices

@dataclass(frozen=True)
class MatrixQi:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries cannot fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(row) for row in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch("column count is required for a matrix without rows")
            cols = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatch(f"row {index} has {len(row)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(to_gauss(value) for row in rows for value in row))

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [list(column) for column in columns]
        return cls.from_rows(
            [[column[i] for column in columns] for i in range(rows)], cols=len(columns)
        )

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def scalar(cls, value):
        return cls(1, 1, (to_gauss(value),))

    @classmethod
    def from_domain_matrix(cls, dm):
        rows, cols = dm.shape
        return cls(rows, cols, tuple(value for row in dm.to_list() for value in row))

    def to_domain_matrix(self):
        return DomainMatrix(self.to_rows(), self.shape, QQ_I)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def to_rows(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self):
        return MatrixQi(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_zero(self):
        return all(is_zero(value) for value in self.entries)

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        self._check_same_shape(other)
        return MatrixQi(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_same_shape(other)
        return MatrixQi(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return MatrixQi(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if 0 in (self.rows, self.cols, other.cols):
            return MatrixQi.zeros(self.rows, other.cols)
        return MatrixQi.from_domain_matrix(self.to_domain_matrix().matmul(other.to_domain_matrix()))

    def submatrix(self, row_start, row_stop, col_start, col_stop):
        return MatrixQi.from_rows(
            [[self[i, j] for j in range(col_start, col_stop)] for i in range(row_start, row_stop)],
            cols=col_stop - col_start,
        )

    def __repr__(self):
        body = [[format_gauss_literal(value) for value in row] for row in self.to_rows()]
        return f"MatrixQi({self.rows}x{self.cols}, {body})"


def hstack(*blocks):
    rows = blocks[0].rows
    if any(block.rows != rows for block in blocks):
        raise DimensionMismatch("hstack needs blocks with equal row counts")
    block_rows = [block.to_rows() for block in blocks]
    merged = [sum((source[i] for source in block_rows), []) for i in range(rows)]
    return MatrixQi.from_rows(merged, cols=sum(block.cols for block in blocks))


def vstack(*blocks):
    cols = blocks[0].cols
    if any(block.cols != cols for block in blocks):
        raise DimensionMismatch("vstack needs blocks with equal column counts")
    return MatrixQi(
        sum(block.rows for block in blocks), cols,
        tuple(value for block in blocks for value in block.entries),
    )


def block_matrix(grid):
    return vstack(*(hstack(*row) for row in grid))


def block_diag(*blocks):
    if not blocks:
        return MatrixQi.zeros(0, 0)
    return block_matrix([
        [block if j == i else MatrixQi.zeros(blocks[i].rows, block.cols) for j, block in enumerate(blocks)]
        for i in range(len(blocks))
    ])


# Elimination

def rref(m):
    """Reduced row echelon form and pivot columns; leftmost pivots, deterministic."""
    if 0 in m.shape:
        return m, ()
    reduced, pivots = m.to_domain_matrix().rref()
    return MatrixQi.from_domain_matrix(reduced), tuple(pivots)


def rank(m):
    return len(rref(m)[1])


def det(m):
    if not m.is_square:
        raise DimensionMismatch(f"determinant of a non-square {m.shape} matrix")
    if m.rows == 0:
        return ONE
    return m.to_domain_matrix().det()


def mat_inverse(m):
    if not m.is_square:
        raise DimensionMismatch(f"cannot invert a non-square {m.shape} matrix")
    if m.rows == 0:
        return m
    try:
        inverse = m.to_domain_matrix().inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError) as exc:
        raise SingularMatrix(f"{m.rows}x{m.cols} matrix has zero determinant") from exc
    return MatrixQi.from_domain_matrix(inverse)


def kernel_basis(m):
    """Columns span {x : m x = 0}: one vector per free column of the RREF."""
    if m.rows == 0:
        return MatrixQi.identity(m.cols)
    reduced, pivots = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    columns = []
    for j in free:
        vector = [ZERO] * m.cols
        vector[j] = ONE
        for i, pivot in enumerate(pivots):
            vector[pivot] = -reduced[i, j]
        columns.append(vector)
    return MatrixQi.from_columns(columns, rows=m.cols)


class Cokernel(NamedTuple):
    proj: MatrixQi
    dim: int


def cokernel_projection(m):
    """
    Full-row-rank projection onto the cokernel of an N x k matrix.

    The rows are the free-column basis of the annihilator of the image, so
    proj @ m == 0 and proj has N - rank(m) rows.
    """
    proj = kernel_basis(m.transpose()).transpose()
    return Cokernel(proj, proj.rows)


def solve(a, b):
    """A particular solution x of a @ x == b with every free variable set to zero."""
    if a.rows != b.rows:
        raise DimensionMismatch(f"cannot solve {a.shape} against {b.shape}")
    n, k = a.cols, b.cols
    solution = [[ZERO] * k for _ in range(n)]
    if a.rows and n + k:
        reduced, pivots = rref(hstack(a, b))
        if any(pivot >= n for pivot in pivots):
            raise InconsistentSystem(f"{a.rows}x{n} system has no solution")
        for i, pivot in enumerate(pivots):
            for j in range(k):
                solution[pivot][j] = reduced[i, n + j]
    return MatrixQi.from_rows(solution, cols=k)
