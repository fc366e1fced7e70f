from pathlib import Path

from app.documents import parse_quiver_document
from app.exactnum import MatrixQi, gauss, rank, vstack

DATA_DIR = Path(__file__).resolve().parent / 'data'


def data_path(name):
    return str(DATA_DIR / name)


def read_data(name):
    return (DATA_DIR / name).read_text(encoding='utf-8')


def load_quiver(name):
    return parse_quiver_document(read_data(name))


def matrix(rows, cols=None):
    """MatrixQi from rows of ints or (re, im) pairs."""
    return MatrixQi.from_rows(
        [[gauss(*value) if isinstance(value, tuple) else gauss(value) for value in row] for row in rows],
        cols=cols,
    )


def proportional(a, b):
    """True when the non-zero matrices a and b differ by a non-zero scalar."""
    flat_a = MatrixQi.from_rows([list(a.entries)], cols=len(a.entries))
    flat_b = MatrixQi.from_rows([list(b.entries)], cols=len(b.entries))
    return not a.is_zero() and not b.is_zero() and rank(vstack(flat_a, flat_b)) == 1
