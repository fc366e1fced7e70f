"""
JSON documents read and written by the management commands.

Input documents are checked in two stages: a Django form reads the JSON
values exactly (syntax, giving ParseError), then the domain objects are
built and validated (shapes and invariants, giving DomainError).
"""
import json
import logging
import sys
from typing import NamedTuple, Optional

from .covers import CoverKind, CoverSpec
from .exactnum import MatrixQi, format_gauss, format_gauss_literal
from .exceptions import DimensionMismatch, ParseError
from .forms import (
    COVER_FORMAT, LOCALSYS_FORMAT, QUIVER_FORMAT, CoverDocumentForm, LocalSystemDocumentForm,
    QuiverDocumentForm, form_errors,
)
from .quiver import DEFAULT_FRAME, Frame, LocalSystem, QuiverNode, format_cycles, validate_and_order

logger = logging.getLogger(__name__)

STOKES_FORMAT = 'stokes-v1'
EXPONENTS_FORMAT = 'exponents-v1'
SECTOR_FORMAT = 'sector-v1'
RECONSTRUCT_FORMAT = 'reconstruct-check-v1'
MONODROMY_FORMAT = 'monodromy-v1'


# Reading

def read_source(path, stdin=None):
    """Text of a file, or of stdin when path is "-"."""
    if path == '-':
        return (stdin or sys.stdin).read()
    try:
        with open(path, encoding='utf-8') as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f'cannot read {path}: {exc.strerror}')
    except UnicodeDecodeError as exc:
        raise ParseError(f'{path} is not UTF-8 text: {exc.reason}')


def load_document(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno)
    if not isinstance(data, dict):
        raise ParseError('a document must be a JSON object')
    if not isinstance(data.get('format'), str):
        raise ParseError('document has no "format" field')
    return data


def _clean(form_class, data):
    form = form_class(data=data)
    if not form.is_valid():
        raise ParseError(form_errors(form))
    return form.cleaned_data


def _frame(pair):
    return DEFAULT_FRAME if pair is None else Frame(*pair)


def _matrix(rows, shape, label):
    expected_rows, expected_cols = shape
    if not rows and 0 in shape:
        return MatrixQi.zeros(expected_rows, expected_cols)
    try:
        matrix = MatrixQi.from_rows(rows, cols=len(rows[0]) if rows else expected_cols)
    except DimensionMismatch as exc:
        raise DimensionMismatch(f'{label}: {exc}')
    if matrix.shape != shape:
        raise DimensionMismatch(
            f'{label} is {matrix.rows}x{matrix.cols}, expected {expected_rows}x{expected_cols}'
        )
    return matrix


def _node(index, cleaned, psi_dim):
    u_rows, v_rows = cleaned['u'], cleaned['v']
    phi_dim = cleaned.get('phi_dim')
    if phi_dim is None:
        phi_dim = len(u_rows) if u_rows else (len(v_rows[0]) if v_rows else 0)
    label = f'node {index} (c = {format_gauss_literal(cleaned["c"])})'
    return QuiverNode(
        cleaned['c'],
        _matrix(u_rows, (phi_dim, psi_dim), f'{label} u'),
        _matrix(v_rows, (psi_dim, phi_dim), f'{label} v'),
    )


def quiver_from_data(data):
    cleaned = _clean(QuiverDocumentForm, data)
    psi_dim = cleaned['psi_dim']
    nodes = [_node(index, node, psi_dim) for index, node in enumerate(cleaned['nodes'])]
    return validate_and_order(_frame(cleaned['frame']), psi_dim, nodes)


def parse_quiver_document(text):
    return quiver_from_data(load_document(text))


def local_system_from_data(data):
    cleaned = _clean(LocalSystemDocumentForm, data)
    monodromies = cleaned['monodromies']
    rank = cleaned['rank']
    if rank is None:
        rank = len(monodromies[0])
    matrices = [
        _matrix(rows, (rank, rank), f'monodromy {index}') for index, rows in enumerate(monodromies)
    ]
    return LocalSystem.create(_frame(cleaned['frame']), cleaned['points'], matrices, rank=rank)


def parse_local_system_document(text):
    return local_system_from_data(load_document(text))


class CoverDocument(NamedTuple):
    cover: CoverSpec
    frame: Frame
    critical_values: Optional[list]


def cover_from_data(data):
    cleaned = _clean(CoverDocumentForm, data)
    name = cleaned.get('name') or ''
    if cleaned['kind'] == CoverKind.LAURENT.value:
        cover = CoverSpec.laurent(cleaned['coefficients'], name=name)
    else:
        cover = CoverSpec.polynomial(cleaned['coefficients'], name=name)
    return CoverDocument(cover, _frame(cleaned['frame']), cleaned['critical_values'] or None)


def parse_cover_document(text):
    return cover_from_data(load_document(text))


READERS = {
    QUIVER_FORMAT: quiver_from_data,
    LOCALSYS_FORMAT: local_system_from_data,
    COVER_FORMAT: cover_from_data,
}


def parse_any_document(text):
    """(format, object) for any input document."""
    data = load_document(text)
    reader = READERS.get(data['format'])
    if reader is None:
        raise ParseError(f'unknown document format {data["format"]!r}; expected one of {sorted(READERS)}')
    logger.debug('reading a %s document', data['format'])
    return data['format'], reader(data)


# Writing

def matrix_data(matrix):
    return [[format_gauss(value, compact=True) for value in row] for row in matrix.to_rows()]


def frame_data(frame):
    return {'alpha': format_gauss(frame.alpha), 'beta': format_gauss(frame.beta)}


def serialize_quiver(q):
    return {
        'format': QUIVER_FORMAT,
        'frame': frame_data(q.frame),
        'psi_dim': q.psi_dim,
        'nodes': [
            {'c': format_gauss(node.c), 'phi_dim': node.phi_dim, 'u': matrix_data(node.u), 'v': matrix_data(node.v)}
            for node in q.nodes
        ],
    }


def serialize_local_system(ls):
    return {
        'format': LOCALSYS_FORMAT,
        'frame': frame_data(ls.frame),
        'rank': ls.rank,
        'points': [format_gauss(c) for c in ls.points],
        'monodromies': [matrix_data(t) for t in ls.monodromies],
    }


def serialize_cover(cover, frame=DEFAULT_FRAME):
    if cover.kind is CoverKind.LAURENT:
        coefficients = [[power, format_gauss(c, compact=True)] for power, c in cover.terms]
    else:
        dense = dict(cover.terms)
        coefficients = [
            format_gauss(dense[k], compact=True) if k in dense else '0'
            for k in range(max(dense) + 1)
        ]
    document = {
        'format': COVER_FORMAT,
        'kind': cover.kind.value,
        'coefficients': coefficients,
        'frame': frame_data(frame),
    }
    if cover.name:
        document['name'] = cover.name
    return document


def serialize_stokes(pair, inverse, report, frame):
    document = {
        'format': STOKES_FORMAT,
        'frame': frame_data(frame),
        'order': [format_gauss(c) for c in pair.order],
        'block_dims': list(pair.block_dims),
        'S_plus': matrix_data(pair.S_plus),
        'S_minus': matrix_data(pair.S_minus),
        'S_plus_inverse': matrix_data(inverse),
        'U_sigma': matrix_data(pair.U_sigma),
        'V_sigma': matrix_data(pair.V_sigma),
        'identity_checks': {'phi': report.phi.holds, 'psi': report.psi.holds},
    }
    mismatches = {
        side: list(check.mismatch) for side, check in (('phi', report.phi), ('psi', report.psi))
        if not check.holds
    }
    if mismatches:
        document['mismatches'] = mismatches
    return document


def exponent_data(report):
    return [
        {'c': format_gauss(component.c), 'multiplicity': component.multiplicity}
        for component in report.components
    ]


def pulled_back_data(components):
    return [
        {'coefficient': format_gauss(component.coefficient), 'power': component.power,
         'multiplicity': component.multiplicity}
        for component in components
    ]


def serialize_exponents(report, frame):
    return {'format': EXPONENTS_FORMAT, 'frame': frame_data(frame), 'components': exponent_data(report)}


def serialize_sector(report):
    document = {
        'format': SECTOR_FORMAT,
        'example': report.example,
        'quiver': serialize_quiver(report.quiver),
        'S_plus': matrix_data(report.stokes.S_plus),
        'S_minus': matrix_data(report.stokes.S_minus),
        'sectors': [{'sector': label, 'matrix': matrix_data(matrix)} for label, matrix in report.sectors],
        'exponents': exponent_data(report.exponents),
    }
    if report.pulled_back is not None:
        document['pulled_back_exponents'] = pulled_back_data(report.pulled_back)
    return document


def serialize_reconstruct_check(q, reconstruction):
    return {
        'format': RECONSTRUCT_FORMAT,
        'passed': reconstruction.g == q,
        'psi_iso_identity': reconstruction.psi_iso == MatrixQi.identity(q.psi_dim),
        'phi_isos_identity': all(
            iso == MatrixQi.identity(node.phi_dim) for iso, node in zip(reconstruction.phi_isos, q.nodes)
        ),
        'quiver': serialize_quiver(reconstruction.g),
    }


def _approx(z):
    return [float(z.real), float(z.imag)]


def serialize_monodromy(monodromy, frame=DEFAULT_FRAME):
    return {
        'format': MONODROMY_FORMAT,
        'cover': serialize_cover(monodromy.cover, frame),
        'basepoint': _approx(monodromy.loops.basepoint),
        'radius': monodromy.loops.radius,
        'sheets': [_approx(z) for z in monodromy.sheet_labels],
        'critical_values': [
            {
                'approx': _approx(value),
                'exact': format_gauss(exact) if exact is not None else None,
                'permutation': [j + 1 for j in permutation],
                'cycles': format_cycles(permutation),
                'fiber': [{'point': _approx(point), 'multiplicity': m} for point, m in fiber],
            }
            for value, exact, permutation, fiber in zip(
                monodromy.critical_values, monodromy.exact_values, monodromy.permutations, monodromy.fibers,
            )
        ],
        'max_residual': monodromy.max_residual,
    }


def dump_document(document):
    return json.dumps(document, indent=2, ensure_ascii=False)


# Pretty rendering

def render_matrix(matrix, block_dims=None):
    """Aligned rows; block boundaries drawn with | and - when block_dims is given."""
    if matrix.rows == 0 or matrix.cols == 0:
        return f'  ({matrix.rows}x{matrix.cols})'
    cells = [[format_gauss_literal(value) for value in row] for row in matrix.to_rows()]
    width = max(len(cell) for row in cells for cell in row)
    boundaries = set()
    if block_dims:
        offset = 0
        for d in block_dims[:-1]:
            offset += d
            if 0 < offset < matrix.rows:
                boundaries.add(offset)
    lines = []
    for i, row in enumerate(cells):
        if i in boundaries:
            lines.append('  ' + '-' * len(lines[-1].strip()))
        parts = []
        for j, cell in enumerate(row):
            if j in boundaries:
                parts.append('|')
            parts.append(cell.rjust(width))
        lines.append('  ' + ' '.join(parts))
    return '\n'.join(lines)


def render_stokes(pair, inverse, report):
    order = ' < '.join(format_gauss_literal(c) for c in pair.order) or '(no points)'
    sections = [
        f'beta-order: {order}',
        f'block dims: {", ".join(str(d) for d in pair.block_dims)}',
        'S_plus:', render_matrix(pair.S_plus, pair.block_dims),
        'S_minus:', render_matrix(pair.S_minus, pair.block_dims),
        'S_plus^-1:', render_matrix(inverse, pair.block_dims),
        f'S_plus^-1 S_minus = 1 - U V: {"ok" if report.phi.holds else "FAILED"}',
        f'1 - V U = T_1 ... T_n: {"ok" if report.psi.holds else "FAILED"}',
    ]
    return '\n'.join(sections)


def render_sector(report):
    sections = [f'{report.example}: beta-order {" < ".join(format_gauss_literal(c) for c in report.stokes.order)}']
    for label, matrix in report.sectors:
        sections.extend([f'{label}:', render_matrix(matrix)])
    if report.pulled_back is not None:
        exponents = ', '.join(
            f'E^({format_gauss_literal(component.coefficient)} v^{component.power})'
            for component in report.pulled_back
        )
    else:
        exponents = ', '.join(f'E^({format_gauss_literal(component.c)} w)' for component in report.exponents.components)
    sections.append(f'exponential components: {exponents}')
    return '\n'.join(sections)
