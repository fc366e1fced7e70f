from django import forms
from django.core.exceptions import ValidationError

from .exactnum import parse_gauss, parse_gauss_literal
from .exceptions import ParseError

QUIVER_FORMAT = 'quiver-v1'
LOCALSYS_FORMAT = 'localsys-v1'
COVER_FORMAT = 'cover-v1'


class ExactValueField(forms.Field):
    """
    Base for fields holding JSON values that are read exactly.

    Subclasses implement parse(); a ParseError there becomes a form error.
    """

    def to_python(self, value):
        if value is None:
            return None
        try:
            return self.parse(value)
        except ParseError as exc:
            raise ValidationError(str(exc), code='invalid')

    def parse(self, value):
        raise NotImplementedError


def read_scalar(value):
    """A Gaussian rational from "p/q", an integer, a literal such as "1-2i", or a ["re", "im"] pair."""
    if isinstance(value, str) and 'i' in value:
        return parse_gauss_literal(value)
    return parse_gauss(value)


class GaussianField(ExactValueField):
    def parse(self, value):
        return read_scalar(value)


class GaussianListField(ExactValueField):
    def parse(self, value):
        if not isinstance(value, list):
            raise ParseError('expected a list of points')
        points = []
        for index, item in enumerate(value):
            try:
                points.append(read_scalar(item))
            except ParseError as exc:
                raise ParseError(f'point {index}: {exc}')
        return points


def read_matrix(value, label='matrix'):
    """Rows of scalars; the shape is checked later against the surrounding document."""
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise ParseError(f'{label} must be a list of rows')
    rows = []
    for i, row in enumerate(value):
        parsed = []
        for j, entry in enumerate(row):
            try:
                parsed.append(read_scalar(entry))
            except ParseError as exc:
                raise ParseError(f'{label} entry ({i}, {j}): {exc}')
        rows.append(parsed)
    return rows


class MatrixField(ExactValueField):
    def parse(self, value):
        return read_matrix(value)


class MatrixListField(ExactValueField):
    def parse(self, value):
        if not isinstance(value, list):
            raise ParseError('expected a list of matrices')
        return [read_matrix(item, f'matrix {index}') for index, item in enumerate(value)]


class FrameField(ExactValueField):
    """{"alpha": ..., "beta": ...}; both entries are required when the frame is given."""

    def parse(self, value):
        if not isinstance(value, dict):
            raise ParseError('frame must be an object with alpha and beta')
        missing = [key for key in ('alpha', 'beta') if key not in value]
        if missing:
            raise ParseError(f'frame is missing {", ".join(missing)}')
        return read_scalar(value['alpha']), read_scalar(value['beta'])


class CountField(forms.IntegerField):
    """A non-negative JSON integer; strings and booleans are refused."""

    def to_python(self, value):
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError('expected a non-negative integer', code='invalid')
        return value


class DocumentForm(forms.Form):
    document_format = None

    format = forms.CharField()

    def clean_format(self):
        value = self.cleaned_data['format']
        if value != self.document_format:
            raise ValidationError(f'expected format {self.document_format!r}, got {value!r}')
        return value


class NodeForm(forms.Form):
    c = GaussianField()
    u = MatrixField(required=False)
    v = MatrixField(required=False)
    phi_dim = CountField(required=False, min_value=0)

    def clean_u(self):
        return self.cleaned_data['u'] or []

    def clean_v(self):
        return self.cleaned_data['v'] or []


class NodeListField(ExactValueField):
    def parse(self, value):
        if not isinstance(value, list):
            raise ParseError('nodes must be a list')
        nodes = []
        for index, item in enumerate(value):
            if not isinstance(item, dict):
                raise ParseError(f'node {index} must be an object')
            form = NodeForm(data=item)
            if not form.is_valid():
                raise ParseError(f'node {index}: {form_errors(form)}')
            nodes.append(form.cleaned_data)
        return nodes


class QuiverDocumentForm(DocumentForm):
    document_format = QUIVER_FORMAT

    frame = FrameField(required=False)
    psi_dim = CountField(min_value=0)
    nodes = NodeListField(required=False)

    def clean_nodes(self):
        return self.cleaned_data['nodes'] or []


class LocalSystemDocumentForm(DocumentForm):
    document_format = LOCALSYS_FORMAT

    frame = FrameField(required=False)
    rank = CountField(required=False, min_value=0)
    points = GaussianListField(required=False)
    monodromies = MatrixListField(required=False)

    def clean(self):
        cleaned = super().clean()
        points = cleaned.get('points') or []
        monodromies = cleaned.get('monodromies') or []
        if len(points) != len(monodromies):
            raise ValidationError(f'{len(points)} points but {len(monodromies)} monodromies')
        if not points and cleaned.get('rank') is None:
            raise ValidationError('rank is required when there are no points')
        cleaned['points'], cleaned['monodromies'] = points, monodromies
        return cleaned


class LaurentTermsField(ExactValueField):
    def parse(self, value):
        if not isinstance(value, list):
            raise ParseError('coefficients must be a list')
        terms = []
        for index, item in enumerate(value):
            if not isinstance(item, list) or len(item) != 2 or isinstance(item[0], bool) \
                    or not isinstance(item[0], int):
                raise ParseError(f'term {index} must be [power, coefficient] with an integer power')
            try:
                terms.append((item[0], read_scalar(item[1])))
            except ParseError as exc:
                raise ParseError(f'term {index}: {exc}')
        return terms


class CoverDocumentForm(DocumentForm):
    document_format = COVER_FORMAT

    kind = forms.ChoiceField(choices=[('polynomial', 'polynomial'), ('laurent', 'laurent')])
    coefficients = forms.JSONField()
    name = forms.CharField(required=False)
    frame = FrameField(required=False)
    critical_values = GaussianListField(required=False)

    def clean(self):
        cleaned = super().clean()
        kind, raw = cleaned.get('kind'), cleaned.get('coefficients')
        if kind is None or raw is None:
            return cleaned
        try:
            if kind == 'laurent':
                cleaned['coefficients'] = LaurentTermsField().parse(raw)
            elif isinstance(raw, list):
                cleaned['coefficients'] = [read_scalar(item) for item in raw]
            else:
                raise ParseError('coefficients must be a list')
        except ParseError as exc:
            raise ValidationError(f'coefficients: {exc}')
        return cleaned


def form_errors(form):
    """One line: "field: message; field: message"."""
    parts = []
    for name, messages in form.errors.items():
        prefix = '' if name == '__all__' else f'{name}: '
        parts.append(prefix + ' '.join(messages))
    return '; '.join(parts)
