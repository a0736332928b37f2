import json
from pathlib import Path

from rest_framework.exceptions import ParseError, ValidationError
from rest_framework.renderers import JSONRenderer

from .covering import SoftCoveringSpace
from .serializers import SpaceDocumentSerializer


def _reject_duplicate_keys(pairs):
    keys = [key for key, _ in pairs]
    duplicates = sorted({key for key in keys if keys.count(key) > 1})
    if duplicates:
        raise ValidationError(
            [f'duplicate key "{key}"' for key in duplicates]
        )
    return dict(pairs)


def load_document(path):
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise ParseError(f'{path}: {error.strerror}') from error
    except UnicodeDecodeError as error:
        raise ParseError(f'{path}: not UTF-8 ({error.reason})') from error
    try:
        document = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as error:
        raise ParseError(
            f'{path}: line {error.lineno}, column {error.colno}: {error.msg}'
        ) from error
    if not isinstance(document, dict):
        raise ParseError(f'{path}: expected a JSON object')
    return document


def read_soft_set(document, allow_noncovering=False):
    serializer = SpaceDocumentSerializer(
        data=document,
        context={'allow_noncovering': allow_noncovering},
    )
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def parse_soft_set(path, allow_noncovering=False):
    return read_soft_set(load_document(path), allow_noncovering)


def parse_space(path):
    return SoftCoveringSpace(parse_soft_set(path))


def dump_space(space):
    soft_set = getattr(space, 'soft_set', space)
    return json.dumps(
        SpaceDocumentSerializer(soft_set).data, indent=2, ensure_ascii=False,
    )


def render_json(data):
    return JSONRenderer().render(
        data, renderer_context={'indent': 2},
    ).decode('utf-8')


def format_set(names):
    return '{' + ','.join(names) + '}'


def _is_family(value):
    return bool(value) and all(isinstance(item, list) for item in value)


def _render_value(key, value, indent):
    pad = '  ' * indent
    if isinstance(value, dict):
        lines = [f'{pad}{key}:']
        for inner_key, inner_value in value.items():
            lines.extend(_render_value(inner_key, inner_value, indent + 1))
        return lines
    if _is_family(value):
        return [f'{pad}{key}:'] + [
            f'{pad}  {format_set(block)}' for block in value
        ]
    if isinstance(value, list) and all(
        isinstance(item, dict) for item in value
    ) and value:
        lines = [f'{pad}{key}:']
        for item in value:
            lines.append(f'{pad}  -')
            for inner_key, inner_value in item.items():
                lines.extend(
                    _render_value(inner_key, inner_value, indent + 2)
                )
        return lines
    if isinstance(value, list):
        return [f'{pad}{key}: {format_set(value)}']
    if isinstance(value, bool):
        return [f'{pad}{key}: {"yes" if value else "no"}']
    if value is None:
        return [f'{pad}{key}: n/a']
    return [f'{pad}{key}: {value}']


def render_text(data):
    """Render serialized data with sets as ``{a,b}`` and one set per line."""
    if isinstance(data, list):
        lines = []
        for item in data:
            lines.extend(render_text(item).splitlines())
        return '\n'.join(lines)
    lines = []
    for key, value in data.items():
        lines.extend(_render_value(key, value, 0))
    return '\n'.join(lines)
