from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError, ValidationError

from approximations.covering import SoftCoveringSpace  # isort: skip
from approximations.exceptions import SoftRoughError  # isort: skip
from approximations.utils import (  # isort: skip
    parse_soft_set, render_json, render_text)

INPUT_ERROR = 2


def flatten_detail(detail, prefix=''):
    if isinstance(detail, dict):
        messages = []
        for key, value in detail.items():
            name = f'{prefix}.{key}' if prefix else str(key)
            messages.extend(flatten_detail(value, name))
        return messages
    if isinstance(detail, list):
        messages = []
        for value in detail:
            messages.extend(flatten_detail(value, prefix))
        return messages
    return [f'{prefix}: {detail}' if prefix else str(detail)]


def describe_error(error):
    if isinstance(error, ValidationError):
        return '; '.join(flatten_detail(error.detail))
    if isinstance(error, ParseError):
        return str(error.detail)
    return str(error)


class SpaceCommand(BaseCommand):
    """Base for commands that read one space document."""

    soft_set_level = False
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            'path',
            help='JSON space document: {"universe": [...], "blocks": {...}}',
        )
        parser.add_argument(
            '--json',
            action='store_true',
            dest='as_json',
            help='Emit machine readable JSON instead of text.',
        )
        if self.soft_set_level:
            parser.add_argument(
                '--allow-noncovering',
                action='store_true',
                help='Accept soft sets that are not coverings.',
            )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            soft_set = parse_soft_set(
                options['path'],
                allow_noncovering=options.get('allow_noncovering', False),
            )
            target = soft_set if self.soft_set_level else SoftCoveringSpace(
                soft_set
            )
            data = self.perform(target, **options)
        except (SoftRoughError, ParseError, ValidationError) as error:
            raise CommandError(describe_error(error), returncode=INPUT_ERROR)
        self.emit(data, options['as_json'])
        self.after_emit(data, **options)

    def perform(self, target, **options):
        raise NotImplementedError

    def after_emit(self, data, **options):
        pass

    def emit(self, data, as_json):
        self.stdout.write(render_json(data) if as_json else render_text(data))
