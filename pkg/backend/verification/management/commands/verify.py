from django.core.management.base import CommandError

from approximations.management.base import (  # isort: skip
    INPUT_ERROR, SpaceCommand)
from verification.checkers import check_space  # isort: skip
from verification.properties import CATALOG  # isort: skip
from verification.reports import Mode  # isort: skip
from verification.serializers import (  # isort: skip
    VerificationReportSerializer)

VIOLATION = 1


class Command(SpaceCommand):
    help = ('Check the catalog of approximation laws on a space. Failures '
            'of laws that are known not to hold are reported but expected.')

    def add_command_arguments(self, parser):
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument(
            '--exhaustive',
            action='store_true',
            help='Sweep every subset or pair of subsets (default).',
        )
        mode.add_argument(
            '--samples',
            type=int,
            help='Check this many random subsets or pairs instead.',
        )
        parser.add_argument('--seed', type=int)
        parser.add_argument(
            '--property',
            action='append',
            dest='properties',
            metavar='ID',
            help=(
                'Restrict to a property, given by a short code such as T15.1 '
                f'or one of: {", ".join(CATALOG)}.'
            ),
        )
        parser.add_argument(
            '--workers',
            type=int,
            help='Worker processes for pair sweeps.',
        )

    def perform(self, space, **options):
        if options['samples'] is None:
            if options['seed'] is not None:
                raise CommandError(
                    '--seed needs --samples', returncode=INPUT_ERROR,
                )
            mode = Mode()
        else:
            if options['samples'] < 1:
                raise CommandError(
                    '--samples must be positive', returncode=INPUT_ERROR,
                )
            mode = Mode.sampled(options['samples'], options['seed'])
        report = check_space(
            space,
            mode,
            properties=options['properties'],
            workers=options['workers'],
        )
        return VerificationReportSerializer(report).data

    def after_emit(self, data, **options):
        if data['violated']:
            raise CommandError(
                f'violated: {", ".join(data["violated"])}',
                returncode=VIOLATION,
            )
