from approximations.covering import soft_regions  # isort: skip
from approximations.management.base import SpaceCommand  # isort: skip
from approximations.serializers import ApproximationSerializer  # isort: skip


class Command(SpaceCommand):
    help = 'Soft covering lower and upper approximations with regions.'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--set',
            required=True,
            dest='target',
            help='Comma separated element names, e.g. h2,h3,h4.',
        )

    def perform(self, space, **options):
        x = space.universe.parse(options['target'])
        report = soft_regions(space, x)
        return ApproximationSerializer({'set': x, **vars(report)}).data
