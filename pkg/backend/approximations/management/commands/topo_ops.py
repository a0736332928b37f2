from approximations.management.base import SpaceCommand  # isort: skip
from approximations.serializers import (  # isort: skip
    TopologicalOperatorsSerializer)
from approximations.topology import (  # isort: skip
    GENERATED_ORIGINS, Origin, boundary, closure, generate, interior)


class Command(SpaceCommand):
    help = 'Interior, closure and boundary in a generated topology.'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--set',
            required=True,
            dest='target',
            help='Comma separated element names, e.g. h1,h4,h5.',
        )
        parser.add_argument(
            '--method',
            choices=GENERATED_ORIGINS,
            default=Origin.SUBBASE.value,
        )

    def perform(self, space, **options):
        x = space.universe.parse(options['target'])
        topology = generate(space, options['method'])
        return TopologicalOperatorsSerializer({
            'set': x,
            'interior': interior(topology, x),
            'closure': closure(topology, x),
            'boundary': boundary(topology, x),
        }).data
