from approximations.management.base import SpaceCommand  # isort: skip
from approximations.serializers import (  # isort: skip
    AxiomReportSerializer, TopologySerializer)
from approximations.topology import (  # isort: skip
    GENERATED_ORIGINS, Origin, closed_system_report, generate)


class Command(SpaceCommand):
    help = 'Generate a topology from the soft covering.'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--method',
            choices=GENERATED_ORIGINS,
            default=Origin.SUBBASE.value,
        )

    def perform(self, space, **options):
        family = generate(space, options['method'])
        data = dict(TopologySerializer(family).data)
        if family.origin is Origin.UPPER_FIXED:
            data['closed_system'] = AxiomReportSerializer(
                closed_system_report(family)
            ).data
        return data
