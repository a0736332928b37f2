from approximations.covering import (  # isort: skip
    minimal_description, minimal_descriptions)
from approximations.management.base import SpaceCommand  # isort: skip
from approximations.serializers import (  # isort: skip
    MinimalDescriptionSerializer)


class Command(SpaceCommand):
    help = 'Minimal descriptions of one element or of every element.'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--element',
            help='Describe only this element.',
        )

    def perform(self, space, **options):
        if options['element']:
            descriptions = [minimal_description(space, options['element'])]
        else:
            descriptions = minimal_descriptions(space)
        return MinimalDescriptionSerializer(descriptions, many=True).data
