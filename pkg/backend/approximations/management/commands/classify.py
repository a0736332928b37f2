from approximations.covering import (  # isort: skip
    SoftCoveringSpace, is_intersection_union_closed)
from approximations.management.base import SpaceCommand  # isort: skip
from approximations.serializers import SoftSetCheckSerializer  # isort: skip
from approximations.softsets import (  # isort: skip
    is_covering, is_full, is_partition)


class Command(SpaceCommand):
    help = 'Classify the soft set: full, covering, partition, closure.'
    soft_set_level = True

    def perform(self, soft_set, **options):
        covering = is_covering(soft_set)
        closed = None
        witness = ()
        if covering:
            report = is_intersection_union_closed(SoftCoveringSpace(soft_set))
            closed = report.holds
            if report.witness is not None:
                witness = (report.witness.first, report.witness.second)
        return SoftSetCheckSerializer({
            'full': is_full(soft_set),
            'covering': covering,
            'partition': is_partition(soft_set),
            'intersection_union_closed': closed,
            'witness': witness,
        }).data
