from django.conf import settings
from rest_framework import serializers

from .sets import Universe
from .softsets import SoftSet, is_covering

NAME_PATTERN = r'^[^\s,{}]+$'


class SubsetField(serializers.Field):
    def to_representation(self, value):
        return list(value)


class FamilyField(serializers.Field):
    def to_representation(self, value):
        return [list(block) for block in value]


class SpaceDocumentSerializer(serializers.Serializer):
    universe = serializers.ListField(
        child=serializers.RegexField(
            NAME_PATTERN,
            error_messages={
                'invalid': 'element names must be nonempty and contain no '
                           'whitespace, commas or braces.',
            },
        ),
        allow_empty=False,
    )
    blocks = serializers.DictField(
        child=serializers.ListField(
            child=serializers.CharField(trim_whitespace=False),
            allow_empty=True,
        ),
    )

    def validate_universe(self, value):
        duplicates = sorted({name for name in value if value.count(name) > 1})
        if duplicates:
            raise serializers.ValidationError(
                [f'duplicate element "{name}"' for name in duplicates]
            )
        limit = settings.SOFTROUGH['MAX_UNIVERSE']
        if len(value) > limit:
            raise serializers.ValidationError(
                f'universe holds {len(value)} elements, at most {limit} '
                'are supported.'
            )
        return value

    def validate(self, data):
        known = set(data['universe'])
        unknown = {
            parameter: [
                f'unknown element "{name}"' for name in names
                if name not in known
            ]
            for parameter, names in data['blocks'].items()
        }
        unknown = {key: value for key, value in unknown.items() if value}
        if unknown:
            raise serializers.ValidationError({'blocks': unknown})
        soft_set = SoftSet.from_mapping(
            Universe(data['universe']), data['blocks'],
        )
        if not self.context.get('allow_noncovering', False):
            problem = covering_problem(soft_set)
            if problem:
                raise serializers.ValidationError(
                    {'blocks': [f'not a covering soft set: {problem}']}
                )
        data['soft_set'] = soft_set
        return data

    def create(self, validated_data):
        return validated_data['soft_set']

    def to_representation(self, instance):
        return {
            'universe': list(instance.universe),
            'blocks': {
                parameter: list(image)
                for parameter, image in instance.assignment.items()
            },
        }


def covering_problem(soft_set):
    if is_covering(soft_set):
        return ''
    empty = [
        parameter for parameter, image in soft_set.assignment.items()
        if not image
    ]
    if empty:
        return f'empty block for {", ".join(empty)}'
    missing = soft_set.universe.full()
    for image in soft_set.images:
        missing = missing - image
    return f'elements {missing} are not covered'


class ApproximationSerializer(serializers.Serializer):
    set = SubsetField()
    lower = SubsetField()
    upper = SubsetField()
    positive = SubsetField()
    negative = SubsetField()
    boundary = SubsetField()
    definable = serializers.BooleanField()
    classification = serializers.SerializerMethodField()

    def get_classification(self, obj):
        return 'definable' if obj['definable'] else 'rough'


class MinimalDescriptionSerializer(serializers.Serializer):
    element = serializers.CharField()
    blocks = FamilyField()


class AxiomReportSerializer(serializers.Serializer):
    holds = serializers.BooleanField()
    axiom = serializers.CharField()
    witness = FamilyField()


class TopologySerializer(serializers.Serializer):
    method = serializers.CharField(source='origin.value')
    opens = FamilyField()
    is_topology = AxiomReportSerializer(source='axioms')


class TopologicalOperatorsSerializer(serializers.Serializer):
    set = SubsetField()
    interior = SubsetField()
    closure = SubsetField()
    boundary = SubsetField()


class SoftSetCheckSerializer(serializers.Serializer):
    full = serializers.BooleanField()
    covering = serializers.BooleanField()
    partition = serializers.BooleanField()
    intersection_union_closed = serializers.BooleanField(allow_null=True)
    witness = FamilyField()
