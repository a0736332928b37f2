from rest_framework import serializers

from approximations.serializers import SubsetField  # isort: skip


class WitnessSerializer(serializers.Serializer):
    x = SubsetField()
    y = SubsetField()
    lhs = SubsetField()
    rhs = SubsetField()
    relation = serializers.CharField()
    kind = serializers.CharField()
    note = serializers.CharField()


class ReportEntrySerializer(serializers.Serializer):
    property = serializers.CharField(source='property.value')
    claim = serializers.CharField()
    status = serializers.CharField(source='status.value')
    expected_to_fail = serializers.BooleanField()
    vacuous = serializers.BooleanField()
    examined = serializers.IntegerField()
    elapsed = serializers.SerializerMethodField()
    sides = serializers.ListField(child=serializers.CharField())
    witness = WitnessSerializer(allow_null=True)

    def get_elapsed(self, obj):
        return round(obj.elapsed, 3)


class VerificationReportSerializer(serializers.Serializer):
    space = serializers.CharField()
    mode = serializers.CharField()
    examined = serializers.IntegerField()
    elapsed = serializers.SerializerMethodField()
    violated = serializers.SerializerMethodField()
    skipped = serializers.ListField(child=serializers.CharField())
    entries = ReportEntrySerializer(many=True)

    def get_elapsed(self, obj):
        return round(obj.elapsed, 3)

    def get_violated(self, obj):
        return [entry.property.value for entry in obj.violations()]
