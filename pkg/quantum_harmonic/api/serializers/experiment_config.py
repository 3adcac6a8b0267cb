from collections.abc import Mapping
from dataclasses import replace

from rest_framework import serializers

from kernel.errors.custom_error import flatten_validation_detail
from quantum_harmonic.conf import qha_setting
from quantum_harmonic.errors import ConfigValidationError, UnknownSymbolError
from quantum_harmonic.models import (
    ConventionParams,
    ExperimentConfig,
    FockSpec,
    Grid,
)
from quantum_harmonic.models.helper.enums import Experiment_Choices
from quantum_harmonic.quantize.symbols import parse_symbol

PRESET_CHOICES = ("audited", "half-phase", "unit-phase")


def _int_list(*values, min_value=None):
    return serializers.ListField(
        child=serializers.IntegerField(min_value=min_value),
        default=lambda: list(values),
        allow_empty=False,
    )


def _float_list(*values):
    return serializers.ListField(
        child=serializers.FloatField(min_value=0.0),
        default=lambda: list(values),
        allow_empty=False,
    )


class StrictSerializer(serializers.Serializer):
    """
    Serializer that rejects undeclared keys and fills absent nested
    sections with their defaults.
    """

    def to_internal_value(self, data):
        if isinstance(data, Mapping):
            unknown = sorted(set(data) - set(self.fields))
            if unknown:
                raise serializers.ValidationError(
                    {key: ["Unknown field."] for key in unknown}
                )
            sections = {
                name: {}
                for name, field in self.fields.items()
                if isinstance(field, serializers.Serializer)
            }
            data = {**sections, **data}
        return super().to_internal_value(data)


class SpecSerializer(StrictSerializer):
    n = serializers.IntegerField(min_value=1, max_value=3, default=1)
    D = serializers.IntegerField(min_value=4, default=64)

    def validate(self, attrs):
        n, dim = attrs["n"], attrs["D"]
        cap = qha_setting("MAX_PRODUCT_DIM")
        if n > 1 and dim**n > cap:
            raise serializers.ValidationError(
                {"D": [f"product dimension {dim}^{n} exceeds cap {cap}"]}
            )
        return attrs


class GridSerializer(StrictSerializer):
    L = serializers.FloatField(min_value=1.0, default=10.0)
    N = serializers.IntegerField(min_value=4, max_value=1024, default=128)

    def validate_N(self, value):
        if value & (value - 1):
            raise serializers.ValidationError("N must be a power of two.")
        return value


class ConventionsSerializer(StrictSerializer):
    preset = serializers.ChoiceField(choices=PRESET_CHOICES, default="audited")
    # Overrides the preset's Haar normalization (negative controls).
    haar_normalization = serializers.FloatField(
        min_value=1e-12, required=False, allow_null=True, default=None
    )


class TolerancesSerializer(StrictSerializer):
    ccr = serializers.FloatField(min_value=0.0, default=1e-8)
    parity = serializers.FloatField(min_value=0.0, default=1e-12)
    shift = serializers.FloatField(min_value=0.0, default=1e-8)
    shift_alpha0 = serializers.FloatField(min_value=0.0, default=1e-10)
    off_shift = serializers.FloatField(min_value=0.0, default=1e-10)
    shift_limit = serializers.FloatField(min_value=0.0, default=1e-2)
    even_odd = serializers.FloatField(min_value=0.0, default=1e-12)
    index = serializers.FloatField(min_value=0.0, default=1e-8)
    modulation = serializers.FloatField(min_value=0.0, default=1e-8)
    shift_floor = serializers.FloatField(min_value=0.0, default=0.5)
    contrast = serializers.FloatField(min_value=0.0, default=1e6)
    localization = serializers.FloatField(min_value=0.0, default=1e-6)
    decay = serializers.FloatField(min_value=0.0, default=1e-3)
    flatness = serializers.FloatField(min_value=0.0, default=0.05)
    roundtrip = serializers.FloatField(min_value=0.0, default=1e-4)
    fop = serializers.FloatField(min_value=0.0, default=1e-3)
    twisted = serializers.FloatField(min_value=0.0, default=1e-3)
    twisted_oracle = serializers.FloatField(min_value=0.0, default=1e-6)
    delta_alignment = serializers.FloatField(min_value=0.0, default=0.99)
    conjugation = serializers.FloatField(min_value=0.0, default=1e-3)
    singular_values = serializers.FloatField(min_value=0.0, default=1e-12)
    rank = serializers.FloatField(min_value=0.0, default=1e-6)
    membership = serializers.FloatField(min_value=0.0, default=1e-6)
    audit = serializers.FloatField(min_value=0.0, default=1e-3)


class OperatorFamilySerializer(StrictSerializer):
    """Seeded random operators supported on the leading basis vectors."""

    count = serializers.IntegerField(min_value=1, default=20)
    rank = serializers.IntegerField(min_value=1, default=5)
    support = serializers.IntegerField(min_value=1, default=3)
    dim = serializers.IntegerField(min_value=8, default=48)

    def validate(self, attrs):
        if attrs["support"] > attrs["dim"] // 2:
            raise serializers.ValidationError(
                {"support": ["support must stay within dim / 2"]}
            )
        return attrs


class IndexFamilySerializer(StrictSerializer):
    symbol = serializers.CharField(default="winding:1")
    dims = _int_list(200, 400, min_value=16)
    expected = serializers.IntegerField(default=-1)

    def validate_symbol(self, value):
        try:
            parse_symbol(value)
        except UnknownSymbolError as exc:
            raise serializers.ValidationError(exc.message) from exc
        return value


class FamiliesSerializer(StrictSerializer):
    ccr_pairs = serializers.IntegerField(min_value=1, default=50)
    parity_points = serializers.IntegerField(min_value=1, default=20)
    point_radius = serializers.FloatField(min_value=0.0, default=1.5)
    shift_count = serializers.IntegerField(min_value=2, default=41)
    operators = OperatorFamilySerializer()
    index = IndexFamilySerializer()
    index_dim = serializers.IntegerField(min_value=32, default=200)
    windings = _int_list(1, 2, 3, min_value=1)
    even_indices = _int_list(2, -2, 0)
    congruence_ks = _int_list(2, 3, 4, min_value=2)
    counterexample_ks = _int_list(1, -1)
    modulation_dim = serializers.IntegerField(min_value=16, default=96)
    localization_radius = serializers.FloatField(min_value=1.0, default=3.0)
    localization_points = serializers.IntegerField(min_value=3, default=13)
    intersection_dim = serializers.IntegerField(min_value=4, default=16)
    # Rotation of each factor in turns: Theta_j = exp(2 pi i t_j).
    intersection_turns = _float_list(0.5, 0.0)
    twisted_pairs = serializers.IntegerField(min_value=1, default=10)
    twisted_points = serializers.IntegerField(min_value=4, default=64)
    smooth_symbols = serializers.IntegerField(min_value=1, default=10)
    symbol_degree = serializers.IntegerField(min_value=0, default=2)
    delta_eps = _float_list(0.2, 0.1, 0.05)
    audit_dim = serializers.IntegerField(min_value=8, default=32)

    def validate_intersection_turns(self, value):
        if len(value) != 2:
            raise serializers.ValidationError(
                "the probe takes exactly two factors."
            )
        return value

    def validate_intersection_dim(self, value):
        cap = qha_setting("MAX_PRODUCT_DIM")
        if value**2 > cap:
            raise serializers.ValidationError(
                f"product dimension {value}^2 exceeds cap {cap}"
            )
        return value

    def validate_twisted_points(self, value):
        if value & (value - 1):
            raise serializers.ValidationError("must be a power of two.")
        return value

    def validate_delta_eps(self, value):
        if any(eps <= 0 for eps in value):
            raise serializers.ValidationError("eps must be positive.")
        return sorted(value, reverse=True)


class OutputSerializer(StrictSerializer):
    dir = serializers.CharField(default=qha_setting("REPORT_DIR"))


class ExperimentConfigSerializer(StrictSerializer):
    """
    Schema of an experiment configuration file.

    Every section is optional; omitted fields take the defaults declared
    here, so an empty file describes the default suite.
    """

    seed = serializers.IntegerField(
        min_value=0, max_value=2**64 - 1, default=0
    )
    spec = SpecSerializer()
    grid = GridSerializer()
    conventions = ConventionsSerializer()
    tolerances = TolerancesSerializer()
    families = FamiliesSerializer()
    output = OutputSerializer()
    expect_fail = serializers.ListField(
        child=serializers.ChoiceField(choices=Experiment_Choices.values),
        default=list,
    )

    def create(self, validated_data):
        spec_data = validated_data["spec"]
        n, dim = spec_data["n"], spec_data["D"]
        spec = FockSpec(dim) if n == 1 else FockSpec.product(*[dim] * n)
        grid = Grid(validated_data["grid"]["L"], validated_data["grid"]["N"])
        conv_data = validated_data["conventions"]
        conventions = ConventionParams.preset(conv_data["preset"])
        if conv_data.get("haar_normalization") is not None:
            conventions = replace(
                conventions,
                haar_normalization=conv_data["haar_normalization"],
            )
        return ExperimentConfig(
            seed=validated_data["seed"],
            spec=spec,
            grid=grid,
            conventions=conventions,
            tolerances=dict(validated_data["tolerances"]),
            families=_plain(validated_data["families"]),
            output_dir=validated_data["output"]["dir"],
            expected_failures=tuple(validated_data["expect_fail"]),
            source=_plain(validated_data),
        )


def _plain(data):
    if isinstance(data, Mapping):
        return {key: _plain(value) for key, value in data.items()}
    if isinstance(data, list):
        return [_plain(value) for value in data]
    return data


def validate_config(data) -> ExperimentConfig:
    """
    Validate a parsed configuration mapping.

    Raises ``ConfigValidationError`` whose ``param`` is the dotted path of
    the first failing field (``grid.N``, ``families.operators.rank``, ...)
    and whose ``errors`` hold every failure.
    """
    serializer = ExperimentConfigSerializer(
        data={} if data is None else data
    )
    if not serializer.is_valid():
        errors = flatten_validation_detail(serializer.errors)
        path, messages = next(iter(errors.items()))
        raise ConfigValidationError(f"{path}: {messages[0]}", path, errors)
    return serializer.save()
