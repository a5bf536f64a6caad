"""
Versioned JSON schema for parameters, steady states and Liouvillians.

Complex numbers are written as [re, im] pairs; matrices are lists of rows.
"""

import numpy as np
from rest_framework import serializers

from reset_machine.dynamics import Liouvillian, SteadyState
from reset_machine.exceptions import BaseError
from reset_machine.linalg import BlochVector, DensityMatrix, bloch_from_density
from reset_machine.model import ModelParams

SCHEMA_VERSION = 1


class ComplexMatrixField(serializers.Field):
    """
    A square complex matrix as nested lists of [re, im] pairs.
    """

    default_error_messages = {
        'not_square': 'Expected a square list of rows.',
        'bad_dimension': 'Expected a {expected} x {expected} matrix, got {actual} x {actual}.',
        'bad_entry': 'Every entry must be a pair [re, im] of finite numbers.',
    }

    def __init__(self, dim=None, **kwargs):
        self.dim = dim
        super().__init__(**kwargs)

    def to_representation(self, value):
        matrix = np.asarray(value, dtype=complex)
        return [[[float(entry.real), float(entry.imag)] for entry in row] for row in matrix]

    def to_internal_value(self, data):
        if not isinstance(data, list) or not data or any(
                not isinstance(row, list) or len(row) != len(data) for row in data):
            self.fail('not_square')
        if self.dim is not None and len(data) != self.dim:
            self.fail('bad_dimension', expected=self.dim, actual=len(data))

        try:
            matrix = np.array(
                [[complex(float(entry[0]), float(entry[1])) for entry in row] for row in data],
                dtype=complex,
            )
        except (TypeError, ValueError, IndexError, KeyError):
            self.fail('bad_entry')
        if any(len(entry) != 2 for row in data for entry in row) or not np.all(np.isfinite(matrix)):
            self.fail('bad_entry')
        return matrix


class BlochVectorField(serializers.ListField):
    child = serializers.FloatField()
    default_error_messages = {
        'bad_length': 'Expected three components (x, y, z), got {length}.',
    }

    def __init__(self, **kwargs):
        kwargs.setdefault('min_length', 3)
        kwargs.setdefault('max_length', 3)
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        components = super().to_internal_value(data)
        if len(components) != 3:
            self.fail('bad_length', length=len(components))
        return BlochVector(*components)


# pylint: disable=abstract-method
class ModelParamsSerializer(serializers.Serializer):
    g = serializers.FloatField()
    t1 = serializers.FloatField()
    t2 = serializers.FloatField()
    p1 = serializers.FloatField()
    p2 = serializers.FloatField()
    omega = serializers.FloatField(default=1.0)

    def validate(self, attrs):
        try:
            ModelParams(**attrs)
        except BaseError as e:
            raise serializers.ValidationError(str(e))
        return attrs

    def create(self, validated_data):
        return ModelParams(**validated_data)


def _density_matrix(matrix):
    try:
        return DensityMatrix(matrix)
    except BaseError as e:
        raise serializers.ValidationError(str(e))


# pylint: disable=abstract-method
class SteadyStateSerializer(serializers.Serializer):
    """
    Steady state of the two-qubit machine, schema version 1.
    """

    schema_version = serializers.IntegerField(default=SCHEMA_VERSION, min_value=SCHEMA_VERSION,
                                              max_value=SCHEMA_VERSION)
    params = ModelParamsSerializer()
    rho12 = ComplexMatrixField(dim=4)
    rho1 = ComplexMatrixField(dim=2)
    rho2 = ComplexMatrixField(dim=2)
    bloch1 = BlochVectorField()
    bloch2 = BlochVectorField()
    residual = serializers.FloatField(min_value=0)
    warnings = serializers.ListField(child=serializers.CharField(), default=list)

    def validate_rho12(self, value):
        return _density_matrix(value)

    def validate_rho1(self, value):
        return _density_matrix(value)

    def validate_rho2(self, value):
        return _density_matrix(value)

    def validate(self, attrs):
        for name, bloch in (('rho1', 'bloch1'), ('rho2', 'bloch2')):
            expected = np.array(bloch_from_density(attrs[name]))
            if np.max(np.abs(expected - np.array(attrs[bloch]))) > 1e-9:
                raise serializers.ValidationError(f'{bloch} does not match {name}.')
        return attrs

    def create(self, validated_data):
        return SteadyState(
            params=ModelParams(**validated_data['params']),
            rho12=validated_data['rho12'],
            rho1=validated_data['rho1'],
            rho2=validated_data['rho2'],
            bloch1=validated_data['bloch1'],
            bloch2=validated_data['bloch2'],
            residual=validated_data['residual'],
            warnings=tuple(validated_data['warnings']),
        )


# pylint: disable=abstract-method
class LiouvillianSerializer(serializers.Serializer):
    schema_version = serializers.IntegerField(default=SCHEMA_VERSION, min_value=SCHEMA_VERSION,
                                              max_value=SCHEMA_VERSION)
    params = ModelParamsSerializer()
    matrix = ComplexMatrixField(dim=16)

    def create(self, validated_data):
        return Liouvillian(params=ModelParams(**validated_data['params']), matrix=validated_data['matrix'])
