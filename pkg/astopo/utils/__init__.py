"""Utility functions for astopo."""

from .validation import (
    validate_positive,
    validate_non_negative,
    validate_probability,
    validate_unit_interval,
    validate_open_unit_interval,
    validate_integer_range,
    validate_choice,
    format_parameter_summary
)

__all__ = [
    "validate_positive",
    "validate_non_negative",
    "validate_probability",
    "validate_unit_interval",
    "validate_open_unit_interval",
    "validate_integer_range",
    "validate_choice",
    "format_parameter_summary"
]
