"""
Validation utilities for astopo configuration objects.
"""
from typing import Iterable

from ..core.errors import ConfigError


def validate_positive(value: float, name: str) -> None:
    """Validate that a value is positive."""
    if not value > 0:
        raise ConfigError(f"{name} must be positive, got {value}")


def validate_non_negative(value: float, name: str) -> None:
    """Validate that a value is non-negative."""
    if not value >= 0:
        raise ConfigError(f"{name} must be non-negative, got {value}")


def validate_probability(value: float, name: str) -> None:
    """Validate that a value is a valid probability [0, 1]."""
    if not 0 <= value <= 1:
        raise ConfigError(f"{name} must be in [0, 1], got {value}")


def validate_unit_interval(value: float, name: str) -> None:
    """Validate that a value lies in the half-open interval (0, 1]."""
    if not 0 < value <= 1:
        raise ConfigError(f"{name} must be in (0, 1], got {value}")


def validate_open_unit_interval(value: float, name: str) -> None:
    """Validate that a value lies strictly between 0 and 1."""
    if not 0 < value < 1:
        raise ConfigError(f"{name} must be in (0, 1), got {value}")


def validate_integer_range(value: int, name: str, low: int, high: float = float("inf")) -> None:
    """Validate an integer parameter against an inclusive range."""
    if isinstance(value, bool) or int(value) != value:
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    if not low <= value <= high:
        bound = f">= {low}" if high == float("inf") else f"in [{low}, {high}]"
        raise ConfigError(f"{name} must be {bound}, got {value}")


def validate_choice(value: str, valid: Iterable[str], name: str) -> None:
    """Validate that a value is one of the allowed choices."""
    valid = list(valid)
    if value not in valid:
        raise ConfigError(f"{name} must be one of {valid}, got '{value}'")


def format_parameter_summary(config) -> str:
    """Format a configuration object for display."""
    lines = []
    for field, value in config.__dict__.items():
        if isinstance(value, float):
            lines.append(f"  {field:<16} = {value:8.4f}")
        else:
            lines.append(f"  {field:<16} = {value}")
    return "\n".join(lines)
