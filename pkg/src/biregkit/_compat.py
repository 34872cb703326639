"""Compatibility shims for older Python interpreters."""

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11: mirror the stdlib StrEnum behavior
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self):
            return str.__str__(self)

        def __format__(self, format_spec):
            return str.__format__(str(self), format_spec)

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()

__all__ = ["StrEnum"]
