class ScintfadeError(Exception):
    """Base class for errors raised by scintfade."""


class ValidationError(ScintfadeError, ValueError):
    """An input falls outside the bounds the model accepts.

    ``field`` names the offending input; ``step`` is set when the error is
    raised from inside :func:`scintfade.model.predict`.
    """

    def __init__(self, message, field=None, step=None):
        super().__init__(message)
        self.field = field
        self.step = step


class UnsupportedRegimeError(ValidationError):
    """Elevation at or below 4 degrees."""

    def __init__(self, message, step=None):
        super().__init__(message, field="elevation_deg", step=step)


class CsvFormatError(ValidationError):
    """A CSV row could not be parsed."""

    def __init__(self, message, line=None, field=None):
        super().__init__(message, field=field)
        self.line = line


class CompletenessError(ValidationError):
    """A site is missing a month or has one twice."""

    def __init__(self, message, site=None, month=None):
        super().__init__(message, field="month")
        self.site = site
        self.month = month
