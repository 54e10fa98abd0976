class Genus3Error(ValueError):
    """Base class for every domain error raised by the engines."""


class ParityError(Genus3Error):
    pass


class DegreeMismatchError(Genus3Error):
    pass


class DimensionMismatchError(Genus3Error):
    pass


class RangeError(Genus3Error):
    pass


class UnsupportedGenusError(Genus3Error):
    pass


class EnumerationBoundError(Genus3Error):
    pass


class FixtureError(Genus3Error):
    """Fixture parse or schema failure; the message names file, row and field."""

    def __init__(self, message: str, path=None, row=None, field=None):
        location = []
        if path is not None:
            location.append(str(path))
        if row is not None:
            location.append(f"row {row}")
        if field is not None:
            location.append(f"field '{field}'")
        self.path = path
        self.row = row
        self.field = field
        prefix = ", ".join(location)
        super().__init__(f"{prefix}: {message}" if prefix else message)
