"""Exception types shared across the package."""


class JackLRError(Exception):
    pass


class UnequalSize(JackLRError, ValueError):
    pass


class CellOutside(JackLRError, ValueError):
    pass


class PartitionParseError(JackLRError, ValueError):
    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse partition {text!r} at position {position}: {reason}")


class PolyParseError(JackLRError, ValueError):
    pass


class PoleAtPoint(JackLRError, ZeroDivisionError):
    pass


class BasisMismatch(JackLRError, ValueError):
    pass


class NvarsMismatch(JackLRError, ValueError):
    pass


class UnstableTruncation(JackLRError, ValueError):
    pass


class LengthExceedsVars(JackLRError, ValueError):
    pass


class InvalidParameters(JackLRError, ValueError):
    pass


class RankExceeded(JackLRError, ValueError):
    pass


class SizeMismatch(JackLRError, ValueError):
    pass


class ConjecturalCase(JackLRError, ValueError):
    pass
