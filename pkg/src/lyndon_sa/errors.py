from __future__ import annotations

from dataclasses import dataclass


class ExitCodes:
    OK = 0
    VERIFY_FAILED = 1
    USAGE_ERROR = 2
    BAD_INPUT = 10
    WIDTH_TOO_SMALL = 11


@dataclass(frozen=True)
class LyndonSaError(Exception):
    message: str
    code: int = ExitCodes.USAGE_ERROR

    def __str__(self) -> str:  # pragma: no cover
        return self.message


class InputContainsNulError(LyndonSaError):
    def __init__(self, message: str = "INPUT_CONTAINS_NUL: input contains a zero byte; use the remap policy"):
        super().__init__(message=message, code=ExitCodes.BAD_INPUT)


class InputTooLargeError(LyndonSaError):
    def __init__(self, message: str = "INPUT_TOO_LARGE: text exceeds the 64-bit index bound"):
        super().__init__(message=message, code=ExitCodes.BAD_INPUT)


class WidthTooSmallError(LyndonSaError):
    def __init__(self, message: str = "WIDTH_TOO_SMALL: text does not fit the requested index width"):
        super().__init__(message=message, code=ExitCodes.WIDTH_TOO_SMALL)


class EmptyWordError(LyndonSaError):
    def __init__(self, message: str = "EMPTY_WORD: a Lyndon word is nonempty"):
        super().__init__(message=message, code=ExitCodes.USAGE_ERROR)


class OracleSizeError(LyndonSaError):
    def __init__(self, message: str = "text too large for a brute-force oracle"):
        super().__init__(message=message, code=ExitCodes.USAGE_ERROR)


class SaFormatError(LyndonSaError):
    def __init__(self, message: str = "malformed suffix array file"):
        super().__init__(message=message, code=ExitCodes.USAGE_ERROR)
