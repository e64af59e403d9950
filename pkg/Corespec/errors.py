# Copyright (C) 2026 corespec contributors, see AUTHORS for details.
# SPDX-License-Identifier: GPL-2.0-or-later

"""Exceptions raised by corespec. The CLI maps them onto exit codes."""


class CorespecError(Exception):
    "The parent class of all corespec errors"


class ParseError(CorespecError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FormatError(CorespecError):
    "Unsupported or unrecognised file header"


class ConfigError(CorespecError):
    "Invalid command line configuration"


class ContractViolation(CorespecError, ValueError):
    "A library precondition was not met"


class UndefinedCorrelation(CorespecError, ArithmeticError):
    "Rank correlation on a sample whose ranks have no variance"


class ResourceLimitExceeded(CorespecError):
    "An enumeration grew past its configured guard"
