# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this file,
# You can obtain one at http://mozilla.org/MPL/2.0/.
"""

Error types raised by hyperlift.

Everything derives from HyperliftError so that scripts can map failures
onto exit codes without catching unrelated exceptions.

"""


class HyperliftError(Exception):
    """Base class for all hyperlift errors."""


class RangeError(HyperliftError, ValueError):
    """An integer argument is outside the supported range."""


class FieldError(HyperliftError, ValueError):
    """Invalid field order or field element, or inverse of zero."""


class ShapeError(HyperliftError, ValueError):
    """Colorings or lifting specs whose (n, r, q) do not line up."""


class DomainError(HyperliftError, ValueError):
    """The operation is not defined for these arguments."""


class ResourceLimitError(HyperliftError):
    """A configured size or enumeration budget would be exceeded."""


class CertificateError(HyperliftError):
    """A base coloring failed its own avoidance check."""


class UsageError(HyperliftError):
    """Bad command-line usage."""


class ColoringParseError(HyperliftError, ValueError):
    """A coloring file could not be parsed.

    The 1-based ``line`` and ``column`` of the offending token are kept on
    the exception and included in its message.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            if column is not None:
                message = "line %d, column %d: %s" % (line, column, message)
            else:
                message = "line %d: %s" % (line, message)
        super(ColoringParseError, self).__init__(message)
