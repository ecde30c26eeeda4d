#
# Exception hierarchy
#

__all__ = [
    'FlagsphereError',
    'InputError',
    'ParseError',
    'PreconditionError',
    'DomainError',
    'ResourceError',
]


class FlagsphereError(Exception):
    """ Base class of every error raised by flagsphere. """


class InputError(FlagsphereError, ValueError):
    """ Unknown or stale labels and malformed arguments. """


class ParseError(InputError):
    """
    Malformed graph or complex file.

    Args:
        message (str): Description of the problem
        lineno (int, optional): 1-based line number of the offending line; Default **None**
    """
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f'line {lineno}: {message}'
        super().__init__(message)
        self.lineno = lineno


class PreconditionError(InputError):
    """ The arguments are well formed, but violate a precondition of the operation. """


class DomainError(FlagsphereError, ValueError):
    """ The input lies outside the mathematical domain of the operation. """


class ResourceError(FlagsphereError, RuntimeError):
    """ A resource guard (eg. the face-count guard) was exceeded. """
