# -*- coding: utf-8 -*-
# Error hierarchy shared by every module and by the command line.
# referring to TimerError in libdform/tools/runner/timer.py


class DFormError(Exception):
    """Base error, carries a machine-parsable code and a cli exit status"""
    code = 'E_GENERIC'
    exit_code = 3

    def __init__(self, message):
        self.message = message
        super(DFormError, self).__init__(message)

    def __str__(self):
        return 'error[{}]: {}'.format(self.code, self.message)


class DomainError(DFormError):
    code = 'E_DOMAIN'
    exit_code = 2


class ResourceLimitError(DFormError):
    code = 'E_RESOURCE'
    exit_code = 2


class ParseError(DFormError):
    code = 'E_PARSE'
    exit_code = 2

    def __init__(self, message, offset=0, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        if self.expected:
            message = '{} at offset {} (expected one of: {})'.format(
                message, offset, ', '.join(sorted(self.expected)))
        else:
            message = '{} at offset {}'.format(message, offset)
        super(ParseError, self).__init__(message)


class UnknownIdentifierError(ParseError):
    code = 'E_IDENT'


class DegenerateCellError(DFormError):
    code = 'E_DEGENERATE'


class NumericError(DFormError):
    code = 'E_NUMERIC'


class SolverError(DFormError):
    code = 'E_SOLVER'

    def __init__(self, message, best_value=None):
        self.best_value = best_value
        super(SolverError, self).__init__(message)
