from .errors import DFormError, DomainError, ResourceLimitError, ParseError, \
    UnknownIdentifierError, DegenerateCellError, NumericError, SolverError
from .fileio import is_str, check_file_exist, mkdir_or_exist, dump, dumps


__all__ = ['DFormError', 'DomainError', 'ResourceLimitError', 'ParseError',
           'UnknownIdentifierError', 'DegenerateCellError', 'NumericError',
           'SolverError', 'is_str', 'check_file_exist', 'mkdir_or_exist',
           'dump', 'dumps']
