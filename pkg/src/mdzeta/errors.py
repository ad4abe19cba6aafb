"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`MdzetaError`;
the CLI maps the subclasses onto exit codes via ``exit_code``.
"""


class MdzetaError(Exception):
    exit_code = 1


class ParseError(MdzetaError, ValueError):
    exit_code = 2


class NotSquarefree(MdzetaError, ValueError):
    exit_code = 3


class DegenerateField(MdzetaError, ValueError):
    exit_code = 3


class FieldMismatch(MdzetaError, ValueError):
    exit_code = 3


class WrongSignature(MdzetaError, ValueError):
    exit_code = 3


class NotTotallyPositive(MdzetaError, ValueError):
    exit_code = 3


class DependentGenerators(MdzetaError, ValueError):
    exit_code = 3


class DomainMismatch(MdzetaError, ValueError):
    exit_code = 3


class MalformedDiagram(MdzetaError, ValueError):
    pass


class UnsupportedDepth(MdzetaError, ValueError):
    exit_code = 3


class Divergent(MdzetaError, ArithmeticError):
    exit_code = 4


class CacheError(MdzetaError, OSError):
    exit_code = 5
