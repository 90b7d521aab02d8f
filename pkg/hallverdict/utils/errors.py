"""exceptions raised by the library; the management commands map them to exit code 2"""


class HallVerdictError(Exception):
    """base class for every error the library raises on purpose"""


class InvalidInput(HallVerdictError):
    """an argument lies outside the domain of an operation"""


class CapExceeded(HallVerdictError):
    """a configured work or size budget was exhausted"""


class NotSimple(HallVerdictError):
    """the descriptor does not denote a finite simple group"""


class InconsistentClass(HallVerdictError):
    """a custom class rule accepted a group outside its prime spectrum"""


class HypothesisViolated(HallVerdictError):
    """a table lookup was asked outside the hypothesis the table was derived under"""


class UnrecognizedSimpleGroup(HallVerdictError):
    """a nonabelian composition factor matched no known simple group"""


class DescriptorParseError(HallVerdictError):
    """a group descriptor or structure string could not be parsed"""


class GeneratorFileError(HallVerdictError):
    """a permutation generator file is malformed"""
