"""领域异常。exit_code 与命令行退出码一致：1 不可能/不等价，2 未决/规模过大。"""


class MpsError(Exception):
    exit_code = 1


class FormatError(MpsError):
    """JSON 输入格式错误"""


class NotHermitianUnitary(MpsError):
    pass


class NotMps(MpsError):
    pass


class IndexOutOfRange(MpsError):
    pass


class TrivialMatrix(MpsError):
    """S = ±I（或 U = −I），无参数化"""


class DegenerateSpec(MpsError):
    pass


class DecompositionResidual(MpsError):
    pass


class OutOfRange(MpsError):
    pass


class NotHadamard(MpsError):
    pass


class NotConference(MpsError):
    pass


class NotHermitianConference(MpsError):
    pass


class NoRealRoot(MpsError):
    pass


class DesignInvalid(MpsError):
    pass


class ParameterMismatch(MpsError):
    pass


class BadOrder(MpsError):
    pass


class NotNormalizable(MpsError):
    pass


class BlockTooSmall(MpsError):
    pass


class StructureViolation(MpsError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotInRange(MpsError):
    pass


class NonConstantRowSum(StructureViolation):
    pass


class WrongRatio(MpsError):
    pass


class TooLarge(MpsError):
    exit_code = 2


class BudgetExceeded(MpsError):
    exit_code = 2

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = list(partial or [])
