"""sympq Exception"""


class SympqException(Exception):
    """sympq Exception 基类"""

    def __init__(self, message: str = "出现了错误,但未说明原因") -> None:
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


class StructuralError(SympqException):
    """矩阵形状或反对称性不符合要求"""

    def __init__(self, message: str = "矩阵结构不符合要求") -> None:
        super().__init__(message)


class DivisibilityError(SympqException):
    """精确除法存在非零余项"""

    def __init__(self, message: str = "精确除法余项非零") -> None:
        super().__init__(message)


class DomainError(SympqException, ValueError):
    """参数不满足前置条件"""

    def __init__(self, message: str = "参数超出定义域") -> None:
        super().__init__(message)


class PoleError(DomainError):
    """求值点落在极点上"""

    def __init__(self, message: str = "求值点位于极点") -> None:
        super().__init__(message)


class NotInSpanError(SympqException):
    """基展开后残差非零"""

    def __init__(self, message: str = "元素不在给定基的张成空间内") -> None:
        super().__init__(message)


class ConsistencyError(SympqException):
    """基变换方程组奇异"""

    def __init__(self, message: str = "基变换方程组奇异") -> None:
        super().__init__(message)


class ParseError(SympqException, ValueError):
    """文本解析失败"""

    def __init__(self, text: str = "", message: str = "无法解析输入") -> None:
        super().__init__(f"{message}: {text!r}" if text else message)
        self.text = text
