from .sympq_exception import (
    ConsistencyError,
    DivisibilityError,
    DomainError,
    NotInSpanError,
    ParseError,
    PoleError,
    StructuralError,
    SympqException,
)

__all__ = [
    "ConsistencyError",
    "DivisibilityError",
    "DomainError",
    "NotInSpanError",
    "ParseError",
    "PoleError",
    "StructuralError",
    "SympqException",
]
