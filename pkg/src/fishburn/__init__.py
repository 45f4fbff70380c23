"""Exact combinatorics of ascent sequences and their Fishburn-counted relatives."""

from .errors import DomainError, ResourceLimitError, UsageError
from .seqcore import ClassId, Perm, Seq, enumerate_class, is_member

__version__ = "0.1.0"

__all__ = [
    "ClassId",
    "DomainError",
    "Perm",
    "ResourceLimitError",
    "Seq",
    "UsageError",
    "enumerate_class",
    "is_member",
    "__version__",
]
