"""Finite-memory automata over infinite alphabets, with pumping certificates."""

from .afma import Afma1
from .alphabet import Chain, Const, SymSet, User, contents, format_word, parse_word
from .errors import WorkbenchError
from .fma import Fma
from .perm import StructuredPerm, complete_partial_injection

__all__ = [
    "Afma1", "Chain", "Const", "Fma", "StructuredPerm", "SymSet", "User", "WorkbenchError",
    "complete_partial_injection", "contents", "format_word", "parse_word",
]
__version__ = "0.1.0"
