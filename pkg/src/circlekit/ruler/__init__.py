"""Straightedge-only constructions: a small line-oriented language, its interpreter and checks."""

from .builtins import BUILTINS, builtin, builtin_source
from .interpreter import RulerScene, execute
from .program import Given, Program, Step, audit, parse, to_text
from .verify import PREDICATES, evaluate, sample_givens, verify

__all__ = [
    "BUILTINS",
    "Given",
    "PREDICATES",
    "Program",
    "RulerScene",
    "Step",
    "audit",
    "builtin",
    "builtin_source",
    "evaluate",
    "execute",
    "parse",
    "sample_givens",
    "to_text",
    "verify",
]
