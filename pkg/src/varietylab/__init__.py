"""Finite automata, syntactic monoids and pseudovariety membership for regular languages."""

from __future__ import annotations

from .algebra import (
    AcceptingSubset,
    FiniteMonoid,
    FiniteSemigroup,
    OrderedMonoid,
    Stamp,
    syntactic_order,
    syntactic_stamp,
    transition_monoid,
)
from .automata import Dfa, compile, minimize, parse_regex
from .errors import (
    AlphabetError,
    InternalInconsistency,
    InvalidStructure,
    ParseError,
    SizeCapExceeded,
    VarietyLabError,
)
from .games import Signature, ef_winner
from .identities import parse_identity, satisfies
from .kernels import BACKEND
from .varieties import ClassificationReport, classify, is_member, lookup

__version__ = "0.1.0"

__all__ = [
    "AcceptingSubset", "AlphabetError", "BACKEND", "ClassificationReport", "Dfa",
    "FiniteMonoid", "FiniteSemigroup", "InternalInconsistency", "InvalidStructure",
    "OrderedMonoid", "ParseError", "Signature", "SizeCapExceeded", "Stamp",
    "VarietyLabError", "classify", "compile", "ef_winner", "is_member", "lookup",
    "minimize", "parse_identity", "parse_regex", "satisfies", "syntactic_order",
    "syntactic_stamp", "transition_monoid",
]
