"""Quotients of imprimitive symmetric graphs: parameters, designs, constructions and case matching."""
from .classifier import ClassificationReport, analyze_triple, classify
from .errors import ExceedsBound, MalformedInput, PreconditionViolation, SchemaError, SymTripleError
from .graphs import Graph
from .permgroup import GeneratedGroup, Permutation
from .quotient import Parameters, SymmetricTriple, parameters
from .tables import FRow, feasible_f_rows

__all__ = [
    "ClassificationReport", "ExceedsBound", "FRow", "GeneratedGroup", "Graph", "MalformedInput",
    "Parameters", "Permutation", "PreconditionViolation", "SchemaError", "SymTripleError",
    "SymmetricTriple", "analyze_triple", "classify", "feasible_f_rows", "parameters",
]
