from typing import Any

__all__ = [
    "StanleyException",
    "AmbientMismatchError",
    "VariableIndexError",
    "UnitIdealError",
    "ZeroIdealError",
    "InactiveVertexError",
    "EmptyEdgeError",
    "NotAGraphError",
    "NotChordalError",
    "EdgeCardinalityError",
    "InvalidOrderError",
    "InvalidWitnessError",
    "CapExceededError",
    "TheoremViolation",
    "UnsupportedTransformerArgException",
    "UnsupportedEnsurerArgException",
]


class StanleyException(Exception):
    pass


class AmbientMismatchError(StanleyException, ValueError):
    def __init__(self, expected: int, found: int):
        self.expected = expected
        self.found = found
        super().__init__(
            f"Monomials live in different rings: expected {expected} variables, "
            f"found {found}"
        )


class VariableIndexError(StanleyException, IndexError):
    def __init__(self, index: int, n: int):
        self.index = index
        self.n = n
        super().__init__(f"Variable index {index} is outside 1..{n}")


class UnitIdealError(StanleyException, ValueError):
    def __init__(self, operation: str):
        super().__init__(f"'{operation}' is undefined on the unit ideal")


class ZeroIdealError(StanleyException, ValueError):
    def __init__(self, operation: str):
        super().__init__(f"'{operation}' is undefined on the zero ideal")


class InactiveVertexError(StanleyException, ValueError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Vertex {vertex} is not an active vertex of the clutter")


class EmptyEdgeError(StanleyException, ValueError):
    def __init__(self):
        super().__init__(
            "The clutter holds the empty edge; its edge ideal would be the unit ideal"
        )


class NotAGraphError(StanleyException, ValueError):
    def __init__(self, edge: Any):
        super().__init__(f"Edge {edge} does not have exactly two vertices")


class NotChordalError(StanleyException, ValueError):
    def __init__(self, witness: Any = None):
        self.witness = witness
        super().__init__(
            f"The clutter is not chordal (minor without a simplicial vertex: {witness})"
        )


class EdgeCardinalityError(StanleyException, ValueError):
    def __init__(self, minimum: int, d: int):
        super().__init__(
            f"The minimum edge cardinality {minimum} is smaller than d={d}"
        )


class InvalidOrderError(StanleyException, ValueError):
    pass


class InvalidWitnessError(StanleyException, ValueError):
    pass


class CapExceededError(StanleyException):
    def __init__(self, cap: str, limit: int, value: int):
        self.cap = cap
        self.limit = limit
        self.value = value
        super().__init__(f"Desk-scale cap '{cap}' exceeded: {value} > {limit}")


class TheoremViolation(StanleyException):
    def __init__(self, check: Any, instance: Any = None):
        self.check = check
        self.instance = instance
        super().__init__(f"Check failed: {check}")


class UnsupportedTransformerArgException(StanleyException):
    def __init__(self, arg: Any):
        super().__init__(f"Unsupported transformer argument: {arg}")


class UnsupportedEnsurerArgException(StanleyException):
    def __init__(self, arg: Any):
        super().__init__(f"Unsupported ensurer argument: {arg}")
