"""Exception types shared across drgen."""


class DrgenError(Exception):
    pass


class ParseError(DrgenError, ValueError):
    """Malformed DGF input. ``reason`` is one of loop, duplicate, part, syntax."""

    def __init__(self, reason: str, line: int | None = None, detail: str = ""):
        self.reason = reason
        self.line = line
        msg = reason
        if line is not None:
            msg += f" (line {line})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class InvalidVertex(DrgenError, KeyError):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(vertex)

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class InvalidK(DrgenError, ValueError):
    def __init__(self, k):
        self.k = k
        super().__init__(f"k must be a positive integer, got {k!r}")


class InvalidT(DrgenError, ValueError):
    pass


class InvalidFlow(DrgenError, ValueError):
    pass


class NotRegular(DrgenError, ValueError):
    def __init__(self, vertex, degree, k):
        self.vertex = vertex
        self.degree = degree
        self.k = k
        super().__init__(f"vertex {vertex} has degree {degree}, expected {k}")


class InvalidPermutation(DrgenError, ValueError):
    pass


class NotDerangement(DrgenError, ValueError):
    pass


class TooLarge(DrgenError, ValueError):
    pass


class InvalidFamily(DrgenError, ValueError):
    pass


class OracleDisagreement(DrgenError, AssertionError):
    """Two brute-force criteria that must coincide gave different answers."""
