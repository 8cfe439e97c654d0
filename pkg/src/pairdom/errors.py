"""Exception hierarchy shared by every module."""


class PairDomError(Exception):
    """Base class for all errors raised by pairdom."""


class MalformedModel(PairDomError, ValueError):
    """The intersection model violates a structural invariant."""


class ParseError(MalformedModel):
    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class Infeasible(PairDomError):
    """No paired-dominating set exists (the graph has an isolated vertex)."""


class PartnerUndefined(Infeasible):
    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex v{vertex + 1} has no partner")


class ScaleExceeded(PairDomError):
    pass


class GenExhausted(PairDomError):
    pass


class ForestViolation(PairDomError):
    """The successor digraph contains a cycle."""


class InvalidSolution(PairDomError):
    """A claimed paired-dominating set fails adjacency, matching or domination."""
