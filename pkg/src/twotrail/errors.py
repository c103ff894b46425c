"""Exception types shared across the library."""


class TwoTrailError(Exception):
    """Base class for all library errors."""


class OutOfRangeLabel(TwoTrailError):
    """An edge endpoint is not a valid vertex label."""


class SelfLoop(TwoTrailError):
    """An edge joins a vertex to itself."""


class SizeLimitExceeded(TwoTrailError):
    """Input is larger than the configured bound for an exponential search."""


class EmptyGraph(TwoTrailError):
    """The operation needs at least one vertex."""


class VertexNotOnCycle(TwoTrailError):
    """A queried vertex does not lie on the cycle."""


class NotDominating(TwoTrailError):
    """The cycle leaves an edge outside it, so the exterior is not independent."""


class NoCycle(TwoTrailError):
    """The graph is acyclic."""


class LemmaViolation(TwoTrailError):
    """No maximum-length cycle is dominating.

    Carries the graph and the full list of maximum-length cycles.  This can
    only happen when the input contains an induced pair of independent edges
    (or on an internal bug); a 2K2-free graph always has a dominating longest
    cycle.
    """

    def __init__(self, graph, cycles):
        super().__init__(f"none of {len(cycles)} longest cycles is dominating")
        self.graph = graph
        self.cycles = cycles


class NonPositiveK(TwoTrailError):
    """The family parameter must be a positive integer."""


class NTooSmall(TwoTrailError):
    """The family parameter must be at least 2."""


class MalformedInstance(TwoTrailError):
    """A structured instance does not have the promised shape."""


class ParseError(TwoTrailError):
    """An input document could not be parsed.

    ``line`` is 1-based; ``text`` is the offending line.
    """

    def __init__(self, line, text, reason):
        super().__init__(f"line {line}: {reason}: {text!r}")
        self.line = line
        self.text = text
        self.reason = reason
