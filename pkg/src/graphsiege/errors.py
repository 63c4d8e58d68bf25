"""Exception types raised by graphsiege."""


class GraphsiegeError(Exception):
    """Base class for every error raised by this package."""


class GraphError(GraphsiegeError, ValueError):
    pass


class SelfLoop(GraphError):
    def __init__(self, u):
        super().__init__(f"self loop at vertex {u}")
        self.vertex = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (min(u, v), max(u, v))


class VertexOutOfRange(GraphError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} out of range for n={n}")
        self.vertex = v


class AlreadyRemoved(GraphError):
    def __init__(self, v):
        super().__init__(f"vertex {v} already removed")
        self.vertex = v


class NoSuchEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"no edge ({u}, {v})")
        self.edge = (min(u, v), max(u, v))


class DeadCenter(GraphError):
    def __init__(self, v):
        super().__init__(f"discovery center {v} is not alive")
        self.vertex = v


class MetricError(GraphsiegeError, ValueError):
    pass


class NoFinitePairs(MetricError):
    pass


class TooSmall(MetricError):
    pass


class EmptyTable(MetricError):
    pass


class EmptyProfile(MetricError):
    pass


class Undefined(MetricError):
    pass


class Infeasible(MetricError):
    def __init__(self, violations, message=None):
        self.violations = list(violations)
        super().__init__(message or "infeasible: " + ",".join(self.violations))


class RatioUndefined(MetricError):
    pass


class ZeroBaseline(MetricError):
    pass


class BadSyntax(GraphsiegeError, ValueError):
    pass


class BadSpec(GraphsiegeError, ValueError):
    pass


class NothingToAttack(GraphsiegeError):
    pass
