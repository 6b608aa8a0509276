import numpy as np


class PoliticianError(Exception):
    """Base class of every error raised by the package."""


class EvaluationError(PoliticianError):
    """The objective returned a non-finite value or gradient."""

    def __init__(self, message: str, point: np.ndarray):
        super().__init__(message)
        self.point = np.array(point, copy=True)


class PoliticianContractError(PoliticianError):
    """A politician answered a point that is worse than the query."""

    def __init__(
        self,
        politician: str,
        iteration: int,
        query_value: float,
        answer_value: float,
    ):
        super().__init__(
            f"Politician '{politician}' violated f(y) <= f(x) at iteration {iteration}: "
            f"f(x)={query_value!r}, f(y)={answer_value!r}"
        )
        self.politician = politician
        self.iteration = iteration
        self.query_value = query_value
        self.answer_value = answer_value


class SubspaceError(PoliticianError):
    """A point or direction is not in the span of the basis."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class RegionError(PoliticianError):
    """A ball region was requested for an infeasible strong convexity estimate."""


class BarrierDomainError(PoliticianError):
    """A barrier was evaluated on or outside the boundary of its region."""

    def __init__(self, ball_index: int, slack: float):
        super().__init__(
            f"Point is not strictly inside ball {ball_index} (slack={slack!r})"
        )
        self.ball_index = ball_index
        self.slack = slack


class CenteringError(PoliticianError):
    """No strictly interior starting point could be found for centering."""


class LineSearchError(PoliticianError):
    """The objective kept decreasing along the line up to the expansion cap."""


class ParseError(PoliticianError):
    """Malformed LIBSVM input."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ProfileError(PoliticianError):
    """A performance profile was requested for an empty result set."""


class ConfigError(PoliticianError):
    """Invalid benchmark configuration."""
