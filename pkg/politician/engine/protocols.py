from typing import Protocol
from politician.engine.oracle import Oracle
from politician.engine.records import FirstOrderRecord, History, Vector


class Politician(Protocol):
    """Rewrites a query into a point that is no worse in objective value."""

    name: str

    def reset(self, dimension: int) -> None:
        """Forget all state from a previous run."""
        ...

    @property
    def alpha(self) -> float | None:
        """Current strong convexity estimate, if the politician keeps one."""
        ...

    def answer(self, x: Vector, history: History, oracle: Oracle) -> FirstOrderRecord:
        """Answer the query `x` given the history of previous answers."""
        ...


class FirstOrderMethod(Protocol):
    """Maps the history of answers to the next query point."""

    name: str

    def reset(self, x0: Vector, uses_oracle: bool) -> None:
        """Start a new run from `x0`; `uses_oracle` is False behind a real politician."""
        ...

    @property
    def alpha(self) -> float | None:
        """The method's own strong convexity estimate, if any."""
        ...

    def initial_query(self) -> Vector:
        ...

    def next_query(self, history: History, oracle: Oracle) -> Vector | None:
        """Next query, or None when the last answer is exactly stationary."""
        ...
