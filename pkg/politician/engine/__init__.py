from politician.engine.driver import RunTrace, TraceStep, TRACE_COLUMNS, run
from politician.engine.oracle import Oracle, OraclePolitician, RunEvent, oracle_politician
from politician.engine.protocols import FirstOrderMethod, Politician
from politician.engine.records import (
    FirstOrderRecord,
    FunctionObjective,
    History,
    Matrix,
    Objective,
    Vector,
)

__all__ = [
    "FirstOrderMethod",
    "FirstOrderRecord",
    "FunctionObjective",
    "History",
    "Matrix",
    "Objective",
    "Oracle",
    "OraclePolitician",
    "Politician",
    "RunEvent",
    "RunTrace",
    "TRACE_COLUMNS",
    "TraceStep",
    "Vector",
    "oracle_politician",
    "run",
]
