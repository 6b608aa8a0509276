from pathlib import Path
from politician.bench.config import BenchConfig, ProblemSpec
from politician.bench.suite import RunRecord
from politician.config import POLITICIAN_MLFLOW_EXPERIMENT, POLITICIAN_MLFLOW_TRACKING_URI
from politician.log import get_logger

import mlflow


logger = get_logger("bench.tracking")


class MlflowTracker:
    """Logs each run of a suite as an MLflow run with its trace CSV as artifact."""

    def __init__(self, tracking_uri: str, experiment: str = POLITICIAN_MLFLOW_EXPERIMENT):
        self.tracking_uri = tracking_uri
        self.experiment = experiment
        mlflow.set_tracking_uri(tracking_uri)
        mlflow.set_experiment(experiment)
        logger.info(f"Tracking runs in MLflow experiment '{experiment}' at {tracking_uri}")

    def log_run(self, config: BenchConfig, spec: ProblemSpec, record: RunRecord, csv_path: Path):
        with mlflow.start_run(run_name=f"{record.problem}/{record.method}"):
            mlflow.log_params(
                {
                    "problem": record.problem,
                    "family": spec.family,
                    "method": record.method,
                    "politician": record.politician,
                    "budget": config.budget,
                    "tol": config.tol,
                    "center": config.center,
                }
            )
            mlflow.log_metrics(
                {
                    "iterations": record.iterations,
                    "final_value": record.final_value,
                    "best_value": record.best_value,
                    "gradient_evaluations": record.gradient_evaluations,
                    "value_evaluations": record.value_evaluations,
                }
            )
            mlflow.set_tag("termination", record.termination)
            if record.solved_at is not None:
                mlflow.log_metric("solved_at", record.solved_at)
            mlflow.log_artifact(str(csv_path))


def tracker_from_env() -> MlflowTracker | None:
    if not POLITICIAN_MLFLOW_TRACKING_URI:
        return None
    return MlflowTracker(POLITICIAN_MLFLOW_TRACKING_URI)
