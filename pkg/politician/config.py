from dotenv import load_dotenv
from pathlib import Path

import os


load_dotenv()

POLITICIAN_OUTPUT_DIR = Path(os.getenv("POLITICIAN_OUTPUT_DIR", "./results"))
POLITICIAN_LOG_LEVEL = os.getenv("POLITICIAN_LOG_LEVEL", "INFO")
POLITICIAN_MLFLOW_TRACKING_URI = os.getenv("POLITICIAN_MLFLOW_TRACKING_URI")
POLITICIAN_MLFLOW_EXPERIMENT = os.getenv(
    "POLITICIAN_MLFLOW_EXPERIMENT", "politician-bench"
)
POLITICIAN_MAX_WORKERS = int(os.getenv("POLITICIAN_MAX_WORKERS", "1"))
