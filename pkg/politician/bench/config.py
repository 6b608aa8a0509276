from pathlib import Path
from typing import Literal, Optional
from pydantic import BaseModel, ConfigDict, Field, field_validator
from politician.config import POLITICIAN_MAX_WORKERS, POLITICIAN_OUTPUT_DIR
from politician.errors import ConfigError
from politician.methods.registry import parse_algorithm
from politician.problems import (
    HingeRegressionProblem,
    NesterovVariantProblem,
    Problem,
    QuadraticProblem,
    load_libsvm,
    synthetic_dataset,
)


SMOOTH_EPSILON = 1e-6
NONSMOOTH_EPSILON = 1e-3
NONSMOOTH_T = 1e-2

Family = Literal["quadratic", "nesterov", "hinge"]


class ProblemSpec(BaseModel):
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    family: Family = Field(description="Objective family")
    n: int = Field(100, ge=1, description="Dimension; number of features for synthetic hinge problems")
    seed: int = Field(0, description="Seed of the random instance")
    kappa: Optional[float] = Field(
        None, ge=1.0, description="Condition number bound for quadratics (curvatures drawn from [1/kappa, 1])"
    )
    t: float = Field(1.0, gt=0.0, description="Smoothness parameter of the hinge loss")
    lam: float = Field(1e-4, ge=0.0, alias="lambda", description="l2 regularization of the hinge problem")
    rows: int = Field(200, ge=1, description="Samples of a synthetic hinge dataset")
    density: float = Field(0.1, gt=0.0, le=1.0, description="Feature density of a synthetic hinge dataset")
    path: Optional[Path] = Field(None, description="LIBSVM file for hinge problems; synthetic data when unset")
    epsilon: Optional[float] = Field(
        None, gt=0.0, description="Relative accuracy that counts as solved; defaults by smoothness"
    )

    @property
    def name(self) -> str:
        match self.family:
            case "quadratic":
                suffix = f"-k{self.kappa:g}" if self.kappa is not None else ""
                return f"quadratic-n{self.n}-s{self.seed}{suffix}"
            case "nesterov":
                return f"nesterov-n{self.n}-s{self.seed}"
            case "hinge":
                source = self.path.stem if self.path is not None else f"synthetic-r{self.rows}-d{self.n}-s{self.seed}"
                return f"hinge-{source}-t{self.t:g}-l{self.lam:g}"

    @property
    def target_epsilon(self) -> float:
        if self.epsilon is not None:
            return self.epsilon
        if self.family == "nesterov" or (self.family == "hinge" and self.t < NONSMOOTH_T):
            return NONSMOOTH_EPSILON
        return SMOOTH_EPSILON

    def build(self) -> Problem:
        match self.family:
            case "quadratic":
                return QuadraticProblem.random(self.n, self.seed, kappa=self.kappa)
            case "nesterov":
                return NesterovVariantProblem(self.n)
            case "hinge":
                dataset = (
                    load_libsvm(self.path)
                    if self.path is not None
                    else synthetic_dataset(self.rows, self.n, self.density, self.seed)
                )
                return HingeRegressionProblem.from_dataset(dataset, t=self.t, lam=self.lam)
        raise ConfigError(f"Unknown problem family '{self.family}'")


class BenchConfig(BaseModel):
    problems: list[ProblemSpec] = Field(min_length=1, description="Problem instances of the suite")
    methods: list[str] = Field(
        min_length=1, description="Algorithm names; a trailing '+' attaches the geometric politician"
    )
    budget: int = Field(100, ge=1, description="Politician answers (gradient evaluations) per run")
    tol: float = Field(0.0, ge=0.0, description="Stop once the gradient norm drops to this value")
    output_dir: Path = Field(default=POLITICIAN_OUTPUT_DIR, description="Directory of CSV traces and manifest")
    politician_alpha: Optional[float] = Field(
        None, gt=0.0, description="Initial strong convexity estimate of the geometric politician; +inf when unset"
    )
    center: Literal["volumetric", "analytic"] = Field(
        "volumetric", description="Center used by the geometric politician"
    )
    workers: int = Field(POLITICIAN_MAX_WORKERS, ge=1, description="Runs executed in parallel")

    @field_validator("methods")
    @classmethod
    def known_methods(cls, methods: list[str]) -> list[str]:
        for name in methods:
            try:
                parse_algorithm(name)
            except ConfigError as e:
                raise ValueError(str(e)) from None
        return methods

    @field_validator("problems")
    @classmethod
    def distinct_problems(cls, problems: list[ProblemSpec]) -> list[ProblemSpec]:
        names = [spec.name for spec in problems]
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            raise ValueError(f"Problems share trace names: {', '.join(duplicates)}")
        return problems

    def politician_options(self) -> dict:
        options: dict = {"center": self.center}
        if self.politician_alpha is not None:
            options["alpha"] = self.politician_alpha
        return options

    @classmethod
    def from_file(cls, path: str | Path) -> "BenchConfig":
        with open(path, encoding="utf-8") as f:
            return cls.model_validate_json(f.read())
