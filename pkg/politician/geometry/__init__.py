from politician.geometry.barriers import (
    BarrierWorkspace,
    CenterKind,
    CenterResult,
    analytic_grad_hess,
    analytic_value,
    newton_center,
    volumetric_grad,
    volumetric_hess,
    volumetric_value,
)
from politician.geometry.region import (
    Ball,
    BallRegion,
    Observations,
    ball_from_record,
    build_region,
    feasibility_margin,
    largest_feasible_alpha,
)
from politician.geometry.subspace import SubspaceBasis

__all__ = [
    "Ball",
    "BallRegion",
    "BarrierWorkspace",
    "CenterKind",
    "CenterResult",
    "Observations",
    "SubspaceBasis",
    "analytic_grad_hess",
    "analytic_value",
    "ball_from_record",
    "build_region",
    "feasibility_margin",
    "largest_feasible_alpha",
    "newton_center",
    "volumetric_grad",
    "volumetric_hess",
    "volumetric_value",
]
