from politician.methods.bfgs import BFGS, BFGSMemory, bfgs_query, two_loop_direction
from politician.methods.conjugate_gradient import CGState, ConjugateGradient, cg_direction, cg_query
from politician.methods.empty_plus import EmptyMethod, empty_plus_query
from politician.methods.geometric import GeometricPolitician, PoliticianState
from politician.methods.gonzaga_karas import GKState, GonzagaKaras, gk_step
from politician.methods.line_search import LineSearchResult, exact_line_search
from politician.methods.registry import ALGORITHMS, build_algorithm, parse_algorithm
from politician.methods.steepest_descent import SteepestDescent, sd_query

__all__ = [
    "ALGORITHMS",
    "BFGS",
    "BFGSMemory",
    "CGState",
    "ConjugateGradient",
    "EmptyMethod",
    "GKState",
    "GeometricPolitician",
    "GonzagaKaras",
    "LineSearchResult",
    "PoliticianState",
    "SteepestDescent",
    "bfgs_query",
    "build_algorithm",
    "cg_direction",
    "cg_query",
    "empty_plus_query",
    "exact_line_search",
    "gk_step",
    "parse_algorithm",
    "sd_query",
    "two_loop_direction",
]
