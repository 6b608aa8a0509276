from typing import Any
from politician.engine.oracle import OraclePolitician
from politician.engine.protocols import FirstOrderMethod, Politician
from politician.errors import ConfigError
from politician.methods.bfgs import BFGS
from politician.methods.conjugate_gradient import ConjugateGradient
from politician.methods.empty_plus import EmptyMethod
from politician.methods.geometric import GeometricPolitician
from politician.methods.gonzaga_karas import GonzagaKaras
from politician.methods.steepest_descent import SteepestDescent


METHODS: dict[str, type] = {
    "sd": SteepestDescent,
    "cg": ConjugateGradient,
    "gk": GonzagaKaras,
    "bfgs": BFGS,
    "empty": EmptyMethod,
}

ALIASES = {"∅": "empty"}

ALGORITHMS = [name + suffix for name in METHODS for suffix in ("", "+")]


def parse_algorithm(name: str) -> tuple[str, bool]:
    """Splits 'bfgs+' into ('bfgs', True)."""
    key = name.strip().lower()
    with_politician = key.endswith("+")
    base = key.removesuffix("+")
    base = ALIASES.get(base, base)
    if base not in METHODS:
        raise ConfigError(f"Unknown algorithm '{name}'. Available: {', '.join(ALGORITHMS)}")
    return base, with_politician


def build_algorithm(name: str, **politician_options: Any) -> tuple[FirstOrderMethod, Politician]:
    """A fresh (method, politician) pair; a trailing '+' selects the geometric politician."""
    base, with_politician = parse_algorithm(name)
    method = METHODS[base]()
    politician = GeometricPolitician(**politician_options) if with_politician else OraclePolitician()
    return method, politician
