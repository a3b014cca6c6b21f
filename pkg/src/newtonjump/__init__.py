"""Newton numbers and non-degenerate Milnor-number jumps of convenient singularities."""
from .errors import (
    EngineMismatchError,
    GermSyntaxError,
    InvalidInputError,
    InvariantViolation,
    NewtonJumpError,
    NotConvenientError,
)
from .geometry import (
    Facet,
    GammaMinusMetrics,
    NewtonDiagram,
    build_diagram,
    gamma_minus_metrics,
    newton_number,
)
from .parser import Support, is_convenient, parse_germ, render_support

__all__ = [
    "EngineMismatchError",
    "Facet",
    "GammaMinusMetrics",
    "GermSyntaxError",
    "InvalidInputError",
    "InvariantViolation",
    "NewtonDiagram",
    "NewtonJumpError",
    "NotConvenientError",
    "Support",
    "build_diagram",
    "gamma_minus_metrics",
    "is_convenient",
    "newton_number",
    "parse_germ",
    "render_support",
]
