"""Non-degenerate jump by exhaustive one-monomial deformation search."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import InvalidInputError, InvariantViolation
from .geometry import build_diagram, in_gamma_minus, newton_number, newton_number_of_points
from .geometry import _require_convenient


@dataclass(frozen=True)
class DeformationCandidate:
    exponent: tuple
    nu_after: int
    jump: int


@dataclass
class JumpReport:
    lambda_nd: int
    realizing_exponents: list
    method: str
    nu_before: int
    candidates_examined: int
    trace: list | None = field(default=None)
    mu: int | None = None

    def to_dict(self):
        out = {
            "nu": self.nu_before,
            "lambda_nd": self.lambda_nd,
            "method": self.method,
            "realizing": [list(e) for e in self.realizing_exponents],
            "candidates": self.candidates_examined,
        }
        if self.mu is not None:
            out["mu"] = self.mu
        if self.trace is not None:
            out["trace"] = self.trace
        return out


def enumerate_candidates(support):
    """Nonzero lattice points of the closed region under the diagram, sorted."""
    diagram = build_diagram(support)
    _require_convenient(diagram)
    box = [range(w + 1) for w in diagram.axis_intercepts]
    return [
        p for p in itertools.product(*box)
        if any(p) and in_gamma_minus(p, diagram)
    ]


def _jump(points, dimension, nu_before, exponent):
    nu_after = newton_number_of_points(list(points) + [exponent], dimension)
    jump = nu_before - nu_after
    if jump < 0:
        raise InvariantViolation(
            f"Newton number increased from {nu_before} to {nu_after} after adding {exponent}"
        )
    return DeformationCandidate(tuple(exponent), nu_after, jump)


def jump_of_candidate(support, exponent):
    """Drop of the Newton number when the monomial ``exponent`` is added."""
    exponent = tuple(int(c) for c in exponent)
    if len(exponent) != support.dimension or any(c < 0 for c in exponent) or not any(exponent):
        raise InvalidInputError(f"bad exponent {exponent} for dimension {support.dimension}")
    return _jump(support.points, support.dimension, newton_number(support), exponent)


def _chunk_jumps(args):
    points, dimension, nu_before, chunk = args
    return [_jump(points, dimension, nu_before, e) for e in chunk]


def evaluate_candidates(support, candidates=None, jobs=1):
    """Jumps of every candidate, in candidate order regardless of ``jobs``."""
    if candidates is None:
        candidates = enumerate_candidates(support)
    nu_before = newton_number(support)
    points = tuple(support.points)
    if jobs <= 1 or len(candidates) < 64:
        return [_jump(points, support.dimension, nu_before, e) for e in candidates]
    size = -(-len(candidates) // (4 * jobs))
    chunks = [candidates[i:i + size] for i in range(0, len(candidates), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_chunk_jumps, [(points, support.dimension, nu_before, c) for c in chunks])
        return [cand for part in parts for cand in part]


def lambda_nd_bruteforce(support, jobs=1, trace=False):
    """Minimal positive jump over all one-monomial deformations under the diagram."""
    nu_before = newton_number(support)
    candidates = enumerate_candidates(support)
    evaluated = evaluate_candidates(support, candidates, jobs=jobs)
    positive = [c for c in evaluated if c.jump > 0]
    if not positive:
        raise InvariantViolation("no deformation with positive jump; support is not singular")
    best = min(c.jump for c in positive)
    report = JumpReport(
        lambda_nd=best,
        realizing_exponents=sorted(c.exponent for c in positive if c.jump == best),
        method="bruteforce",
        nu_before=nu_before,
        candidates_examined=len(candidates),
    )
    if trace:
        report.trace = [
            {"exponent": list(c.exponent), "nu_after": c.nu_after, "jump": c.jump} for c in evaluated
        ]
    return report


def lambda_nd_degenerate(support, mu_f0, jobs=1, trace=False):
    """Jump of a possibly degenerate germ with externally computed Milnor number ``mu_f0``.

    A non-degenerate germ with the same diagram has Milnor number equal to
    the Newton number; a strictly larger ``mu_f0`` is itself the jump.
    """
    nu = newton_number(support)
    if mu_f0 < nu:
        raise InvalidInputError(f"Milnor number {mu_f0} is below the Newton number {nu}")
    if mu_f0 > nu:
        return JumpReport(
            lambda_nd=mu_f0 - nu,
            realizing_exponents=[],
            method="degenerate",
            nu_before=nu,
            candidates_examined=0,
            mu=mu_f0,
        )
    report = lambda_nd_bruteforce(support, jobs=jobs, trace=trace)
    report.mu = mu_f0
    return report
