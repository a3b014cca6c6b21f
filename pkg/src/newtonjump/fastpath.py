"""Euclid-based jump for one-triangle diagrams x^p + y^q + z^r with coprime exponents.

Interior lattice points (alpha, beta, gamma) under the triangle drop the
Newton number by ``pqr - alpha*qr - beta*pr - gamma*pq``. Writing
``a = p - alpha, b = -beta, c = -gamma`` a drop of ``i0`` means
``a*qr + b*pr + c*pq = i0``, and reducing modulo p, q, r pins a, b, c down.
Points in the coordinate planes drop by at least ``r - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import EngineMismatchError, InvariantViolation
from .geometry import build_diagram
from .jump_engine import JumpReport


@dataclass(frozen=True)
class OneFaceTriple:
    p: int
    q: int
    r: int

    def __post_init__(self):
        p, q, r = self.p, self.q, self.r
        if not (p >= q >= r >= 2):
            raise EngineMismatchError(f"need p >= q >= r >= 2, got ({p}, {q}, {r})")
        if gcd(p, q) != 1 or gcd(p, r) != 1 or gcd(q, r) != 1:
            raise EngineMismatchError(f"({p}, {q}, {r}) are not pairwise coprime")


@dataclass(frozen=True)
class BezoutWitness:
    i0: int
    a: int
    b: int
    c: int


def extended_gcd(u, v):
    """Return ``(g, x, y)`` with ``x*u + y*v == g == gcd(u, v)`` and ``|x|`` minimal."""
    old_r, r = u, v
    old_x, x = 1, 0
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
    g = old_r
    period = v // g
    x = old_x % period
    if 2 * x > period:
        x -= period
    return g, x, (g - x * u) // v


def modular_inverse(u, m):
    g, x, _ = extended_gcd(u % m, m) if u % m else (m, 0, 0)
    if g != 1:
        raise ValueError(f"{u} is not invertible modulo {m}")
    return x % m


def base_identity(t):
    """Integers ``(a, b, c)`` with ``a*qr + b*pr + c*pq == 1``, via two Euclid runs."""
    p, q, r = t.p, t.q, t.r
    qr, pr, pq = q * r, p * r, p * q
    g1, x, y = extended_gcd(qr, pr)
    g, u, v = extended_gcd(g1, pq)
    if g != 1:
        raise EngineMismatchError(f"gcd(qr, pr, pq) = {g} for ({p}, {q}, {r})")
    a, b, c = u * x, u * y, v
    assert a * qr + b * pr + c * pq == 1
    if a * b * c == 0:
        raise EngineMismatchError(f"identity ({a}, {b}, {c}) has a zero coefficient")
    return a, b, c


def forced_combination(t, i0):
    """The unique residues (a, b, c) in (0,p) x (-q,0) x (-r,0) compatible with ``i0``."""
    p, q, r = t.p, t.q, t.r
    a = i0 * modular_inverse(q * r, p) % p
    b = i0 * modular_inverse(p * r, q) % q - q
    c = i0 * modular_inverse(p * q, r) % r - r
    if a == 0 or b == -q or c == -r:
        raise InvariantViolation(f"forced residue vanished for {t} at i0={i0}")
    return a, b, c


def forced_witness(t, i0):
    """Witness for a drop of exactly ``i0`` from an interior point, or None."""
    if not 1 <= i0 <= t.r - 2:
        raise ValueError(f"i0 must lie in 1..{t.r - 2}, got {i0}")
    a, b, c = forced_combination(t, i0)
    value = a * t.q * t.r + b * t.p * t.r + c * t.p * t.q
    # value is congruent to i0 mod pqr and lies in (-2pqr, pqr)
    if value == i0:
        return BezoutWitness(i0, a, b, c)
    if value != i0 - t.p * t.q * t.r:
        raise InvariantViolation(f"forced combination {value} is neither {i0} nor {i0} - pqr")
    return None


def plane_exponent(t):
    """Exponent (b1, q - a1, 0) in the OXY plane with drop r - 1, where a1*p - b1*q = 1."""
    a1 = modular_inverse(t.p, t.q)
    b1 = (a1 * t.p - 1) // t.q
    return (b1, t.q - a1, 0)


def lambda_nd_fastpath(t):
    p, q, r = t.p, t.q, t.r
    trace = []
    for i0 in range(1, r - 1):
        a, b, c = forced_combination(t, i0)
        value = a * q * r + b * p * r + c * p * q
        witness = forced_witness(t, i0)
        trace.append({"i0": i0, "a": a, "b": b, "c": c, "value": value, "success": witness is not None})
        if witness is not None:
            alpha, beta, gamma = p - a, -b, -c
            if not (0 < alpha < p and 0 < beta < q and 0 < gamma < r):
                raise InvariantViolation(f"realizing point {(alpha, beta, gamma)} is not interior")
            if p * q * r - alpha * q * r - beta * p * r - gamma * p * q != i0:
                raise InvariantViolation("realizing point does not reproduce the jump")
            return JumpReport(i0, [(alpha, beta, gamma)], "fastpath", (p - 1) * (q - 1) * (r - 1), len(trace), trace)
    return JumpReport(r - 1, [plane_exponent(t)], "fastpath", (p - 1) * (q - 1) * (r - 1), len(trace), trace)


def one_face_triple(support):
    """Recognize a coprime one-triangle diagram.

    Returns ``(triple, order)`` where ``order[k]`` is the original axis of the
    k-th largest intercept, or None when the fast path does not apply.
    """
    if support.dimension != 3:
        return None
    diagram = build_diagram(support)
    if not diagram.is_convenient or len(diagram.facets) != 1:
        return None
    if len(diagram.facets[0].vertices) != 3:
        return None
    W = diagram.axis_intercepts
    order = sorted(range(3), key=lambda k: -W[k])
    p, q, r = (W[k] for k in order)
    if r < 2 or gcd(p, q) != 1 or gcd(p, r) != 1 or gcd(q, r) != 1:
        return None
    return OneFaceTriple(p, q, r), order


def lambda_nd_fastpath_support(support):
    """Fast path on a Support; realizing exponents are mapped back to its axes."""
    found = one_face_triple(support)
    if found is None:
        raise EngineMismatchError(
            "fastpath needs a single triangular facet with pairwise coprime intercepts >= 2"
        )
    triple, order = found
    report = lambda_nd_fastpath(triple)
    mapped = []
    for e in report.realizing_exponents:
        out = [0, 0, 0]
        for k, axis in enumerate(order):
            out[axis] = e[k]
        mapped.append(tuple(out))
    report.realizing_exponents = mapped
    return report


__all__ = [
    "BezoutWitness",
    "OneFaceTriple",
    "base_identity",
    "extended_gcd",
    "forced_witness",
    "lambda_nd_fastpath",
    "lambda_nd_fastpath_support",
    "one_face_triple",
]
