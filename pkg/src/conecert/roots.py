"""Simultaneous polynomial root refinement with componentwise certificates.

The update is the classical simultaneous correction
``z_i <- z_i - p(z_i) / prod_{j != i} (z_i - z_j)`` for a monic polynomial,
iterated through the fixed-point engine over the weighted cone metric on
C^n.  Since no global contraction factor is available, certificates are
built from the longest contracting tail of the observed trace and are always
heuristic unless the caller supplies a factor.

The payoff of keeping distances as vectors is measured by
:func:`compare_bounds`: per-root a posteriori bounds against the single
max-norm bound broadcast to all roots.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .gauge import GaugeNorm, mink_norm
from .metrics import WeightedConeMetric
from .picard import (
    Certificate,
    IterationTrace,
    LAMBDA_CEILING,
    Problem,
    apost_backward_bound,
    apost_forward_bound,
    apriori_bound,
    run_picard,
)
from .solid import SpaceSpec, Vec

__all__ = [
    "Polynomial",
    "as_root_vector",
    "default_starts",
    "weierstrass_step",
    "solve_roots",
    "RootsResult",
    "ComparisonRow",
    "ComparisonReport",
    "compare_bounds",
]


class Polynomial:
    """Univariate polynomial stored monic, coefficients constant term first."""

    def __init__(self, coefficients: Sequence):
        coeffs = [complex(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise ValueError("polynomial must have degree at least 1")
        if any(not cmath.isfinite(c) for c in coeffs):
            raise ValueError("coefficients must be finite")
        lead = coeffs[-1]
        self.coefficients = tuple(c / lead for c in coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    @property
    def coeff_scale(self) -> float:
        """max(1, sum of coefficient moduli); the residual yardstick."""
        return max(1.0, sum(abs(c) for c in self.coefficients))


def as_root_vector(values: Sequence) -> tuple[complex, ...]:
    z = tuple(complex(v) for v in values)
    if not z:
        raise ValueError("root vector must be nonempty")
    if any(not cmath.isfinite(c) for c in z):
        raise ValueError("root vector entries must be finite")
    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            if z[i] == z[j]:
                raise ValueError(f"coincident entries at positions {i} and {j}")
    return z


def default_starts(p: Polynomial) -> tuple[complex, ...]:
    """Deterministic equispaced starts on a circle enclosing all roots.

    Radius 1 + max coefficient modulus; the fixed angular offset keeps the
    starts off the real axis, where real-rooted polynomials would otherwise
    collide.
    """
    n = p.degree
    r = 1.0 + max(abs(c) for c in p.coefficients)
    return tuple(
        r * cmath.exp(1j * (2.0 * cmath.pi * k / n + 0.4)) for k in range(n)
    )


def weierstrass_step(p: Polynomial, z: Sequence[complex]) -> tuple[complex, ...]:
    """One simultaneous-correction sweep over all approximations.

    The denominator factors are multiplied in a canonical order (sorted by
    the other entries' coordinates), so permuting the input permutes the
    output exactly, with no float drift.
    """
    z = as_root_vector(z)
    if len(z) != p.degree:
        raise ValueError(f"{len(z)} approximations for degree {p.degree}")
    out = []
    for i, zi in enumerate(z):
        others = sorted(
            (z[j] for j in range(len(z)) if j != i), key=lambda w: (w.real, w.imag)
        )
        denom = 1 + 0j
        for w in others:
            denom *= zi - w
        wi = zi - p(zi) / denom
        if not cmath.isfinite(wi):
            raise ArithmeticError(f"update overflowed at position {i}")
        out.append(wi)
    return tuple(out)


@dataclass
class ComparisonRow:
    iteration: int
    componentwise: Vec
    scalar_value: float
    broadcast: Vec
    exceeded: bool
    strict_improvement: bool


@dataclass
class ComparisonReport:
    rows: list[ComparisonRow] = field(default_factory=list)

    @property
    def any_exceeded(self) -> bool:
        return any(r.exceeded for r in self.rows)

    @property
    def strict_improvement_rows(self) -> int:
        return sum(1 for r in self.rows if r.strict_improvement)


def compare_bounds(
    trace: IterationTrace,
    g_component: Sequence[GaugeNorm],
    g_scalar: GaugeNorm,
    lam: float,
    start: int = 0,
) -> ComparisonReport:
    """Componentwise forward bounds against the broadcast scalar bound.

    For each recorded step from ``start`` on, the componentwise bound is the
    forward a posteriori vector; the scalar pipeline collapses the step to
    its gauge first, and its bound is broadcast back through the base vector.
    With a common factor the componentwise vector can never exceed the
    broadcast one; rows where it is strictly smaller in some coordinate are
    counted as improvements.
    """
    if len(g_component) != g_scalar.spec.n:
        raise ValueError(
            f"{len(g_component)} coordinate gauges for dimension {g_scalar.spec.n}"
        )
    report = ComparisonReport()
    base = g_scalar.spec.base
    # Shared factor so both pipelines round identically at the max coordinate.
    q = 1.0 / (1.0 - lam)
    for k in range(start, len(trace.step_dists)):
        s = trace.step_dists[k]
        comp = apost_forward_bound(s, lam)
        per_coord = [
            mink_norm(Vec([s[j]]), g_component[j]) for j in range(len(g_component))
        ]
        scalar = max(per_coord) * q
        broadcast = scalar * base
        exceeded = any(c > b for c, b in zip(comp.coords, broadcast.coords))
        improved = any(c < b for c, b in zip(comp.coords, broadcast.coords))
        report.rows.append(
            ComparisonRow(
                iteration=k,
                componentwise=comp,
                scalar_value=scalar,
                broadcast=broadcast,
                exceeded=exceeded,
                strict_improvement=improved,
            )
        )
    return report


@dataclass
class RootsResult:
    roots: Optional[tuple[complex, ...]]
    certificate: Optional[Certificate]
    report: ComparisonReport
    trace: IterationTrace
    converged: bool
    lambda_used: Optional[float]
    tail_start: int
    residuals: Optional[list[float]]


def _contraction_tail(trace: IterationTrace, g: GaugeNorm) -> tuple[int, Optional[float]]:
    """Start index of the longest suffix of steps contracting in the gauge.

    Returns (tail_start, factor); factor is None when not even the final
    pair of steps contracts.
    """
    norms = [mink_norm(s, g) for s in trace.step_dists]
    if len(norms) < 2:
        return len(norms), None
    ratios: list[Optional[float]] = []
    for k in range(len(norms) - 1):
        if norms[k] == 0.0:
            ratios.append(0.0 if norms[k + 1] == 0.0 else None)
        else:
            ratios.append(norms[k + 1] / norms[k])
    start = len(ratios)
    for k in range(len(ratios) - 1, -1, -1):
        if ratios[k] is None or ratios[k] > LAMBDA_CEILING:
            break
        start = k
    tail = [r for r in ratios[start:] if r is not None]
    if not tail:
        return len(norms), None
    return start, max(tail)


def _tail_certificate(
    trace: IterationTrace, start: int, lam: float, p: Problem
) -> Certificate:
    steps = trace.step_dists[start:]
    d01 = steps[0]
    radius = apriori_bound(0, lam, d01)
    apriori = [apriori_bound(k, lam, d01) for k in range(len(steps) + 1)]
    fwd = [apost_forward_bound(s, lam) for s in steps]
    bwd = [apost_backward_bound(s, lam) for s in steps]
    residual = None
    try:
        residual = p.metric.distance(
            trace.iterates[-1], p.map_fn(trace.iterates[-1])
        )
    except (ValueError, ArithmeticError, OverflowError, ZeroDivisionError):
        pass
    return Certificate(
        lambda_used=lam,
        lambda_source="estimated",
        radius_r=radius,
        apriori=apriori,
        apost_forward=fwd,
        apost_backward=bwd,
        status="heuristic",
        residual=residual,
    )


def solve_roots(
    p: Polynomial,
    z0: Optional[Sequence[complex]] = None,
    weights: Optional[Sequence[float]] = None,
    stop_c: Optional[Vec] = None,
    max_iter: int = 100,
    lam: Optional[float] = None,
) -> RootsResult:
    """Refine all roots at once and certify from the observed trace.

    Halts once the step distance drops strictly below ``stop_c`` (default
    1e-12 per root).  The returned result carries the trace, the tail
    certificate (or the engine certificate when ``lam`` was supplied), the
    componentwise-versus-broadcast bound comparison on the tail, and the
    final residual moduli.
    """
    n = p.degree
    z0 = default_starts(p) if z0 is None else as_root_vector(z0)
    weights = (1.0,) * n if weights is None else tuple(float(w) for w in weights)
    stop_c = Vec((1e-12,) * n) if stop_c is None else stop_c
    inst = WeightedConeMetric(weights, field="complex")
    g = GaugeNorm(SpaceSpec(n, Vec.ones(n)))
    problem = Problem(
        map_fn=lambda z: weierstrass_step(p, z),
        x0=z0,
        metric=inst,
        gauge=g,
        stop_c=stop_c,
        max_iter=max_iter,
        lam=lam,
        mode="iterated",
    )
    result = run_picard(problem)
    trace = result.trace

    if lam is not None:
        cert = result.certificate
        tail_start, lam_used = 0, lam
    else:
        tail_start, lam_hat = _contraction_tail(trace, g)
        if lam_hat is None or lam_hat > LAMBDA_CEILING:
            cert, lam_used = None, None
        else:
            cert = _tail_certificate(trace, tail_start, lam_hat, problem)
            lam_used = lam_hat

    g_component = [GaugeNorm(SpaceSpec(1, Vec([g.spec.base[j]]))) for j in range(n)]
    if lam_used is not None:
        report = compare_bounds(trace, g_component, g, lam_used, start=tail_start)
    else:
        report = ComparisonReport()

    roots = trace.iterates[-1] if result.converged else None
    residuals = None
    if roots is not None:
        residuals = [abs(p(z)) for z in roots]
    return RootsResult(
        roots=roots,
        certificate=cert,
        report=report,
        trace=trace,
        converged=result.converged,
        lambda_used=lam_used,
        tail_start=tail_start,
        residuals=residuals,
    )
