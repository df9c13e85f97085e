"""Fixed-point iteration engine with componentwise error certificates.

Runs plain successive approximation x_{k+1} = T(x_k) over any of the cone
metrics and, for a contraction factor ``lam`` (supplied or estimated from the
trace), emits the standard certificate family in cone-vector form:

* invariance radius  r = d(x0, x1) / (1 - lam),
* a priori bound     lam^n / (1 - lam) * d(x0, x1),
* forward a posteriori bound   d(x_n, x_{n+1}) / (1 - lam),
* backward a posteriori bound  lam / (1 - lam) * d(x_{n-1}, x_n).

A certificate is marked ``certified`` only when the factor was supplied by
the caller, the invariance ball fits inside the declared domain, and the
observed steps never contradict the factor.  An estimated factor always
yields ``heuristic``; a domain checked only pointwise on iterates yields
``conditional``.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .gauge import GaugeNorm, mink_norm
from .metrics import Ball, ConeMetric, WeightedConeMetric, ball_contains
from .solid import Vec, in_interior, leq, lt

__all__ = [
    "LAMBDA_CEILING",
    "Problem",
    "IterationTrace",
    "Certificate",
    "PicardResult",
    "DomainEscape",
    "run_picard",
    "apriori_bound",
    "apost_forward_bound",
    "apost_backward_bound",
    "verify_step_contraction",
    "estimate_lambda",
    "check_domain_condition",
    "residual_check",
    "rate_check",
    "write_trace_csv",
    "certificate_to_dict",
]

# Factors this close to 1 make 1/(1-lam) meaningless at working precision.
LAMBDA_CEILING = 1.0 - 1e-12


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= LAMBDA_CEILING:
        raise ValueError(
            f"contraction factor must lie in [0, {LAMBDA_CEILING}], got {lam!r}"
        )
    return lam


@dataclass
class Problem:
    """One fixed-point problem: map, start, metric, gauge and halting data.

    ``domain`` is None for the whole space, a closed :class:`Ball`, or a
    predicate called on every iterate.  ``lam`` is the contraction factor
    when the caller can supply one; left None it is estimated from the trace
    and every certificate is downgraded to heuristic.
    """

    map_fn: Callable
    x0: object
    metric: ConeMetric
    gauge: GaugeNorm
    stop_c: Vec
    max_iter: int = 200
    lam: Optional[float] = None
    mode: str = "banach"
    domain: object = None

    def __post_init__(self):
        n = self.metric.dim
        if self.gauge.spec.n != n:
            raise ValueError(
                f"gauge dimension {self.gauge.spec.n} does not match metric dimension {n}"
            )
        if len(self.stop_c) != n or not in_interior(self.stop_c):
            raise ValueError("stop_c must be a strictly positive vector of metric dimension")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be at least 1, got {self.max_iter!r}")
        if self.lam is not None:
            self.lam = _check_lambda(self.lam)
        if self.mode not in ("banach", "iterated"):
            raise ValueError(f"mode must be 'banach' or 'iterated', got {self.mode!r}")
        if isinstance(self.domain, Ball) and not self.domain.closed:
            raise ValueError("a ball domain must be closed")


@dataclass
class IterationTrace:
    iterates: list = field(default_factory=list)
    step_dists: list[Vec] = field(default_factory=list)
    in_domain_flags: list[bool] = field(default_factory=list)
    domain_checked_at: list[float] = field(default_factory=list)


@dataclass
class Certificate:
    lambda_used: float
    lambda_source: str  # "given" | "estimated"
    radius_r: Vec
    apriori: list[Vec]
    apost_forward: list[Vec]  # entry k bounds the error at iterate k
    apost_backward: list[Vec]  # entry k bounds the error at iterate k + 1
    status: str  # "certified" | "conditional" | "heuristic"
    residual: Optional[Vec]


@dataclass
class PicardResult:
    trace: IterationTrace
    certificate: Optional[Certificate]
    fixed_point: object
    converged: bool


class DomainEscape(RuntimeError):
    """An iterate left the declared domain; carries the partial trace."""

    def __init__(self, message: str, trace: IterationTrace):
        super().__init__(message)
        self.trace = trace


def apriori_bound(n: int, lam: float, d01: Vec) -> Vec:
    """Error bound at iterate n from the first step: lam^n / (1 - lam) * d01.

    Uses the 0**0 = 1 convention, so n = 0 returns the invariance radius.
    """
    if n < 0:
        raise ValueError(f"iteration index must be nonnegative, got {n!r}")
    lam = _check_lambda(lam)
    return (lam**n / (1.0 - lam)) * d01


def apost_forward_bound(d_next: Vec, lam: float) -> Vec:
    """Error bound at the current iterate from the step just taken."""
    lam = _check_lambda(lam)
    return (1.0 / (1.0 - lam)) * d_next


def apost_backward_bound(d_prev: Vec, lam: float) -> Vec:
    """Error bound at the new iterate from the step that produced it."""
    lam = _check_lambda(lam)
    return (lam / (1.0 - lam)) * d_prev


def verify_step_contraction(trace: IterationTrace, lam: float) -> bool:
    """Exact check that consecutive step distances contract by lam."""
    lam = _check_lambda(lam)
    steps = trace.step_dists
    if len(steps) < 2:
        raise ValueError("need at least two recorded steps")
    return all(leq(steps[k + 1], lam * steps[k]) for k in range(len(steps) - 1))


def estimate_lambda(trace: IterationTrace, g: GaugeNorm) -> float:
    """Largest observed gauge ratio of consecutive steps.

    Pairs whose earlier step has gauge zero are skipped.  The estimate is a
    plain observation: values at or above ``LAMBDA_CEILING`` mean the trace
    shows no usable contraction and no certificate should be built from it.
    """
    if len(trace.iterates) < 3:
        raise ValueError("need at least three iterates to estimate a factor")
    norms = [mink_norm(s, g) for s in trace.step_dists]
    if all(v == 0.0 for v in norms):
        raise ValueError("all steps are zero; the factor is undefined")
    ratios = [
        norms[k + 1] / norms[k] for k in range(len(norms) - 1) if norms[k] > 0.0
    ]
    if not ratios:
        raise ValueError("no consecutive nonzero steps to compare")
    return max(ratios)


def check_domain_condition(p: Problem, r: Vec) -> str:
    """'verified' when the invariance ball provably sits inside the domain.

    The whole space verifies trivially; a closed ball domain verifies through
    d(x0, center) + r <= radius; a predicate can only ever be checked on the
    iterates themselves, hence 'conditional'.
    """
    if p.domain is None:
        return "verified"
    if isinstance(p.domain, Ball):
        d = p.metric.distance(p.x0, p.domain.center)
        return "verified" if leq(d + r, p.domain.radius) else "conditional"
    return "conditional"


def residual_check(xi, p: Problem) -> Vec:
    """Cone distance between a candidate point and its image under the map."""
    return p.metric.distance(xi, p.map_fn(xi))


def rate_check(
    trace: IterationTrace, xi, p: Problem, slack: float = 0.0
) -> bool:
    """Both convergence-rate inequalities against a known fixed point.

    Checks d(x_{n+1}, xi) <= lam * d(x_n, xi) and
    d(x_n, xi) <= lam^n * d(x_0, xi), each with an additive per-coordinate
    slack for float noise (0 by default).
    """
    if p.lam is None:
        raise ValueError("rate_check needs the problem's contraction factor")
    lam = p.lam
    pad = Vec((slack,) * p.metric.dim)
    dists = [p.metric.distance(x, xi) for x in trace.iterates]
    for n in range(len(dists) - 1):
        if not leq(dists[n + 1], lam * dists[n] + pad):
            return False
    d0 = dists[0]
    for n, dn in enumerate(dists):
        if not leq(dn, lam**n * d0 + pad):
            return False
    return True


def _in_domain(p: Problem, x) -> bool:
    if p.domain is None:
        return True
    if isinstance(p.domain, Ball):
        return ball_contains(p.domain, p.metric, x)
    return bool(p.domain(x))


def _zero_vec(v: Vec) -> bool:
    return all(c == 0.0 for c in v.coords)


def run_picard(p: Problem) -> PicardResult:
    """Iterate the map from x0 until the halting rule fires or max_iter runs out.

    With a supplied factor the engine halts once the backward a posteriori
    bound drops strictly below ``stop_c``; without one it halts once the last
    step distance does.  Every iterate is checked against the domain and an
    escape raises :class:`DomainEscape` carrying the partial trace.  Reaching
    ``max_iter`` is not an error: the result comes back with
    ``converged=False`` and whatever certificate the trace supports.
    """
    inst = p.metric
    trace = IterationTrace()
    x = inst.validate_point(p.x0)
    if not _in_domain(p, x):
        raise ValueError("the start point is outside the declared domain")
    trace.iterates.append(x)
    trace.in_domain_flags.append(True)
    trace.domain_checked_at.append(time.monotonic())

    converged = False
    for _ in range(p.max_iter):
        x_next = inst.validate_point(p.map_fn(x))
        ok = _in_domain(p, x_next)
        trace.iterates.append(x_next)
        trace.in_domain_flags.append(ok)
        trace.domain_checked_at.append(time.monotonic())
        s = inst.distance(x, x_next)
        trace.step_dists.append(s)
        if not ok:
            raise DomainEscape(
                f"iterate {len(trace.iterates) - 1} left the domain", trace
            )
        if p.lam is not None:
            if lt(apost_backward_bound(s, p.lam), p.stop_c):
                converged = True
        elif lt(s, p.stop_c):
            converged = True
        x = x_next
        if converged:
            break

    cert = _build_certificate(p, trace, converged)
    return PicardResult(
        trace=trace,
        certificate=cert,
        fixed_point=x if converged else None,
        converged=converged,
    )


def _build_certificate(
    p: Problem, trace: IterationTrace, converged: bool
) -> Optional[Certificate]:
    steps = trace.step_dists
    if not steps:
        return None
    if p.lam is not None:
        lam, source = p.lam, "given"
    elif all(_zero_vec(s) for s in steps):
        # The map landed exactly on its fixed point; every bound is zero.
        lam, source = 0.0, "estimated"
    elif len(trace.iterates) < 3:
        return None
    else:
        lam = estimate_lambda(trace, p.gauge)
        if lam > LAMBDA_CEILING:
            return None
        source = "estimated"

    d01 = steps[0]
    radius = apriori_bound(0, lam, d01)
    apriori = [apriori_bound(n, lam, d01) for n in range(len(trace.iterates))]
    fwd = [apost_forward_bound(s, lam) for s in steps]
    bwd = [apost_backward_bound(s, lam) for s in steps]

    if source == "given":
        status = "certified" if check_domain_condition(p, radius) == "verified" else "conditional"
        if len(steps) >= 2 and not verify_step_contraction(trace, lam):
            # Observed steps contradict the supplied factor: do not certify.
            status = "heuristic"
    else:
        status = "heuristic"

    residual = None
    try:
        residual = residual_check(trace.iterates[-1], p)
    except (ValueError, ArithmeticError, OverflowError, ZeroDivisionError):
        pass

    return Certificate(
        lambda_used=lam,
        lambda_source=source,
        radius_r=radius,
        apriori=apriori,
        apost_forward=fwd,
        apost_backward=bwd,
        status=status,
        residual=residual,
    )


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _coord_headers(inst: ConeMetric, sample) -> list[str]:
    n = len(tuple(sample))
    if isinstance(inst, WeightedConeMetric) and inst.field == "complex":
        cols = []
        for j in range(n):
            cols.extend([f"x{j}_re", f"x{j}_im"])
        return cols
    return [f"x{j}" for j in range(n)]


def _coord_values(inst: ConeMetric, point) -> list[str]:
    if isinstance(inst, WeightedConeMetric) and inst.field == "complex":
        out = []
        for c in point:
            out.extend([_fmt(c.real), _fmt(c.imag)])
        return out
    return [_fmt(c) for c in point]


def write_trace_csv(
    fh, trace: IterationTrace, cert: Optional[Certificate], inst: ConeMetric
) -> None:
    """Deterministic per-iterate table: point, step distance, bound families.

    Floats are written with 17 significant digits and a '.' decimal
    separator, so identical runs produce byte-identical files.  Cells whose
    quantity is undefined at an iterate (the step at the last row, the
    backward bound at the first) stay empty.
    """
    m = inst.dim
    writer = csv.writer(fh, lineterminator="\n")
    header = ["iter"]
    header += _coord_headers(inst, trace.iterates[0])
    header += [f"step_d{j}" for j in range(m)]
    header += [f"apriori_{j}" for j in range(m)]
    header += [f"apost_fwd_{j}" for j in range(m)]
    header += [f"apost_bwd_{j}" for j in range(m)]
    writer.writerow(header)
    blank = [""] * m
    for n, point in enumerate(trace.iterates):
        row = [str(n)]
        row += _coord_values(inst, point)
        steps = trace.step_dists
        row += [_fmt(c) for c in steps[n]] if n < len(steps) else blank
        if cert is not None:
            row += [_fmt(c) for c in cert.apriori[n]] if n < len(cert.apriori) else blank
            row += [_fmt(c) for c in cert.apost_forward[n]] if n < len(cert.apost_forward) else blank
            row += [_fmt(c) for c in cert.apost_backward[n - 1]] if 1 <= n <= len(cert.apost_backward) else blank
        else:
            row += blank + blank + blank
        writer.writerow(row)


def certificate_to_dict(cert: Optional[Certificate]) -> Optional[dict]:
    if cert is None:
        return None
    return {
        "lambda_used": cert.lambda_used,
        "lambda_source": cert.lambda_source,
        "radius_r": list(cert.radius_r.coords),
        "apriori": [list(v.coords) for v in cert.apriori],
        "apost_forward": [list(v.coords) for v in cert.apost_forward],
        "apost_backward": [list(v.coords) for v in cert.apost_backward],
        "status": cert.status,
        "residual": None if cert.residual is None else list(cert.residual.coords),
    }
