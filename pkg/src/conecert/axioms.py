"""Seeded property suites for the order, gauge and metric layers.

Coordinates are sampled from the dyadic grid 2^-10 * [-2^14, 2^14] and
scalars from 2^-8 * [-2^12, 2^12], so sums, differences and products stay
exactly representable in binary64 and the algebraic suites check their
axioms exactly.  The few genuinely analytic inequalities (triangle
inequalities after a complex modulus or a division) carry an explicit
tolerance instead.

Order predicates are injectable through :class:`OrderOps` so a broken
implementation can be demonstrated to fail with a concrete witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import solid
from .gauge import GaugeNorm, mink_norm, strict_ball_test
from .metrics import (
    DiscreteConeMetric,
    PlusConeMetric,
    WeightedConeMetric,
)
from .solid import SpaceSpec, Vec, bounding_scale, minorant_scale

__all__ = ["OrderOps", "SuiteResult", "Sampler", "run_all", "report_dict"]

_TRIANGLE_TOL = 1e-12


@dataclass(frozen=True)
class OrderOps:
    leq: Callable[[Vec, Vec], bool]
    lt: Callable[[Vec, Vec], bool]
    in_cone: Callable[[Vec], bool]
    in_interior: Callable[[Vec], bool]


DEFAULT_OPS = OrderOps(solid.leq, solid.lt, solid.in_cone, solid.in_interior)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    counterexample: Optional[dict]


class Sampler:
    """Dyadic-grid random values; one instance per suite, seeded by name."""

    def __init__(self, seed):
        self.rng = random.Random(seed)

    def coord(self) -> float:
        return self.rng.randint(-(2**14), 2**14) / 2**10

    def nonneg_coord(self) -> float:
        return self.rng.randint(0, 2**14) / 2**10

    def pos_coord(self) -> float:
        return self.rng.randint(1, 2**14) / 2**10

    def vec(self, n: int) -> Vec:
        return Vec(self.coord() for _ in range(n))

    def nonneg_vec(self, n: int) -> Vec:
        return Vec(self.nonneg_coord() for _ in range(n))

    def pos_vec(self, n: int) -> Vec:
        return Vec(self.pos_coord() for _ in range(n))

    def scalar(self) -> float:
        return self.rng.randint(-(2**12), 2**12) / 2**8

    def scalar_nonneg(self) -> float:
        return self.rng.randint(0, 2**12) / 2**8

    def scalar_pos(self) -> float:
        return self.rng.randint(1, 2**12) / 2**8

    def dyadic_power(self) -> float:
        t = 2.0 ** self.rng.randint(-8, 8)
        return -t if self.rng.random() < 0.5 else t

    def cpoint(self, n: int) -> tuple[complex, ...]:
        return tuple(complex(self.coord(), self.coord()) for _ in range(n))

    def rpoint(self, n: int) -> tuple[float, ...]:
        return tuple(self.coord() for _ in range(n))


def _payload(**kw) -> dict:
    out = {}
    for k, v in kw.items():
        if isinstance(v, Vec):
            out[k] = list(v.coords)
        elif isinstance(v, tuple):
            out[k] = [repr(c) for c in v]
        else:
            out[k] = v
    return out


# ---------------------------------------------------------------- solid ----


def _check_reflexivity(s, n, ops):
    x = s.vec(n)
    if not ops.leq(x, x):
        return _payload(x=x)


def _check_antisymmetry(s, n, ops):
    # Mutual domination must coincide with equality, in both directions.
    x = s.vec(n)
    y = x if s.rng.random() < 0.5 else s.vec(n)
    both = ops.leq(x, y) and ops.leq(y, x)
    if both != (x == y):
        return _payload(x=x, y=y, mutual=both)


def _check_transitivity(s, n, ops):
    x = s.vec(n)
    y = x + s.nonneg_vec(n)
    z = y + s.nonneg_vec(n)
    if not (ops.leq(x, y) and ops.leq(y, z) and ops.leq(x, z)):
        return _payload(x=x, y=y, z=z)


def _check_v1_translation(s, n, ops):
    x = s.vec(n)
    y = x + s.nonneg_vec(n)
    z = s.vec(n)
    if ops.leq(x, y) and not ops.leq(x + z, y + z):
        return _payload(x=x, y=y, z=z)


def _check_v2_nonneg_scaling(s, n, ops):
    x = s.vec(n)
    y = x + s.nonneg_vec(n)
    lam = s.scalar_nonneg()
    if ops.leq(x, y) and not ops.leq(lam * x, lam * y):
        return _payload(x=x, y=y, lam=lam)


def _check_v3_limit_finite(s, n, ops):
    # Contrapositive passage to the limit at resolution 2^-40: a strict
    # violation in the limit shows up in the tail terms of the sequences.
    x = s.vec(n)
    y = Vec(
        c - s.pos_coord() if i == 0 else c for i, c in enumerate(x.coords)
    )
    p, q = s.nonneg_vec(n), s.nonneg_vec(n)
    eps = 2.0**-40
    if ops.leq(x, y):
        return _payload(x=x, y=y, note="premise construction failed")
    if ops.leq(x - eps * p, y + eps * q):
        return _payload(x=x, y=y, p=p, q=q)


def _check_v4_nonpos_scaling(s, n, ops):
    x = s.vec(n)
    y = x + s.nonneg_vec(n)
    lam = -s.scalar_nonneg()
    if ops.leq(x, y) and not ops.leq(lam * y, lam * x):
        return _payload(x=x, y=y, lam=lam)


def _check_v5_scalar_monotone_pos(s, n, ops):
    x = s.nonneg_vec(n)
    lam = s.scalar()
    mu = lam + s.scalar_nonneg()
    if not ops.leq(lam * x, mu * x):
        return _payload(x=x, lam=lam, mu=mu)


def _check_v6_scalar_monotone_neg(s, n, ops):
    x = -s.nonneg_vec(n)
    lam = s.scalar()
    mu = lam + s.scalar_nonneg()
    if not ops.leq(mu * x, lam * x):
        return _payload(x=x, lam=lam, mu=mu)


def _check_v7_addition(s, n, ops):
    x = s.vec(n)
    y = x + s.nonneg_vec(n)
    u = s.vec(n)
    v = u + s.nonneg_vec(n)
    if not ops.leq(x + u, y + v):
        return _payload(x=x, y=y, u=u, v=v)


def _check_s1_strict_implies_weak(s, n, ops):
    x = s.vec(n)
    y = x + s.pos_vec(n)
    if not (ops.lt(x, y) and ops.leq(x, y)):
        return _payload(x=x, y=y)


def _check_s2_weak_then_strict(s, n, ops):
    x = s.vec(n)
    y = x + s.nonneg_vec(n)
    z = y + s.pos_vec(n)
    if not (ops.leq(x, y) and ops.lt(y, z) and ops.lt(x, z)):
        return _payload(x=x, y=y, z=z)


def _check_s3_translation(s, n, ops):
    x = s.vec(n)
    y = x + s.pos_vec(n)
    z = s.vec(n)
    if ops.lt(x, y) and not ops.lt(x + z, y + z):
        return _payload(x=x, y=y, z=z)


def _check_s4_pos_scaling(s, n, ops):
    x = s.vec(n)
    y = x + s.pos_vec(n)
    lam = s.scalar_pos()
    if ops.lt(x, y) and not ops.lt(lam * x, lam * y):
        return _payload(x=x, y=y, lam=lam)


def _check_s5_limit_finite(s, n, ops):
    # Halvings of any sample drop strictly below any interior point within
    # the first 40 terms; checks the 'all but finitely many' clause finitely.
    c = s.pos_vec(n)
    x = s.vec(n)
    hits = [k for k in range(41) if ops.lt(2.0**-k * x, c)]
    if not hits or hits[-1] != 40 or hits != list(range(hits[0], 41)):
        return _payload(x=x, c=c, hits=hits)


def _check_s6_neg_scaling(s, n, ops):
    x = s.vec(n)
    y = x + s.pos_vec(n)
    lam = -s.scalar_pos()
    if ops.lt(x, y) and not ops.lt(lam * y, lam * x):
        return _payload(x=x, y=y, lam=lam)


def _check_s7_scalar_strict_pos(s, n, ops):
    x = s.pos_vec(n)
    lam = s.scalar()
    mu = lam + s.scalar_pos()
    if not ops.lt(lam * x, mu * x):
        return _payload(x=x, lam=lam, mu=mu)


def _check_s8_scalar_strict_neg(s, n, ops):
    x = -s.pos_vec(n)
    lam = s.scalar()
    mu = lam + s.scalar_pos()
    if not ops.lt(mu * x, lam * x):
        return _payload(x=x, lam=lam, mu=mu)


def _check_s9_strict_then_weak(s, n, ops):
    x = s.vec(n)
    y = x + s.pos_vec(n)
    z = y + s.nonneg_vec(n)
    if not (ops.lt(x, y) and ops.leq(y, z) and ops.lt(x, z)):
        return _payload(x=x, y=y, z=z)


def _check_s10_mixed_addition(s, n, ops):
    x = s.vec(n)
    y = x + s.pos_vec(n)
    u = s.vec(n)
    v = u + s.nonneg_vec(n)
    if not ops.lt(x + u, y + v):
        return _payload(x=x, y=y, u=u, v=v)


def _check_s11_small_multiples(s, n, ops):
    b = s.pos_vec(n)
    kind = s.rng.random()
    if kind < 0.4:
        x = -s.nonneg_vec(n)
    elif kind < 0.7:
        x = Vec(s.rng.randint(-4, 4) * 2.0**-45 for _ in range(n))
    else:
        x = s.vec(n)
    lams = [2.0**-k for k in range(41)]
    if all(ops.lt(x, lam * b) for lam in lams):
        cap = 2.0**-40 * max(b.coords)
        if not all(c <= cap for c in x.coords):
            return _payload(x=x, b=b, cap=cap)


def _check_correspondence_leq(s, n, ops):
    x = s.vec(n)
    y = x if s.rng.random() < 0.3 else s.vec(n)
    if ops.leq(x, y) != all(a <= b for a, b in zip(x.coords, y.coords)):
        return _payload(x=x, y=y)


def _check_correspondence_lt(s, n, ops):
    x = s.vec(n)
    y = x if s.rng.random() < 0.3 else s.vec(n)
    if ops.lt(x, y) != all(a < b for a, b in zip(x.coords, y.coords)):
        return _payload(x=x, y=y)


def _check_interior_positive_scaling(s, n, ops):
    x = s.pos_vec(n)
    lam = s.scalar_pos()
    if not ops.in_interior(lam * x):
        return _payload(x=x, lam=lam)


def _check_interior_cone_addition(s, n, ops):
    x = s.nonneg_vec(n)
    y = s.pos_vec(n)
    if not ops.in_interior(x + y):
        return _payload(x=x, y=y)


def _check_interior_excludes_zero(s, n, ops):
    if ops.in_interior(Vec.zeros(n)):
        return _payload(n=n)


def _check_minorant_witness(s, n, ops):
    spec = SpaceSpec(n, s.pos_vec(n))
    vs = [s.pos_vec(n) for _ in range(s.rng.randint(1, 3))]
    lam = minorant_scale(vs, spec)
    if lam <= 0 or not all(ops.lt(lam * spec.base, x) for x in vs):
        return _payload(lam=lam, base=spec.base)


def _check_bounding_witness(s, n, ops):
    spec = SpaceSpec(n, s.pos_vec(n))
    vs = [s.vec(n) for _ in range(s.rng.randint(1, 3))]
    lam = bounding_scale(vs, spec)
    scaled = lam * spec.base
    if not all(ops.lt(-scaled, x) and ops.lt(x, scaled) for x in vs):
        return _payload(lam=lam, base=spec.base)


# ---------------------------------------------------------------- gauge ----


def _check_gauge_definiteness(s, n, ops):
    g = GaugeNorm(SpaceSpec(n, s.pos_vec(n)))
    x = Vec.zeros(n) if s.rng.random() < 0.2 else s.vec(n)
    v = mink_norm(x, g)
    if v < 0 or (v == 0.0) != (x == Vec.zeros(n)):
        return _payload(x=x, base=g.spec.base, value=v)


def _check_gauge_homogeneity(s, n, ops):
    g = GaugeNorm(SpaceSpec(n, s.pos_vec(n)))
    x = s.vec(n)
    t = s.dyadic_power()
    if mink_norm(t * x, g) != abs(t) * mink_norm(x, g):
        return _payload(x=x, t=t, base=g.spec.base)


def _check_gauge_triangle(s, n, ops):
    g = GaugeNorm(SpaceSpec(n, s.pos_vec(n)))
    x, y = s.vec(n), s.vec(n)
    if mink_norm(x + y, g) > mink_norm(x, g) + mink_norm(y, g) + _TRIANGLE_TOL:
        return _payload(x=x, y=y, base=g.spec.base)


def _check_gauge_monotone(s, n, ops):
    g = GaugeNorm(SpaceSpec(n, s.pos_vec(n)))
    x = s.nonneg_vec(n)
    y = x + s.nonneg_vec(n)
    if mink_norm(x, g) > mink_norm(y, g):
        return _payload(x=x, y=y, base=g.spec.base)


def _check_gauge_ball_equivalence(s, n, ops):
    g = GaugeNorm(SpaceSpec(n, s.pos_vec(n)))
    x = s.vec(n)
    eps = s.scalar_pos()
    if strict_ball_test(x, eps, g) != (mink_norm(x, g) < eps):
        return _payload(x=x, eps=eps, base=g.spec.base)


# --------------------------------------------------------------- metric ----


def _metric_axiom_failure(inst, x, y, z, pad: Vec | None):
    d_xy = inst.distance(x, y)
    if not solid.in_cone(d_xy):
        return "distance left the cone"
    if (d_xy == Vec.zeros(inst.dim)) != (x == y):
        return "zero distance does not characterize equality"
    if d_xy != inst.distance(y, x):
        return "asymmetric"
    lhs = inst.distance(x, z)
    rhs = inst.distance(x, y) + inst.distance(y, z)
    if pad is not None:
        rhs = rhs + pad
    if not solid.leq(lhs, rhs):
        return "triangle inequality failed"
    return None


def _check_weighted_real_axioms(s, n, ops):
    inst = WeightedConeMetric([s.scalar_pos() for _ in range(n)])
    x, y, z = s.rpoint(n), s.rpoint(n), s.rpoint(n)
    if s.rng.random() < 0.1:
        y = x
    why = _metric_axiom_failure(inst, x, y, z, None)
    if why:
        return _payload(x=x, y=y, z=z, why=why)


def _check_weighted_complex_axioms(s, n, ops):
    inst = WeightedConeMetric([s.scalar_pos() for _ in range(n)], field="complex")
    x, y, z = s.cpoint(n), s.cpoint(n), s.cpoint(n)
    if s.rng.random() < 0.1:
        y = x
    # The complex modulus rounds, so the triangle check carries a pad.
    why = _metric_axiom_failure(inst, x, y, z, Vec((_TRIANGLE_TOL,) * n))
    if why:
        return _payload(x=x, y=y, z=z, why=why)


def _check_discrete_axioms(s, n, ops):
    inst = DiscreteConeMetric(s.pos_vec(n))
    x, y, z = (s.rng.randint(0, 4) for _ in range(3))
    why = _metric_axiom_failure(inst, x, y, z, None)
    if why:
        return _payload(x=x, y=y, z=z, why=why)


def _check_plus_axioms(s, n, ops):
    inst = PlusConeMetric(n)
    x, y, z = s.nonneg_vec(n), s.nonneg_vec(n), s.nonneg_vec(n)
    if s.rng.random() < 0.1:
        y = x
    why = _metric_axiom_failure(inst, x, y, z, None)
    if why:
        return _payload(x=x, y=y, z=z, why=why)


def _check_scalarized_metric(s, n, ops):
    inst = WeightedConeMetric([s.scalar_pos() for _ in range(n)])
    g = GaugeNorm(SpaceSpec(n, s.pos_vec(n)))
    x, y, z = s.rpoint(n), s.rpoint(n), s.rpoint(n)
    if s.rng.random() < 0.1:
        y = x
    rho_xy = mink_norm(inst.distance(x, y), g)
    if (rho_xy == 0.0) != (x == y):
        return _payload(x=x, y=y, why="zero value does not characterize equality")
    if rho_xy != mink_norm(inst.distance(y, x), g):
        return _payload(x=x, y=y, why="asymmetric")
    rho_xz = mink_norm(inst.distance(x, z), g)
    rho_yz = mink_norm(inst.distance(y, z), g)
    if rho_xz > rho_xy + rho_yz + _TRIANGLE_TOL:
        return _payload(x=x, y=y, z=z, why="triangle inequality failed")


def _check_cone_norm_homogeneity(s, n, ops):
    inst = WeightedConeMetric([s.scalar_pos() for _ in range(n)], field="complex")
    x = s.cpoint(n)
    t = s.dyadic_power()
    lhs = inst.norm(tuple(t * c for c in x))
    rhs = abs(t) * inst.norm(x)
    if lhs != rhs:
        return _payload(x=x, t=t)
    u = s.scalar()
    lhs = inst.norm(tuple(u * c for c in x))
    rhs = abs(u) * inst.norm(x)
    scale = max(1.0, max(rhs.coords))
    if any(abs(a - b) > _TRIANGLE_TOL * scale for a, b in zip(lhs, rhs)):
        return _payload(x=x, t=u)


def _check_ball_identity(s, n, ops):
    inst = WeightedConeMetric([s.scalar_pos() for _ in range(n)])
    g = GaugeNorm(SpaceSpec(n, s.pos_vec(n)))
    x, y = s.rpoint(n), s.rpoint(n)
    eps = s.scalar_pos()
    d = inst.distance(x, y)
    scalar_member = mink_norm(d, g) < eps
    cone_member = strict_ball_test(d, eps, g)
    if scalar_member != cone_member:
        return _payload(x=x, y=y, eps=eps, base=g.spec.base)


def _check_discrete_stationary(s, n, ops):
    inst = DiscreteConeMetric(s.pos_vec(n))
    length = s.rng.randint(2, 14)
    seq = [s.rng.randint(0, 4) for _ in range(length)]
    if s.rng.random() < 0.7:
        seq += [s.rng.randint(0, 4)] * s.rng.randint(1, 10)
    cutoff = None
    for start in range(len(seq)):
        tail = seq[start:]
        if all(
            solid.lt(inst.distance(a, b), inst.a)
            for i, a in enumerate(tail)
            for b in tail[i:]
        ):
            cutoff = start
            break
    if cutoff is not None and len(set(seq[cutoff:])) > 1:
        return _payload(seq=seq, cutoff=cutoff)


SUITES: list[tuple[str, Callable]] = [
    ("reflexivity", _check_reflexivity),
    ("antisymmetry", _check_antisymmetry),
    ("transitivity", _check_transitivity),
    ("V1_translation", _check_v1_translation),
    ("V2_nonneg_scaling", _check_v2_nonneg_scaling),
    ("V3_limit_finite", _check_v3_limit_finite),
    ("V4_nonpos_scaling", _check_v4_nonpos_scaling),
    ("V5_scalar_monotone_pos", _check_v5_scalar_monotone_pos),
    ("V6_scalar_monotone_neg", _check_v6_scalar_monotone_neg),
    ("V7_addition", _check_v7_addition),
    ("S1_strict_implies_weak", _check_s1_strict_implies_weak),
    ("S2_weak_then_strict", _check_s2_weak_then_strict),
    ("S3_translation", _check_s3_translation),
    ("S4_pos_scaling", _check_s4_pos_scaling),
    ("S5_limit_finite", _check_s5_limit_finite),
    ("S6_neg_scaling", _check_s6_neg_scaling),
    ("S7_scalar_strict_pos", _check_s7_scalar_strict_pos),
    ("S8_scalar_strict_neg", _check_s8_scalar_strict_neg),
    ("S9_strict_then_weak", _check_s9_strict_then_weak),
    ("S10_mixed_addition", _check_s10_mixed_addition),
    ("S11_small_multiples", _check_s11_small_multiples),
    ("correspondence_leq_cone", _check_correspondence_leq),
    ("correspondence_lt_interior", _check_correspondence_lt),
    ("interior_positive_scaling", _check_interior_positive_scaling),
    ("interior_cone_addition", _check_interior_cone_addition),
    ("interior_excludes_zero", _check_interior_excludes_zero),
    ("minorant_witness", _check_minorant_witness),
    ("bounding_witness", _check_bounding_witness),
    ("gauge_definiteness", _check_gauge_definiteness),
    ("gauge_homogeneity", _check_gauge_homogeneity),
    ("gauge_triangle", _check_gauge_triangle),
    ("gauge_monotone", _check_gauge_monotone),
    ("gauge_ball_equivalence", _check_gauge_ball_equivalence),
    ("weighted_real_metric", _check_weighted_real_axioms),
    ("weighted_complex_metric", _check_weighted_complex_axioms),
    ("discrete_metric", _check_discrete_axioms),
    ("plus_metric", _check_plus_axioms),
    ("scalarized_metric", _check_scalarized_metric),
    ("cone_norm_homogeneity", _check_cone_norm_homogeneity),
    ("ball_identity", _check_ball_identity),
    ("discrete_stationary_cauchy", _check_discrete_stationary),
]


def run_all(
    seed: int = 0,
    samples: int = 1000,
    dims: Sequence[int] = tuple(range(1, 9)),
    ops: OrderOps = DEFAULT_OPS,
) -> list[SuiteResult]:
    """Run every suite with per-suite seeds derived from the root seed."""
    dims = list(dims)
    if not dims or any(d < 1 for d in dims):
        raise ValueError("dims must be a nonempty list of positive integers")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    results = []
    for name, check in SUITES:
        smp = Sampler(f"{seed}:{name}")
        counterexample = None
        checks = 0
        for i in range(samples):
            checks += 1
            n = dims[i % len(dims)]
            counterexample = check(smp, n, ops)
            if counterexample is not None:
                break
        results.append(
            SuiteResult(
                name=name,
                passed=counterexample is None,
                checks=checks,
                counterexample=counterexample,
            )
        )
    return results


def report_dict(results: list[SuiteResult], seed: int, samples: int) -> dict:
    return {
        "seed": seed,
        "samples": samples,
        "all_passed": all(r.passed for r in results),
        "suites": [
            {
                "name": r.name,
                "passed": r.passed,
                "checks": r.checks,
                "counterexample": r.counterexample,
            }
            for r in results
        ],
    }
