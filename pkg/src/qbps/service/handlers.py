"""Request handlers shared by the HTTP app and the command-line client.

Each handler takes a validated request model and returns a response model;
domain errors propagate as the core exceptions (bad input: QuiverError,
LatticeError, ZonotopeError, ValueError; unmet hypotheses:
PreconditionError) and are mapped to transport-specific codes by callers.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .. import oracle
from ..bps import (
    PreconditionError,
    decompose_weight,
    dd_generators,
    is_good_weight,
    magic_generators,
)
from ..generic import GenericReal, parse_generic
from ..lattice import GenericWeight, Weight, sigma, tau
from ..quiver import (
    DimensionVector,
    Quiver,
    QuiverError,
    alpha_min,
    assumption_flags,
    double,
    frame,
    triple,
    very_symmetric_companion,
)
from ..sod import framed_summands, knorrer_shift_check, preprojective_summands, unframed_summands
from ..structure import gorenstein_flags, serre_report, support_gate
from ..zonotope import contains, on_boundary, r_invariant, v_zonotope, w_zonotope, zonotope_min_scale
from . import models as m


def _quiver(qm: m.QuiverModel, allow_framing: bool = False) -> Quiver:
    return Quiver.from_json_dict(qm.model_dump(exclude_none=True), allow_framing=allow_framing)


def _quiver_model(q: Quiver) -> m.QuiverModel:
    return m.QuiverModel(**q.to_json_dict())


def _dim(q: Quiver, data: dict) -> DimensionVector:
    return DimensionVector.from_json_dict(q, data)


def _delta_weight(d: DimensionVector, delta: Optional[dict], v: Optional[int]) -> Weight:
    if delta is not None and v is not None:
        raise QuiverError("give either a delta weight or v, not both")
    if delta is not None:
        return Weight.from_json_dict(d, delta)
    if v is not None:
        return tau(d).scale(v)
    return Weight.zero(d)


def describe(req: m.DescribeRequest) -> m.DescribeResponse:
    q = _quiver(req.quiver)
    flags = assumption_flags(q)
    return m.DescribeResponse(
        vertices=list(q.vertices),
        edge_count=len(q.edges),
        symmetric=flags.symmetric,
        same_parity_loops=flags.same_parity_loops,
        assum1=flags.assum1,
        assum11=flags.assum11,
        very_symmetric=flags.very_symmetric,
        very_symmetric_A=flags.very_symmetric_A,
        alpha_min=alpha_min(q),
    )


def build(req: m.BuildRequest) -> m.BuildResponse:
    q = _quiver(req.quiver)
    uspec = None
    if req.op == "double":
        out = double(q)
    elif req.op == "triple":
        out = triple(q)
    elif req.op == "frame":
        out = frame(q, req.alpha if req.alpha is not None else 1)
    else:
        out, spec = very_symmetric_companion(q, req.A)
        uspec = list(spec.edges)
    return m.BuildResponse(quiver=_quiver_model(out), uspec=uspec)


def generators(req: m.GeneratorsRequest) -> m.GeneratorsResponse:
    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    base = _delta_weight(d, req.delta, req.v)
    if req.mu is not None:
        mu = parse_generic(req.mu)
        delta = GenericWeight(base + sigma(d).scale(mu.q), sigma(d).scale(mu.eps))
    else:
        delta = GenericWeight.exact(base)
    gens = magic_generators(q, d, delta) if req.window == "magic" else dd_generators(q, d, delta)
    return m.GeneratorsResponse(
        generators=[g.to_json_dict() for g in gens],
        count=len(gens),
    )


def decompose(req: m.DecomposeRequest) -> m.DecomposeResponse:
    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    chi = Weight.from_json_dict(d, req.chi)
    delta = _delta_weight(d, req.delta, req.v)
    path, label, thetas = decompose_weight(q, d, chi, delta)
    return m.DecomposeResponse(
        steps=[m.PathStepModel(parent=s.parent.to_json_dict(),
                               parts=[p.to_json_dict() for p in s.parts],
                               r=str(s.r))
               for s in path.steps],
        partition=[p.to_json_dict() for p in path.partition],
        residuals=[r.to_json_dict() for r in path.residuals],
        label=[(di.to_json_dict(), str(v)) for di, v in label.parts],
        thetas=[t.to_json_dict() for t in thetas],
        weight=str((chi - delta).coefficient_sum()),
    )


def _sod_response(report, generator_total: Optional[int] = None) -> m.SodResponse:
    data = report.to_json_dict()
    return m.SodResponse(
        d=data["d"],
        window=data["window"],
        labels=data["labels"],
        count=data["count"],
        generator_total=generator_total,
    )


def sod_framed(req: m.FramedSodRequest) -> m.SodResponse:
    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    delta = _delta_weight(d, req.delta, None)
    report = framed_summands(q, d, parse_generic(req.mu), req.alpha, delta,
                             with_generator_counts=req.generator_counts)
    total = sum(report.generator_counts) if report.generator_counts is not None else None
    return _sod_response(report, total)


def sod_unframed(req: m.UnframedSodRequest) -> m.SodResponse:
    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    window = (parse_generic(req.window[0]), parse_generic(req.window[1]))
    return _sod_response(unframed_summands(q, d, req.w, window))


def sod_preprojective(req: m.PreprojectiveSodRequest) -> m.SodResponse:
    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    window = (parse_generic(req.window[0]), parse_generic(req.window[1]))
    return _sod_response(preprojective_summands(q, d, window))


def zonotope(req: m.ZonotopeRequest) -> m.ZonotopeResponse:
    from fractions import Fraction as _F

    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    x = Weight.from_json_dict(d, req.x)
    z = w_zonotope(q, d) if req.window == "W" else v_zonotope(q, d)
    if req.op == "contains":
        return m.ZonotopeResponse(contains=contains(z, x, _F(req.scale)))
    if req.op == "boundary":
        return m.ZonotopeResponse(boundary=on_boundary(z, x))
    return m.ZonotopeResponse(r=str(zonotope_min_scale(z, x)))


def good_weight(req: m.GoodWeightRequest) -> m.GoodWeightResponse:
    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    per_vertex = {a: parse_generic(s) for a, s in req.delta.items()}
    delta = GenericWeight.weyl_invariant(d, per_vertex)
    return m.GoodWeightResponse(good=is_good_weight(q, d, delta))


def support(req: m.SupportRequest) -> dict:
    q = _quiver(req.quiver) if req.quiver is not None else None
    if q is not None:
        d = _dim(q, req.d)
    else:
        d = DimensionVector.make(sorted(req.d), req.d)
    return support_gate(d, req.v, q).to_json_dict()


def structure(req: m.StructureRequest) -> dict:
    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    if req.v is None:
        return gorenstein_flags(q, d).to_json_dict()
    return serre_report(q, d, req.v).to_json_dict()


def knorrer(req: m.KnorrerRequest) -> m.KnorrerResponse:
    q = _quiver(req.quiver)
    d = _dim(q, req.d)
    partition = [DimensionVector.from_json_dict(q, p) for p in req.partition]
    total = partition[0]
    for p in partition[1:]:
        total = total.add(p)
    if total != d:
        raise QuiverError("partition does not sum to d")
    ok, residual = knorrer_shift_check(q, d, partition, A=req.A)
    return m.KnorrerResponse(ok=ok, residual=residual.to_json_dict())


def verify(req: m.VerifyRequest) -> m.VerifyResponse:
    """Run the independent-oracle suite on the fixture quivers."""
    from ..quiver import a2_quiver, jordan_quiver, loop_quiver

    rng = random.Random(req.seed)
    checks: list[m.VerifyCheck] = []

    def rand_weight(d: DimensionVector, den: int = 8) -> Weight:
        return Weight(d, tuple(Fraction(rng.randint(-4 * den, 4 * den), den)
                               for _ in range(d.total)))

    membership_cases = [
        (triple(jordan_quiver()), {"0": 2}),
        (triple(jordan_quiver()), {"0": 3}),
        (triple(a2_quiver()), {"0": 1, "1": 1}),
        (double(loop_quiver(2)), {"0": 2}),
    ]
    for q, dm in membership_cases:
        d = DimensionVector.make(q, dm)
        z = w_zonotope(q, d)
        bad = 0
        for _ in range(req.samples):
            x = rand_weight(d)
            if contains(z, x) != oracle.membership_by_facets(z, x):
                bad += 1
        checks.append(m.VerifyCheck(
            name=f"membership-dual {dm}", passed=bad == 0,
            detail=f"{req.samples} points, {bad} disagreements"))

    rinv_cases = [(triple(jordan_quiver()), {"0": 2}), (triple(jordan_quiver()), {"0": 3})]
    for q, dm in rinv_cases:
        d = DimensionVector.make(q, dm)
        bad = 0
        for _ in range(req.samples):
            coords = [Fraction(rng.randint(-32, 32), 8) for _ in range(d.total - 1)]
            coords.append(-sum(coords))
            x = Weight(d, tuple(coords))
            if r_invariant(q, d, x) != oracle.rinv_by_cuts(q, d, x):
                bad += 1
        checks.append(m.VerifyCheck(
            name=f"rinv-dual {dm}", passed=bad == 0,
            detail=f"{req.samples} points, {bad} disagreements"))

    mu = GenericReal(Fraction(0), Fraction(-1))
    for dm in ({"0": 2}, {"0": 3}):
        q = triple(jordan_quiver())
        d = DimensionVector.make(q, dm)
        rep = framed_summands(q, d, mu, 1, with_generator_counts=True)
        scan = oracle.window_scan(q, d, mu, 1)
        total = sum(rep.generator_counts)
        checks.append(m.VerifyCheck(
            name=f"window-scan {dm}", passed=scan == total,
            detail=f"scan={scan} labels-product={total}"))

    da2 = double(a2_quiver())
    d11 = DimensionVector.make(da2, {"0": 1, "1": 1})
    from ..sod import ordered_partitions
    ok_all = True
    for part in ordered_partitions(d11):
        ok, _ = knorrer_shift_check(da2, d11, part)
        ok_all = ok_all and ok
    checks.append(m.VerifyCheck(name="knorrer double(A2)", passed=ok_all,
                                detail="all partitions of (1,1)"))

    return m.VerifyResponse(ok=all(c.passed for c in checks), checks=checks)
