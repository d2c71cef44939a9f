"""Numeric structure reports for tripled quivers and preprojective good
moduli spaces: the coprimality gate, dimension formula, Gorenstein flags,
and applicability bits for the Serre-functor and indecomposability results.

All flags are "sufficient conditions verified": True means the cited
hypothesis holds, None means nothing is asserted (never "false").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .quiver import DimensionVector, Quiver, alpha, alpha_min


class StructureError(ValueError):
    pass


@dataclass(frozen=True)
class SupportGate:
    coprime: bool
    assum_parity: bool  # alpha(a, b) even for all a, b
    witnesses: tuple[tuple[int, Fraction], ...]  # (dbar', v') with v' integral

    def to_json_dict(self) -> dict:
        return {
            "gate": self.coprime,
            "assum_parity": self.assum_parity,
            "witnesses": [{"dbar_prime": t, "v_prime": str(v)} for t, v in self.witnesses],
        }


def support_gate(d: DimensionVector, v: int, q_circ: Optional[Quiver] = None) -> SupportGate:
    """gcd(v, dbar) = 1 gate; witnesses list every proper sub-total dbar'
    with v * dbar' / dbar integral (the gate holds iff none exists)."""
    dbar = d.total
    if dbar < 1:
        raise StructureError("total dimension must be at least 1")
    witnesses = []
    for t in range(1, dbar):
        vp = Fraction(v * t, dbar)
        if vp.denominator == 1:
            witnesses.append((t, vp))
    parity = True
    if q_circ is not None:
        parity = all(alpha(q_circ, a, b) % 2 == 0
                     for a in q_circ.vertices for b in q_circ.vertices)
    return SupportGate(
        coprime=(gcd(v, dbar) == 1),
        assum_parity=parity,
        witnesses=tuple(witnesses),
    )


def dim_P(q_circ: Quiver, d: DimensionVector) -> Optional[int]:
    """dim P(d) = 2 + sum_{a,b} d^a d^b alpha_{a,b}; asserted only when
    alpha_min >= 2, else None ("not asserted")."""
    if alpha_min(q_circ) < 2:
        return None
    total = 2
    for a in q_circ.vertices:
        for b in q_circ.vertices:
            total += d[a] * d[b] * alpha(q_circ, a, b)
    return total


def _is_g_loop_special_case(q_circ: Quiver, d: DimensionVector) -> bool:
    # one vertex, two loops, total dimension two
    return (len(q_circ.vertices) == 1
            and q_circ.loop_count(q_circ.vertices[0]) == 2
            and d.total == 2)


@dataclass(frozen=True)
class StructureReport:
    alpha_min: int
    dbar: int
    gcd_gate: Optional[bool]
    assum_parity: bool
    dim_P: Optional[int]
    xy_gorenstein: Optional[bool]
    p_classical_normal: Optional[bool]
    p_gorenstein: Optional[bool]
    serre_trivial_applicable: Optional[bool] = None
    indecomposable_applicable: Optional[bool] = None
    regular_proper_applicable: Optional[bool] = None
    witnesses: tuple[tuple[int, Fraction], ...] = ()

    def to_json_dict(self) -> dict:
        def flag(x):
            return "unknown" if x is None else x

        out = {
            "alpha_min": self.alpha_min,
            "dbar": self.dbar,
            "assum_parity": self.assum_parity,
            "dim_P": "not_asserted" if self.dim_P is None else self.dim_P,
            "flags": {
                "XY_gorenstein": flag(self.xy_gorenstein),
                "P_classical_normal": flag(self.p_classical_normal),
                "P_gorenstein": flag(self.p_gorenstein),
            },
        }
        if self.gcd_gate is not None:
            out["gate"] = self.gcd_gate
            out["witnesses"] = [{"dbar_prime": t, "v_prime": str(v)}
                                for t, v in self.witnesses]
            out["flags"]["serre_trivial_applicable"] = flag(self.serre_trivial_applicable)
            out["flags"]["indecomposable_applicable"] = flag(self.indecomposable_applicable)
            out["flags"]["regular_proper_applicable"] = flag(self.regular_proper_applicable)
        return out


def gorenstein_flags(q_circ: Quiver, d: DimensionVector) -> StructureReport:
    """Sufficient-condition bits from the edge statistic alpha_min: None
    means no criterion applies, never a claim of failure."""
    am = alpha_min(q_circ)
    dbar = d.total
    xy = True if am >= 1 else None
    normal = True if am >= 2 else None
    if am >= 3 or (am == 2 and dbar >= 3) or _is_g_loop_special_case(q_circ, d):
        p_gor: Optional[bool] = True
    else:
        p_gor = None
    return StructureReport(
        alpha_min=am,
        dbar=dbar,
        gcd_gate=None,
        assum_parity=all(alpha(q_circ, a, b) % 2 == 0
                         for a in q_circ.vertices for b in q_circ.vertices),
        dim_P=dim_P(q_circ, d),
        xy_gorenstein=xy,
        p_classical_normal=normal,
        p_gorenstein=p_gor,
    )


def serre_report(q_circ: Quiver, d: DimensionVector, v: int) -> StructureReport:
    """Applicability of the trivial-Serre-functor, indecomposability, and
    regular/proper statements for the reduced preprojective window at
    weight v."""
    base = gorenstein_flags(q_circ, d)
    gate = support_gate(d, v, q_circ)
    a1 = gate.assum_parity
    # applicability is decidable (the hypotheses either hold or they do not),
    # unlike the geometric flags above
    serre = bool(a1 and base.alpha_min >= 2 and base.p_gorenstein is True and gate.coprime)
    indec = bool(a1 and base.p_classical_normal is True and gate.coprime)
    reg = bool(base.alpha_min >= 2 and gate.coprime)
    return StructureReport(
        alpha_min=base.alpha_min,
        dbar=base.dbar,
        gcd_gate=gate.coprime,
        assum_parity=a1,
        dim_P=base.dim_P,
        xy_gorenstein=base.xy_gorenstein,
        p_classical_normal=base.p_classical_normal,
        p_gorenstein=base.p_gorenstein,
        serre_trivial_applicable=serre,
        indecomposable_applicable=indec,
        regular_proper_applicable=reg,
        witnesses=gate.witnesses,
    )
