"""Finite enumeration of semiorthogonal-decomposition summands.

Framed reports list every label (d_i, v_i) with slopes in a half-open window
of width alpha; unframed and preprojective reports take an explicit slope
window because their full index sets are infinite.  Labels are emitted in a
linear extension of the summand order, ties broken lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bps import (
    EQUAL,
    A_BEFORE_B,
    B_BEFORE_A,
    PreconditionError,
    SummandLabel,
    compare_summands,
    is_good_weight,
    magic_generators,
)
from .generic import GenericReal
from .lattice import (
    GenericWeight,
    Weight,
    block_cocharacter,
    doubled_theta_weights,
    embed_from_blocks,
    rep_weights,
    restrict_to_block,
    sigma,
    tau,
    theta_weights,
    uspec_weight_sum,
)
from .quiver import (
    DimensionVector,
    Quiver,
    is_symmetric,
    loop_parities,
    triple,
    very_symmetric_companion,
)


class SodError(ValueError):
    pass


@dataclass(frozen=True)
class SodReport:
    quiver: Quiver
    d: DimensionVector
    window: dict
    labels: tuple[SummandLabel, ...]
    block_weights: tuple[tuple[Weight, ...], ...]  # theta_i + delta_i + v_i tau per part
    shifted_weights: Optional[tuple[tuple[Fraction, ...], ...]] = None
    generator_counts: Optional[tuple[int, ...]] = None

    @property
    def count(self) -> int:
        return len(self.labels)

    def to_json_dict(self) -> dict:
        labels = []
        for i, (lab, ws) in enumerate(zip(self.labels, self.block_weights)):
            entry = {
                "parts": [[di.to_json_dict(), str(v)] for di, v in lab.parts],
                "weights": [w.to_json_dict() for w in ws],
            }
            if self.shifted_weights is not None:
                entry["shifted"] = [str(x) for x in self.shifted_weights[i]]
            if self.generator_counts is not None:
                entry["generators"] = self.generator_counts[i]
            labels.append(entry)
        return {
            "d": self.d.to_json_dict(),
            "window": self.window,
            "labels": labels,
            "count": self.count,
        }


def _generic_json(x: GenericReal) -> dict:
    return {"q": str(x.q), "eps": x.eps_sign()}


def ordered_partitions(d: DimensionVector) -> list[list[DimensionVector]]:
    """All ordered tuples of nonzero dimension vectors summing to d."""
    nonzero: list[DimensionVector] = []

    def sub_vectors(idx: int, acc: list[int]):
        if idx == len(d.values):
            v = DimensionVector(d.vertices, tuple(acc))
            if not v.is_zero():
                nonzero.append(v)
            return
        for x in range(d.values[idx] + 1):
            sub_vectors(idx + 1, acc + [x])

    sub_vectors(0, [])
    out: list[list[DimensionVector]] = []

    def rec(remaining: DimensionVector, acc: list[DimensionVector]):
        if remaining.is_zero():
            out.append(list(acc))
            return
        for e in nonzero:
            if all(x <= y for x, y in zip(e.values, remaining.values)):
                rec(remaining.sub(e), acc + [e])

    rec(d, [])
    return out


def _coset_values(offset: Fraction, lo: GenericReal, hi: GenericReal,
                  lo_strict: bool, hi_strict: bool) -> list[Fraction]:
    """All v = offset + n (n integer) inside the window."""
    out = []
    frac = offset % 1
    n_lo = (lo.q - frac).__floor__() - 1
    n_hi = (hi.q - frac).__ceil__() + 1
    for n in range(n_lo, n_hi + 1):
        v = frac + n
        ok_lo = (lo < v) if lo_strict else (lo <= v)
        ok_hi = (hi > v) if hi_strict else (hi >= v)
        if ok_lo and ok_hi:
            out.append(v)
    return out


def _enumerate_labels(q: Quiver, d: DimensionVector, delta: Weight,
                      slope_lo: GenericReal, slope_hi: GenericReal,
                      hi_strict: bool, total_weight: Optional[Fraction],
                      doubled: bool = False) -> list[tuple[SummandLabel, tuple[Weight, ...]]]:
    results: list[tuple[SummandLabel, tuple[Weight, ...]]] = []
    for partition in ordered_partitions(d):
        if doubled:
            thetas = doubled_theta_weights(q, partition)
            deltas = [Weight.zero(p) for p in partition]
        else:
            thetas = theta_weights(q, partition)
            deltas = [restrict_to_block(delta, partition, i) for i in range(len(partition))]
        window_fixed = [th + de for th, de in zip(thetas, deltas)]
        # v_i ranges: integrality of the coefficient sum of theta_i+delta_i+v_i*tau
        per_block: list[list[Fraction]] = []
        for p, wf in zip(partition, window_fixed):
            offset = -wf.coefficient_sum()
            vals = _coset_values(offset, slope_lo * p.total, slope_hi * p.total,
                                 lo_strict=False, hi_strict=hi_strict)
            per_block.append(vals)

        def rec(i: int, prev_slope: Optional[Fraction], acc: list[Fraction]):
            if i == len(partition):
                if total_weight is not None and sum(acc) != total_weight:
                    return
                label = SummandLabel(tuple((p, v) for p, v in zip(partition, acc)))
                weights = tuple(wf + tau(p).scale(v)
                                for p, wf, v in zip(partition, window_fixed, acc))
                results.append((label, weights))
                return
            for v in per_block[i]:
                slope = v / partition[i].total
                if prev_slope is not None and slope <= prev_slope:
                    continue
                rec(i + 1, slope, acc + [v])

        rec(0, None, [])
    return results


def _order_report(q: Quiver, d: DimensionVector,
                  entries: list[tuple[SummandLabel, tuple[Weight, ...]]]
                  ) -> list[tuple[SummandLabel, tuple[Weight, ...]]]:
    """Deterministic linear extension of the summand order: topological sort
    of the strict comparisons with lexicographic tie-breaking."""
    n = len(entries)

    def lex_key(entry):
        label = entry[0]
        return tuple((tuple(di.values), v) for di, v in label.parts)

    order = sorted(range(n), key=lambda i: lex_key(entries[i]))
    after: dict[int, set[int]] = {i: set() for i in range(n)}
    indeg = {i: 0 for i in range(n)}
    for ii in range(n):
        for jj in range(ii + 1, n):
            i, j = order[ii], order[jj]
            rel = compare_summands(q, d, entries[i][0], entries[j][0])
            if rel == EQUAL:
                raise SodError("two distinct labels compared equal")
            if rel == A_BEFORE_B:
                after[i].add(j)
                indeg[j] += 1
            elif rel == B_BEFORE_A:
                after[j].add(i)
                indeg[i] += 1
    import heapq
    heap = [(lex_key(entries[i]), i) for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        _, i = heapq.heappop(heap)
        out.append(entries[i])
        for j in after[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (lex_key(entries[j]), j))
    if len(out) != n:
        raise SodError("summand order contains a cycle")
    return out


def _check_symmetric_equal_parity(q: Quiver):
    if not is_symmetric(q):
        raise PreconditionError("a symmetric quiver is required")
    if len(loop_parities(q)) > 1:
        raise PreconditionError("loop counts must all have the same parity")


def framed_summands(q: Quiver, d: DimensionVector, mu: GenericReal, alpha: int,
                    delta: Optional[Weight] = None,
                    with_generator_counts: bool = False) -> SodReport:
    """Labels (d_i, v_i) with mu <= v_1/dbar_1 < ... < v_k/dbar_k < alpha + mu
    and integral coefficient sums theta_i + delta_i + v_i tau."""
    _check_symmetric_equal_parity(q)
    if alpha <= 0:
        raise PreconditionError("the framing multiplicity alpha must be positive")
    if delta is None:
        delta = Weight.zero(d)
    good = GenericWeight(delta, Weight.zero(d)) + GenericWeight(
        sigma(d).scale(mu.q), sigma(d).scale(mu.eps))
    if not is_good_weight(q, d, good):
        raise PreconditionError("delta + mu*sigma is not a good weight")
    entries = _enumerate_labels(q, d, delta, mu, mu + alpha, hi_strict=True,
                                total_weight=None)
    entries = _order_report(q, d, entries)
    gen_counts = None
    if with_generator_counts:
        gen_counts = tuple(_label_generator_count(q, label, ws)
                           for label, ws in entries)
    return SodReport(
        quiver=q, d=d,
        window={"mu": _generic_json(mu), "alpha": alpha},
        labels=tuple(e[0] for e in entries),
        block_weights=tuple(e[1] for e in entries),
        generator_counts=gen_counts,
    )


def _label_generator_count(q: Quiver, label: SummandLabel, ws: Sequence[Weight]) -> int:
    total = 1
    for (di, _), w in zip(label.parts, ws):
        total *= len(magic_generators(q, di, w))
    return total


def unframed_summands(q: Quiver, d: DimensionVector, w: int,
                      slope_window: tuple[GenericReal, GenericReal],
                      delta: Optional[Weight] = None) -> SodReport:
    """Labels with total weight w, strictly increasing slopes inside the
    closed window, and integral coefficient sums."""
    _check_symmetric_equal_parity(q)
    lo, hi = slope_window
    if lo > hi:
        raise PreconditionError("empty slope window")
    if delta is None:
        delta = Weight.zero(d)
    entries = _enumerate_labels(q, d, delta, lo, hi, hi_strict=False,
                                total_weight=Fraction(w))
    entries = _order_report(q, d, entries)
    return SodReport(
        quiver=q, d=d,
        window={"w": w, "lo": _generic_json(lo), "hi": _generic_json(hi)},
        labels=tuple(e[0] for e in entries),
        block_weights=tuple(e[1] for e in entries),
    )


def preprojective_summands(q_circ: Quiver, d: DimensionVector,
                           slope_window: tuple[GenericReal, GenericReal]) -> SodReport:
    """Labels of the doubled-quiver decomposition, with the block weights
    theta_i built from -1/2 Rbar^{>0} + g^{>0}; whenever every theta_i is a
    multiple of the all-ones weight the report also carries the shifted
    weights w_i with theta_i + v_i tau = w_i tau."""
    lo, hi = slope_window
    if lo > hi:
        raise PreconditionError("empty slope window")
    entries = _enumerate_labels(q_circ, d, Weight.zero(d), lo, hi,
                                hi_strict=False, total_weight=None, doubled=True)
    entries = _order_report(triple(q_circ), d, entries)
    shifted: Optional[list[tuple[Fraction, ...]]] = []
    for label, ws in entries:
        row = []
        for (di, v), wgt in zip(label.parts, ws):
            theta = wgt - tau(di).scale(v)
            coeffs = set(theta.coords)
            if len(coeffs) == 1:
                row.append(v + theta.coefficient_sum())
            else:
                shifted = None
                break
        if shifted is None:
            break
        shifted.append(tuple(row))
    return SodReport(
        quiver=q_circ, d=d,
        window={"lo": _generic_json(lo), "hi": _generic_json(hi)},
        labels=tuple(e[0] for e in entries),
        block_weights=tuple(e[1] for e in entries),
        shifted_weights=None if shifted is None else tuple(shifted),
    )


def knorrer_shift_check(q: Quiver, d: DimensionVector,
                        partition: Sequence[DimensionVector],
                        A: Optional[int] = None) -> tuple[bool, Weight]:
    """Exact verification of the companion weight identity
    -1/2 (R_comp - R)^{lam>0} - 1/2 U + 1/2 U^lam + U^{lam>0} = 0
    for the block cocharacter of the partition, plus the consistency
    sum_i U(d_i) = U(d)^lam of the added-edge space."""
    _check_symmetric_equal_parity(q)
    comp, uspec = very_symmetric_companion(q, A)
    lam = block_cocharacter(list(partition))
    r_comp = rep_weights(comp, d, "R").positive_part_sum(lam)
    r_orig = rep_weights(q, d, "R").positive_part_sum(lam)
    u_set = rep_weights(q, d, "U", uspec)
    u_sum = u_set.weight_sum()
    if u_sum != uspec_weight_sum(d, uspec):
        raise SodError("added-edge weight sum disagrees with the closed form")
    u_zero = u_set.zero_part_sum(lam)
    u_pos = u_set.positive_part_sum(lam)
    residual = (r_orig - r_comp).scale(Fraction(1, 2)) \
        - u_sum.scale(Fraction(1, 2)) + u_zero.scale(Fraction(1, 2)) + u_pos
    ok = residual.is_zero()

    # block restriction consistency of the added-edge space
    blocks = list(partition)
    per_block = [rep_weights(q, p, "U", uspec).weight_sum() for p in blocks]
    if embed_from_blocks(blocks, per_block) != u_zero:
        ok = False
    return ok, residual
