"""Generator enumeration for magic and quasi-BPS windows, the weight
decomposition algorithm, the bijection to summand labels, and the ordering
of summands.

The decomposition iterates: find the minimal scaling of the residual inside
the half-sum polytope, read the supporting face off the maximizing cuts,
split into blocks, and recurse.  It requires a very symmetric quiver (every
ordered vertex pair carries the same number A of edges); general quivers
route through their very symmetric companion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Optional, Sequence, Union

from .generic import GenericReal
from .lattice import (
    Cocharacter,
    GenericWeight,
    Weight,
    block_cocharacter,
    block_slot_indices,
    embed_from_blocks,
    restrict_to_block,
    rep_weights,
    rho,
    tau,
    theta_weights,
    vertex_slot_ranges,
)
from .quiver import DimensionVector, Quiver, assumption_flags, is_symmetric
from .zonotope import Zonotope, contains, on_boundary, v_zonotope, w_zonotope


class BpsError(ValueError):
    pass


class PreconditionError(BpsError):
    pass


DeltaLike = Union[Weight, GenericWeight]


def _as_generic_weight(delta: DeltaLike) -> GenericWeight:
    return delta if isinstance(delta, GenericWeight) else GenericWeight.exact(delta)


# -- window generator enumeration ---------------------------------------------

def _window_generators(q: Quiver, d: DimensionVector, delta: DeltaLike,
                       z: Zonotope) -> list[Weight]:
    delta = _as_generic_weight(delta)
    r = rho(d)
    box = z.coordinate_box()
    lo = []
    hi = []
    for s in range(d.total):
        shift = delta.main.coords[s] - r.coords[s]
        b_lo, b_hi = box[s]
        lo.append(b_lo + shift)
        hi.append(b_hi + shift)

    out: list[Weight] = []
    ranges = vertex_slot_ranges(d)

    def ceil_frac(x: Fraction) -> int:
        return -((-x.numerator) // x.denominator)

    def floor_frac(x: Fraction) -> int:
        return x.numerator // x.denominator

    # dominant integral candidates: non-decreasing per vertex within the box
    def gen_vertex(lo_i: int, hi_i: int, prev: Optional[int]) -> list[list[int]]:
        if lo_i == hi_i:
            return [[]]
        res = []
        start = ceil_frac(lo[lo_i])
        if prev is not None:
            start = max(start, prev)
        for v in range(start, floor_frac(hi[lo_i]) + 1):
            for rest in gen_vertex(lo_i + 1, hi_i, v):
                res.append([v] + rest)
        return res

    per_vertex: list[list[list[int]]] = []
    for a in d.vertices:
        lo_i, hi_i = ranges[a]
        per_vertex.append(gen_vertex(lo_i, hi_i, None))

    for combo in iproduct(*per_vertex):
        coords = [Fraction(v) for block in combo for v in block]
        chi = Weight(d, tuple(coords))
        point = GenericWeight(chi + r - delta.main, -delta.eps_part)
        if contains(z, point):
            out.append(chi)
    out.sort(key=lambda w: w.coords)
    return out


def magic_generators(q: Quiver, d: DimensionVector, delta: DeltaLike) -> list[Weight]:
    """Integral dominant chi with chi + rho - delta inside the half-sum
    polytope over R(d); empty when the coefficient sum of delta is not an
    integer."""
    if not is_symmetric(q):
        raise PreconditionError("magic windows need a symmetric quiver")
    gd = _as_generic_weight(delta)
    if not gd.coefficient_sum().is_integer():
        return []
    return _window_generators(q, d, delta, w_zonotope(q, d))


def dd_generators(q: Quiver, d: DimensionVector, delta: DeltaLike) -> list[Weight]:
    """As magic_generators but over the larger polytope that includes the
    framing weights."""
    if not is_symmetric(q):
        raise PreconditionError("quasi-BPS windows need a symmetric quiver")
    return _window_generators(q, d, delta, v_zonotope(q, d))


def is_good_weight(q: Quiver, d: DimensionVector, delta: DeltaLike) -> bool:
    """True when every nonzero dominant cocharacter with slot values in
    {-1, 0} pairs with 2*delta outside the integers."""
    gd = _as_generic_weight(delta)
    if not (gd.main.is_weyl_invariant() and gd.eps_part.is_weyl_invariant()):
        raise PreconditionError("good weights must be Weyl-invariant")
    counts = list(d.values)
    for cuts in iproduct(*[range(n + 1) for n in counts]):
        if all(c == 0 for c in cuts):
            continue
        values = []
        for n, c in zip(counts, cuts):
            values.extend([-1] * c + [0] * (n - c))
        lam = Cocharacter(d, tuple(values))
        pairing = gd.pair(lam) * Fraction(2)
        if pairing.is_integer():
            return False
    return True


# -- cut formula for the minimal scaling (very symmetric quivers) -------------

def _very_symmetric_A(q: Quiver) -> int:
    flags = assumption_flags(q)
    if not flags.very_symmetric:
        raise PreconditionError("operation needs a very symmetric quiver")
    return flags.very_symmetric_A


def _cut_ratios(d: DimensionVector, x: Weight, A: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """Ratio of every proper top-cut (t_a)_a against a dominant sum-zero x:
    (sum of the top t_a coordinates) / (A * t * (dbar - t))."""
    dbar = d.total
    ranges = vertex_slot_ranges(d)
    out = []
    for cuts in iproduct(*[range(n + 1) for n in d.values]):
        t = sum(cuts)
        if t == 0 or t == dbar:
            continue
        top = Fraction(0)
        for (a, (lo, hi)), c in zip(ranges.items(), cuts):
            for idx in range(hi - c, hi):
                top += x.coords[idx]
        out.append((cuts, top / (A * t * (dbar - t))))
    return out


def _rinv_with_argmax(d: DimensionVector, x: Weight, A: int
                      ) -> tuple[Fraction, list[tuple[int, ...]]]:
    if x.is_zero() or d.total == 1:
        return Fraction(0), []
    ratios = _cut_ratios(d, x, A)
    best = max(r for _, r in ratios)
    if best <= 0:
        return Fraction(0), []
    return best, [c for c, r in ratios if r == best]


def _partition_from_cuts(d: DimensionVector, cuts: list[tuple[int, ...]]
                         ) -> list[DimensionVector]:
    """Blocks, bottom slots first, delimited by a nested family of top-cuts."""
    cuts = sorted(set(cuts), key=lambda c: sum(c))
    for ca, cb in zip(cuts, cuts[1:]):
        if not all(x <= y for x, y in zip(ca, cb)):
            raise BpsError("maximizing cuts are not nested; no face partition exists")
    blocks: list[DimensionVector] = []
    prev = tuple(0 for _ in d.values)  # bottom sizes consumed so far
    for c in reversed(cuts):  # largest top-cut = lowest boundary
        bottom = tuple(n - t for n, t in zip(d.values, c))
        part = tuple(b - p for b, p in zip(bottom, prev))
        blocks.append(DimensionVector(d.vertices, part))
        prev = bottom
    blocks.append(DimensionVector(d.vertices, tuple(n - p for n, p in zip(d.values, prev))))
    return blocks


# -- the weight decomposition --------------------------------------------------

@dataclass(frozen=True)
class PathStep:
    """One refinement of the tree of partitions: a block of the current
    partition splits with coefficient r."""

    parent: DimensionVector
    parts: tuple[DimensionVector, ...]
    r: Fraction
    n_weight: Weight  # sum of the split's positive weights, in M(d)


@dataclass(frozen=True)
class PartitionPath:
    steps: tuple[PathStep, ...]
    partition: tuple[DimensionVector, ...]
    residuals: tuple[Weight, ...]  # psi_i in the block slot spaces


@dataclass(frozen=True)
class SummandLabel:
    parts: tuple[tuple[DimensionVector, Fraction], ...]

    @property
    def weight(self) -> Fraction:
        return sum((v for _, v in self.parts), Fraction(0))

    def slopes(self) -> list[Fraction]:
        return [v / di.total for di, v in self.parts]

    def partition(self) -> list[DimensionVector]:
        return [di for di, _ in self.parts]


def _embed_block(d: DimensionVector, global_slots: list[int], w: Weight) -> Weight:
    coords = [Fraction(0)] * d.total
    for local, g in enumerate(global_slots):
        coords[g] = w.coords[local]
    return Weight(d, tuple(coords))


def decompose_weight(q: Quiver, d: DimensionVector, chi: Weight, delta: Weight
                     ) -> tuple[PartitionPath, SummandLabel, list[Weight]]:
    """Decompose an integral dominant weight into a path of partitions with
    strictly decreasing coefficients, residuals inside the block polytopes,
    slope numbers v_i, and block weights theta_i."""
    A = _very_symmetric_A(q)
    if not chi.is_integral() or not chi.is_dominant():
        raise PreconditionError("chi must be integral dominant")
    if not delta.is_weyl_invariant():
        raise PreconditionError("delta must be Weyl-invariant")
    w = (chi - delta).coefficient_sum()
    x0 = chi + rho(d) - delta - tau(d).scale(w)
    if x0.coefficient_sum() != 0:
        raise BpsError("residual is not sum-zero")

    steps: list[PathStep] = []
    partition: list[DimensionVector] = []
    residuals: list[Weight] = []
    slot_map: list[list[int]] = []

    def work(dsub: DimensionVector, x: Weight, slots: list[int], parent_r: Optional[Fraction]):
        r, cuts = _rinv_with_argmax(dsub, x, A)
        if parent_r is not None and r >= parent_r:
            raise BpsError("coefficients failed to decrease strictly along the path")
        if r <= Fraction(1, 2):
            if not contains(w_zonotope(q, dsub), x):
                raise BpsError("leaf residual escaped the block polytope")
            partition.append(dsub)
            residuals.append(x)
            slot_map.append(slots)
            return
        blocks = _partition_from_cuts(dsub, cuts)
        lam = block_cocharacter(blocks)
        n_w = rep_weights(q, dsub, "R").positive_part_sum(lam)
        steps.append(PathStep(dsub, tuple(blocks), r, _embed_block(d, slots, n_w)))
        residual = x + n_w.scale(r)
        indices = block_slot_indices(blocks)
        for i, db in enumerate(blocks):
            xb = restrict_to_block(residual, blocks, i)
            if xb.coefficient_sum() != 0:
                raise BpsError("split residual is not sum-zero on a block")
            if not xb.is_dominant():
                raise BpsError("split residual is not dominant on a block")
            work(db, xb, [slots[j] for j in indices[i]], r)

    work(d, x0, list(range(d.total)), None)

    # exact reconstruction of chi + rho - delta
    recon = tau(d).scale(w)
    for st in steps:
        recon = recon - st.n_weight.scale(st.r)
    for psi, slots in zip(residuals, slot_map):
        recon = recon + _embed_block(d, slots, psi)
    if recon != chi + rho(d) - delta:
        raise BpsError("reconstruction identity failed")

    # slope numbers: -sum (r - 1/2) N + w tau must be blockwise constant
    y = tau(d).scale(w)
    for st in steps:
        y = y - st.n_weight.scale(st.r - Fraction(1, 2))
    vs: list[Fraction] = []
    for slots, db in zip(slot_map, partition):
        vals = {y.coords[g] for g in slots}
        if len(vals) != 1:
            raise BpsError("slope weight is not constant on a block")
        vs.append(vals.pop() * db.total)
    slopes = [v / db.total for v, db in zip(vs, partition)]
    if any(a >= b for a, b in zip(slopes, slopes[1:])):
        raise BpsError("slopes are not strictly increasing")

    thetas = theta_weights(q, partition)
    label = SummandLabel(tuple((db, v) for db, v in zip(partition, vs)))
    path = PartitionPath(tuple(steps), tuple(partition), tuple(residuals))
    return path, label, thetas


def to_summand(q: Quiver, d: DimensionVector, chi: Weight, delta: Weight) -> SummandLabel:
    _, label, _ = decompose_weight(q, d, chi, delta)
    return label


def check_label(q: Quiver, d: DimensionVector, label: SummandLabel, delta: Weight):
    total = label.parts[0][0]
    for di, _ in label.parts[1:]:
        total = total.add(di)
    if total != d:
        raise PreconditionError("label partition does not sum to d")
    slopes = label.slopes()
    if any(a >= b for a, b in zip(slopes, slopes[1:])):
        raise PreconditionError("label slopes must strictly increase")
    partition = label.partition()
    thetas = theta_weights(q, partition)
    for i, ((di, v), th) in enumerate(zip(label.parts, thetas)):
        di_delta = restrict_to_block(delta, partition, i)
        s = th.coefficient_sum() + di_delta.coefficient_sum() + v
        if Fraction(s).denominator != 1:
            raise PreconditionError("label violates the integrality condition")


def _dominant_coset_points(z: Zonotope, frac_target: Weight) -> list[Weight]:
    """Dominant weights of the block polytope whose coordinates are congruent
    to frac_target mod 1, in lexicographic order."""
    d = z.dims
    box = z.coordinate_box()
    ranges = vertex_slot_ranges(d)

    first_slots = {lo for lo, _ in ranges.values()}
    per_slot: list[list[Fraction]] = []
    for s in range(d.total):
        lo, hi = box[s]
        vals = []
        v = lo + ((frac_target.coords[s] - lo) % 1)
        while v <= hi:
            vals.append(v)
            v += 1
        per_slot.append(vals)

    out: list[Weight] = []

    def rec(slot: int, acc: list[Fraction]):
        if slot == d.total:
            w = Weight(d, tuple(acc))
            if w.coefficient_sum() == 0 and contains(z, w):
                out.append(w)
            return
        for v in per_slot[slot]:
            if slot not in first_slots and v < acc[slot - 1]:
                continue  # dominance within the vertex
            rec(slot + 1, acc + [v])

    rec(0, [])
    out.sort(key=lambda w: w.coords)
    return out


def from_summand(q: Quiver, d: DimensionVector, label: SummandLabel, delta: Weight) -> Weight:
    """Canonical integral dominant representative of a label: residuals are
    chosen jointly lexicographically minimal among integral dominant choices."""
    A = _very_symmetric_A(q)
    check_label(q, d, label, delta)
    partition = label.partition()
    thetas = theta_weights(q, partition)
    fixed: list[Weight] = []
    for i, ((di, v), th) in enumerate(zip(label.parts, thetas)):
        di_delta = restrict_to_block(delta, partition, i)
        fixed.append(th + di_delta + tau(di).scale(v) - rho(di))

    candidate_sets: list[list[Weight]] = []
    for di, f in zip(partition, fixed):
        z = w_zonotope(q, di)
        frac_target = Weight(di, tuple(-c for c in f.coords))
        cands = _dominant_coset_points(z, frac_target)
        if not cands:
            raise BpsError("no integral residual exists for a block of the label")
        candidate_sets.append(cands)

    def assemble(psis: list[Weight]) -> Weight:
        return embed_from_blocks(partition, [f + p for f, p in zip(fixed, psis)])

    def backtrack(i: int, chosen: list[Weight]) -> Optional[Weight]:
        if i == len(partition):
            chi = assemble(chosen)
            if chi.is_dominant() and chi.is_integral():
                return chi
            return None
        for cand in candidate_sets[i]:
            res = backtrack(i + 1, chosen + [cand])
            if res is not None:
                return res
        return None

    chi = backtrack(0, [])
    if chi is None:
        raise BpsError("no integral dominant representative exists for the label")
    back = to_summand(q, d, chi, delta)
    if back != label:
        raise BpsError("representative does not decompose back to the label")
    return chi


# -- summand ordering ----------------------------------------------------------

A_BEFORE_B = "A_before_B"
B_BEFORE_A = "B_before_A"
INCOMPARABLE = "incomparable_orthogonal"
EQUAL = "equal"


def refines(e: Sequence[DimensionVector], dd: Sequence[DimensionVector]) -> bool:
    """Whether grouping consecutive parts of e yields dd."""
    i = 0
    for target in dd:
        acc = None
        while True:
            if i >= len(e):
                return False
            acc = e[i] if acc is None else acc.add(e[i])
            i += 1
            if acc == target:
                break
            if acc.total > target.total:
                return False
    return i == len(e)


def _label_w_values(label: SummandLabel, A: int) -> list[Fraction]:
    """Transform (d_i, v_i) -> w_i absorbing the blockwise-constant part of
    the split weights: w_i = v_i - (A/2) dbar_i (sum_{j>i} dbar_j - sum_{j<i} dbar_j)."""
    totals = [di.total for di, _ in label.parts]
    grand = sum(totals)
    out = []
    before = 0
    for (di, v), t in zip(label.parts, totals):
        after = grand - before - t
        out.append(v - Fraction(A, 2) * t * (after - before))
        before += t
    return out


def _events(A: int, parts: list[tuple[int, Fraction, int]]) -> list[tuple[Fraction, list[list[int]]]]:
    """Split events (r, groups of original indices) for consecutive label
    parts (dbar_i, w_i, index)."""
    if len(parts) <= 1:
        return []
    dloc = sum(t for t, _, _ in parts)
    best: Optional[Fraction] = None
    vals: list[Fraction] = []
    for a in range(1, len(parts)):
        wb = sum((w for t, w, _ in parts[:a]), Fraction(0))
        wt = sum((w for t, w, _ in parts[a:]), Fraction(0))
        db = sum(t for t, _, _ in parts[:a])
        dt = sum(t for t, _, _ in parts[a:])
        v = (wt / dt - wb / db) / (A * dloc)
        vals.append(v)
        if best is None or v > best:
            best = v
    cuts = [a for a, v in zip(range(1, len(parts)), vals) if v == best]
    groups: list[list[tuple[int, Fraction, int]]] = []
    prev = 0
    for a in cuts + [len(parts)]:
        groups.append(parts[prev:a])
        prev = a
    ev = [(best, [[idx for _, _, idx in g] for g in groups])]
    for g in groups:
        for r, sub in _events(A, g):
            if r >= best:
                raise BpsError("ordering recursion produced non-decreasing coefficients")
            ev.append((r, sub))
    return ev


def label_r_sequence(q: Quiver, label: SummandLabel
                     ) -> list[tuple[Fraction, tuple[DimensionVector, ...]]]:
    """Decreasing coefficients r'_1 > r'_2 > ... of a label's path, each with
    the partition formed by all splits of coefficient >= r'_n."""
    flags = assumption_flags(q)
    if flags.very_symmetric:
        A = flags.very_symmetric_A
    else:
        from .quiver import very_symmetric_companion
        comp, _ = very_symmetric_companion(q)
        A = assumption_flags(comp).very_symmetric_A
    ws = _label_w_values(label, A)
    parts = [(di.total, w, i) for (di, _), w, i in
             zip(label.parts, ws, range(len(label.parts)))]
    events = _events(A, parts)
    if not events:
        return []
    dims = [di for di, _ in label.parts]
    rs = sorted({r for r, _ in events}, reverse=True)

    def partition_at(r_min: Fraction) -> tuple[DimensionVector, ...]:
        # group boundaries induced by all splits with coefficient >= r_min
        boundaries = set()
        for r, groups in events:
            if r >= r_min:
                pos = 0
                flat = [i for g in groups for i in g]
                base = min(flat)
                for g in groups[:-1]:
                    pos += len(g)
                    boundaries.add(base + pos)
        blocks = []
        current = None
        for i, di in enumerate(dims):
            if i in boundaries or current is None:
                if current is not None:
                    blocks.append(current)
                current = di
            else:
                current = current.add(di)
        blocks.append(current)
        return tuple(blocks)

    return [(r, partition_at(r)) for r in rs]


def compare_summands(q: Quiver, d: DimensionVector, a: SummandLabel, b: SummandLabel) -> str:
    """Relative position of two summand labels: lower total weight comes
    first; at equal weight the paths are compared lexicographically by
    (coefficient, partition), finer partitions coming later."""
    da = a.parts[0][0]
    for di, _ in a.parts[1:]:
        da = da.add(di)
    db = b.parts[0][0]
    for di, _ in b.parts[1:]:
        db = db.add(di)
    if da != d or db != d:
        raise PreconditionError("labels for a different dimension vector")
    if a == b:
        return EQUAL
    if a.weight != b.weight:
        return A_BEFORE_B if a.weight < b.weight else B_BEFORE_A
    seq_a = label_r_sequence(q, a)
    seq_b = label_r_sequence(q, b)
    sentinel = (Fraction(-1), ())
    for (ra, pa), (rb, pb) in zip(seq_a + [sentinel] * len(seq_b),
                                  seq_b + [sentinel] * len(seq_a)):
        if ra != rb:
            return A_BEFORE_B if ra > rb else B_BEFORE_A
        if pa != pb:
            if refines(pb, pa):
                return A_BEFORE_B
            if refines(pa, pb):
                return B_BEFORE_A
            return INCOMPARABLE
    return EQUAL


# -- boundary witnesses (coprimality gate) ------------------------------------

def boundary_witnesses(q: Quiver, d: DimensionVector, v: int) -> list[Weight]:
    """Magic-window generators at weight v whose shifted weight lies on the
    boundary of the half-sum polytope."""
    delta = tau(d).scale(v)
    z = w_zonotope(q, d)
    out = []
    for chi in magic_generators(q, d, delta):
        if on_boundary(z, chi + rho(d) - delta):
            out.append(chi)
    return out
