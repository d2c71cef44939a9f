"""Weight lattice M(d) and cocharacters.

A weight is an exact rational coordinate per slot (a, i) for a vertex a and
1 <= i <= d^a; slots are ordered by vertex (in quiver order), then index.
Dominant means coordinates non-decreasing per vertex; cocharacters pair with
weights slotwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .generic import GenericReal
from .quiver import DimensionVector, Quiver, USpec


class LatticeError(ValueError):
    pass


def slot_list(d: DimensionVector) -> list[tuple[str, int]]:
    """Slots (a, i) in canonical order, i starting at 1."""
    return [(a, i + 1) for a, n in zip(d.vertices, d.values) for i in range(n)]


def vertex_slot_ranges(d: DimensionVector) -> dict[str, tuple[int, int]]:
    """Half-open global index range of each vertex's slots."""
    out = {}
    base = 0
    for a, n in zip(d.vertices, d.values):
        out[a] = (base, base + n)
        base += n
    return out


@dataclass(frozen=True)
class Weight:
    dims: DimensionVector
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.dims.total:
            raise LatticeError("coordinate count does not match the slot space")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @staticmethod
    def zero(d: DimensionVector) -> "Weight":
        return Weight(d, (Fraction(0),) * d.total)

    @staticmethod
    def of(d: DimensionVector, coords: Sequence) -> "Weight":
        return Weight(d, tuple(Fraction(c) for c in coords))

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.dims, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.dims, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.dims, tuple(-x for x in self.coords))

    def scale(self, s) -> "Weight":
        s = Fraction(s)
        return Weight(self.dims, tuple(s * x for x in self.coords))

    def _check(self, other: "Weight"):
        if self.dims != other.dims:
            raise LatticeError("weights live in different slot spaces")

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def is_dominant(self) -> bool:
        for lo, hi in vertex_slot_ranges(self.dims).values():
            for i in range(lo, hi - 1):
                if self.coords[i] > self.coords[i + 1]:
                    return False
        return True

    def dominant_sort(self) -> "Weight":
        """Weyl-conjugate with non-decreasing coordinates per vertex."""
        out = list(self.coords)
        for lo, hi in vertex_slot_ranges(self.dims).values():
            out[lo:hi] = sorted(out[lo:hi])
        return Weight(self.dims, tuple(out))

    def coefficient_sum(self) -> Fraction:
        return sum(self.coords, Fraction(0))

    def is_weyl_invariant(self) -> bool:
        for lo, hi in vertex_slot_ranges(self.dims).values():
            if len(set(self.coords[lo:hi])) > 1:
                return False
        return True

    def vertex_coefficients(self) -> dict[str, Fraction]:
        """Per-vertex constants of a Weyl-invariant weight."""
        if not self.is_weyl_invariant():
            raise LatticeError("weight is not Weyl-invariant")
        out = {}
        for a, (lo, hi) in vertex_slot_ranges(self.dims).items():
            out[a] = self.coords[lo] if hi > lo else Fraction(0)
        return out

    def to_json_dict(self) -> dict:
        ranges = vertex_slot_ranges(self.dims)
        return {a: [str(c) for c in self.coords[lo:hi]] for a, (lo, hi) in ranges.items()}

    @staticmethod
    def from_json_dict(d: DimensionVector, data: dict) -> "Weight":
        ranges = vertex_slot_ranges(d)
        coords = [Fraction(0)] * d.total
        for a, vals in data.items():
            if a not in ranges:
                raise LatticeError(f"unknown vertex {a!r} in weight")
            lo, hi = ranges[a]
            if len(vals) != hi - lo:
                raise LatticeError(f"wrong coordinate count for vertex {a!r}")
            for k, v in enumerate(vals):
                coords[lo + k] = Fraction(str(v))
        return Weight(d, tuple(coords))

    @staticmethod
    def from_json(d: DimensionVector, text: str) -> "Weight":
        return Weight.from_json_dict(d, json.loads(text))


@dataclass(frozen=True)
class Cocharacter:
    dims: DimensionVector
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dims.total:
            raise LatticeError("value count does not match the slot space")
        if any(not isinstance(v, int) for v in self.values):
            raise LatticeError("cocharacter values must be integers")

    @staticmethod
    def ones(d: DimensionVector) -> "Cocharacter":
        return Cocharacter(d, (1,) * d.total)

    def pair(self, w: Weight) -> Fraction:
        if w.dims != self.dims:
            raise LatticeError("pairing across different slot spaces")
        return sum((Fraction(v) * c for v, c in zip(self.values, w.coords)), Fraction(0))

    def is_dominant(self) -> bool:
        for lo, hi in vertex_slot_ranges(self.dims).values():
            for i in range(lo, hi - 1):
                if self.values[i] > self.values[i + 1]:
                    return False
        return True

    def is_antidominant(self) -> bool:
        for lo, hi in vertex_slot_ranges(self.dims).values():
            for i in range(lo, hi - 1):
                if self.values[i] < self.values[i + 1]:
                    return False
        return True

    def to_json_list(self) -> list[int]:
        return list(self.values)


@dataclass(frozen=True)
class WeightMultiset:
    """List of (weight, multiplicity) with multiplicities >= 1."""

    dims: DimensionVector
    items: tuple[tuple[Weight, int], ...]

    def __post_init__(self):
        for w, m in self.items:
            if m < 1:
                raise LatticeError("multiplicities must be at least 1")
            if w.dims != self.dims:
                raise LatticeError("weight multiset over mixed slot spaces")

    @staticmethod
    def from_weights(d: DimensionVector, weights: Iterable[Weight]) -> "WeightMultiset":
        counts: dict[tuple, int] = {}
        order: list[Weight] = []
        for w in weights:
            key = w.coords
            if key not in counts:
                order.append(w)
            counts[key] = counts.get(key, 0) + 1
        return WeightMultiset(d, tuple((w, counts[w.coords]) for w in order))

    def total_count(self) -> int:
        return sum(m for _, m in self.items)

    def weight_sum(self) -> Weight:
        out = Weight.zero(self.dims)
        for w, m in self.items:
            out = out + w.scale(m)
        return out

    def positive_part_sum(self, lam: Cocharacter) -> Weight:
        """Sum of weights with strictly positive pairing against lam."""
        out = Weight.zero(self.dims)
        for w, m in self.items:
            if lam.pair(w) > 0:
                out = out + w.scale(m)
        return out

    def zero_part_sum(self, lam: Cocharacter) -> Weight:
        out = Weight.zero(self.dims)
        for w, m in self.items:
            if lam.pair(w) == 0:
                out = out + w.scale(m)
        return out

    def positive_pairing_sum(self, lam: Cocharacter) -> Fraction:
        """Sum of <lam, beta> over weights with <lam, beta> > 0."""
        total = Fraction(0)
        for w, m in self.items:
            p = lam.pair(w)
            if p > 0:
                total += p * m
        return total

    def is_negation_closed(self) -> bool:
        counts: dict[tuple, int] = {}
        for w, m in self.items:
            counts[w.coords] = counts.get(w.coords, 0) + m
        return all(counts.get(tuple(-c for c in key), 0) == m for key, m in counts.items())


@dataclass(frozen=True)
class GenericWeight:
    """Weight with an infinitesimal component: main + eps_part * 0+."""

    main: Weight
    eps_part: Weight

    def __post_init__(self):
        if self.main.dims != self.eps_part.dims:
            raise LatticeError("mismatched slot spaces in generic weight")

    @staticmethod
    def exact(w: Weight) -> "GenericWeight":
        return GenericWeight(w, Weight.zero(w.dims))

    @staticmethod
    def weyl_invariant(d: DimensionVector, per_vertex: dict[str, GenericReal]) -> "GenericWeight":
        ranges = vertex_slot_ranges(d)
        main = [Fraction(0)] * d.total
        eps = [Fraction(0)] * d.total
        for a, g in per_vertex.items():
            if a not in ranges:
                raise LatticeError(f"unknown vertex {a!r}")
            lo, hi = ranges[a]
            for i in range(lo, hi):
                main[i] = g.q
                eps[i] = g.eps
        return GenericWeight(Weight(d, tuple(main)), Weight(d, tuple(eps)))

    def __add__(self, other) -> "GenericWeight":
        if isinstance(other, GenericWeight):
            return GenericWeight(self.main + other.main, self.eps_part + other.eps_part)
        return GenericWeight(self.main + other, self.eps_part)

    def __sub__(self, other) -> "GenericWeight":
        if isinstance(other, GenericWeight):
            return GenericWeight(self.main - other.main, self.eps_part - other.eps_part)
        return GenericWeight(self.main - other, self.eps_part)

    def is_exact(self) -> bool:
        return self.eps_part.is_zero()

    def pair(self, lam: Cocharacter) -> GenericReal:
        return GenericReal(lam.pair(self.main), lam.pair(self.eps_part))

    def coefficient_sum(self) -> GenericReal:
        return GenericReal(self.main.coefficient_sum(), self.eps_part.coefficient_sum())


def rho(d: DimensionVector) -> Weight:
    """Half the sum of positive roots: slot (a, k) gets (2k - 1 - d^a)/2."""
    coords = []
    for a, n in zip(d.vertices, d.values):
        for k in range(1, n + 1):
            coords.append(Fraction(2 * k - 1 - n, 2))
    return Weight(d, tuple(coords))


def sigma(d: DimensionVector) -> Weight:
    return Weight(d, (Fraction(1),) * d.total)


def tau(d: DimensionVector) -> Weight:
    if d.total == 0:
        raise LatticeError("tau is undefined for total dimension 0")
    return Weight(d, (Fraction(1, d.total),) * d.total)


def tau_sigma(d: DimensionVector) -> tuple[Weight, Weight]:
    return tau(d), sigma(d)


def _basis_weight(d: DimensionVector, idx: int) -> tuple[Fraction, ...]:
    coords = [Fraction(0)] * d.total
    coords[idx] = Fraction(1)
    return tuple(coords)


def rep_weights(q: Quiver, d: DimensionVector, space: str,
                uspec: Optional[USpec] = None) -> WeightMultiset:
    """Slot-weight multiset of a representation space.

    space is one of:
      "R"    Hom weights beta^b_j - beta^a_i for every edge a -> b;
      "Rf"   R plus the framing weights beta^a_i;
      "Rbar" R of the doubled quiver;
      "g"    adjoint weights beta^a_i - beta^a_j (i != j) plus total-dim zeros;
      "U"    Hom weights of the companion's added forward edges.

    For symmetric quivers the multisets are negation-closed, so the choice
    of Hom orientation is invisible downstream.
    """
    if tuple(d.vertices) != tuple(q.vertices):
        raise LatticeError("dimension vector does not match the quiver")
    ranges = vertex_slot_ranges(d)
    weights: list[Weight] = []

    def hom_weights(src: str, dst: str):
        lo_s, hi_s = ranges[src]
        lo_t, hi_t = ranges[dst]
        for i in range(lo_s, hi_s):
            for j in range(lo_t, hi_t):
                coords = [Fraction(0)] * d.total
                coords[j] += 1
                coords[i] -= 1
                weights.append(Weight(d, tuple(coords)))

    if space in ("R", "Rf"):
        for s, t in q.edges:
            hom_weights(s, t)
        if space == "Rf":
            for idx in range(d.total):
                weights.append(Weight(d, _basis_weight(d, idx)))
    elif space == "Rbar":
        for s, t in q.edges:
            hom_weights(s, t)
            hom_weights(t, s)
    elif space == "g":
        for a in q.vertices:
            lo, hi = ranges[a]
            for i in range(lo, hi):
                for j in range(lo, hi):
                    if i != j:
                        coords = [Fraction(0)] * d.total
                        coords[i] += 1
                        coords[j] -= 1
                        weights.append(Weight(d, tuple(coords)))
        for _ in range(d.total):
            weights.append(Weight.zero(d))
    elif space == "U":
        if uspec is None:
            raise LatticeError("space 'U' needs a U-spec")
        for s, t in uspec.edges:
            hom_weights(s, t)
    else:
        raise LatticeError(f"unknown representation space {space!r}")
    return WeightMultiset.from_weights(d, weights)


def uspec_weight_sum(d: DimensionVector, uspec: USpec) -> Weight:
    """Sum of all U-space weights (the class of det U)."""
    ranges = vertex_slot_ranges(d)
    coords = [Fraction(0)] * d.total
    for s, t in uspec.edges:
        lo_s, hi_s = ranges[s]
        lo_t, hi_t = ranges[t]
        ns, nt = hi_s - lo_s, hi_t - lo_t
        for j in range(lo_t, hi_t):
            coords[j] += ns
        for i in range(lo_s, hi_s):
            coords[i] -= nt
    return Weight(d, tuple(coords))


# -- ordered partitions of a dimension vector ---------------------------------

def check_partition(partition: Sequence[DimensionVector], d: Optional[DimensionVector] = None
                    ) -> DimensionVector:
    if not partition:
        raise LatticeError("empty partition")
    total = partition[0]
    for p in partition[1:]:
        total = total.add(p)
    for p in partition:
        if p.is_zero():
            raise LatticeError("partition blocks must be nonzero")
    if d is not None and total != d:
        raise LatticeError("partition does not sum to the dimension vector")
    return total


def block_slot_indices(partition: Sequence[DimensionVector]) -> list[list[int]]:
    """Global slot indices of each block under the standard identification:
    block i takes the next d_i^a slots at every vertex."""
    d = check_partition(partition)
    ranges = vertex_slot_ranges(d)
    taken = {a: 0 for a in d.vertices}
    out: list[list[int]] = []
    for p in partition:
        block = []
        for a in d.vertices:
            lo, _ = ranges[a]
            start = lo + taken[a]
            block.extend(range(start, start + p[a]))
            taken[a] += p[a]
        out.append(block)
    return out


def block_cocharacter(partition: Sequence[DimensionVector]) -> Cocharacter:
    """Canonical antidominant cocharacter of a partition: block i gets k - i."""
    d = check_partition(partition)
    k = len(partition)
    values = [0] * d.total
    for i, block in enumerate(block_slot_indices(partition)):
        for idx in block:
            values[idx] = k - (i + 1)
    return Cocharacter(d, tuple(values))


def restrict_to_block(w: Weight, partition: Sequence[DimensionVector], i: int) -> Weight:
    """Component of w in M(d_i) under the block identification."""
    block = block_slot_indices(partition)[i]
    return Weight(partition[i], tuple(w.coords[idx] for idx in block))


def embed_from_blocks(partition: Sequence[DimensionVector], parts: Sequence[Weight]) -> Weight:
    """Assemble a weight of M(d) from per-block weights."""
    d = check_partition(partition)
    if len(parts) != len(partition):
        raise LatticeError("one weight per block required")
    coords = [Fraction(0)] * d.total
    for p, w, block in zip(partition, parts, block_slot_indices(partition)):
        if w.dims != p:
            raise LatticeError("block weight has the wrong slot space")
        for local, idx in enumerate(block):
            coords[idx] = w.coords[local]
    return Weight(d, tuple(coords))


def pair_dimvec(dprime: DimensionVector, ell: Weight) -> Fraction:
    """Pairing <d', ell> of a dimension vector against a Weyl-invariant
    weight, via per-vertex coefficients."""
    coeffs = ell.vertex_coefficients()
    return sum((Fraction(dprime[a]) * coeffs[a] for a in dprime.vertices), Fraction(0))


def n_lambda(q: Quiver, d: DimensionVector, lam: Cocharacter) -> Fraction:
    """Width of the magic window in direction lam:
    sum of positive pairings over R(d) minus the same over g(d)."""
    from .quiver import is_symmetric
    if not is_symmetric(q):
        raise LatticeError("the width formula presumes a symmetric quiver")
    r_part = rep_weights(q, d, "R").positive_pairing_sum(lam)
    g_part = rep_weights(q, d, "g").positive_pairing_sum(lam)
    return r_part - g_part


def theta_weights(q: Quiver, partition: Sequence[DimensionVector]) -> list[Weight]:
    """Per-block weights theta_i with
    sum theta_i = -1/2 R(d)^{lam>0} + 1/2 g(d)^{lam>0} for the block
    cocharacter lam; each theta_i is Weyl-invariant in M(d_i)."""
    from .quiver import is_symmetric
    if not is_symmetric(q):
        raise LatticeError("theta weights presume a symmetric quiver")
    d = check_partition(partition)
    lam = block_cocharacter(partition)
    r_pos = rep_weights(q, d, "R").positive_part_sum(lam)
    g_pos = rep_weights(q, d, "g").positive_part_sum(lam)
    total = g_pos.scale(Fraction(1, 2)) - r_pos.scale(Fraction(1, 2))
    thetas = [restrict_to_block(total, partition, i) for i in range(len(partition))]
    for t in thetas:
        if not t.is_weyl_invariant():
            raise LatticeError("theta decomposition failed: block weight is not Weyl-invariant")
    return thetas


def doubled_theta_weights(q_circ: Quiver, partition: Sequence[DimensionVector]) -> list[Weight]:
    """Per-block weights for the doubled-quiver decomposition:
    sum theta_i = -1/2 Rbar(d)^{lam>0} + g(d)^{lam>0}."""
    d = check_partition(partition)
    lam = block_cocharacter(partition)
    rbar_pos = rep_weights(q_circ, d, "Rbar").positive_part_sum(lam)
    g_pos = rep_weights(q_circ, d, "g").positive_part_sum(lam)
    total = g_pos - rbar_pos.scale(Fraction(1, 2))
    thetas = [restrict_to_block(total, partition, i) for i in range(len(partition))]
    for t in thetas:
        if not t.is_weyl_invariant():
            raise LatticeError("theta decomposition failed: block weight is not Weyl-invariant")
    return thetas
