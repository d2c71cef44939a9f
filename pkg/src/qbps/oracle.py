"""Independent brute-force verifiers.

Deliberately duplicated arithmetic: nothing here calls the linear programs
or the formula shortcuts of the primary modules, so agreement between the
two routes is meaningful.  Oracles may be exponential.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations, product as iproduct
from math import gcd
from typing import Optional, Union

from .generic import GenericReal
from .lattice import Cocharacter, GenericWeight, Weight, rep_weights, rho, sigma
from .quiver import DimensionVector, Quiver, assumption_flags
from .zonotope import Zonotope

PointLike = Union[Weight, GenericWeight]


class OracleError(ValueError):
    pass


# -- small rational linear algebra, kept local on purpose ----------------------

def _reduce_rows(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Full reduced row echelon form (unit leads, leads cleared everywhere)."""
    out: list[list[Fraction]] = []
    for row in rows:
        row = list(row)
        for basis_row in out:
            lead = next(i for i, v in enumerate(basis_row) if v != 0)
            if row[lead] != 0:
                f = row[lead]
                row = [x - f * y for x, y in zip(row, basis_row)]
        if all(v == 0 for v in row):
            continue
        lead = next(i for i, v in enumerate(row) if v != 0)
        row = [x / row[lead] for x in row]
        for basis_row in out:
            if basis_row[lead] != 0:
                f = basis_row[lead]
                basis_row[:] = [x - f * y for x, y in zip(basis_row, row)]
        out.append(row)
    out.sort(key=lambda r: next(i for i, v in enumerate(r) if v != 0))
    return out


def _int_primitive(vec: list[Fraction]) -> Optional[tuple[int, ...]]:
    lcm = 1
    for x in vec:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g == 0:
        return None
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _zonotope_facet_data(z: Zonotope) -> list[tuple[tuple[int, ...], Fraction]]:
    """Facet normals and supports, recomputed from scratch."""
    unit = Fraction(1, 2) if z.half else Fraction(1)
    raw = [(w.coords, m) for w, m in z.generators.items]
    dirs: list[tuple[int, ...]] = []
    for coords, _ in raw:
        p = _int_primitive(list(coords))
        if p is not None and p not in dirs:
            dirs.append(p)
    cap = int(os.environ.get("QBPS_FACET_CAP", 24))
    if len(dirs) > cap:
        raise OracleError("facet cap exceeded")
    basis = _reduce_rows([[Fraction(v) for v in e] for e in dirs])
    m = len(basis)
    if m > 8:
        raise OracleError("facet cap exceeded")
    if m == 0:
        return []

    def support(nu: tuple[int, ...]) -> Fraction:
        h = sum((Fraction(a) * b for a, b in zip(nu, z.offset.coords)), Fraction(0))
        for coords, mult in raw:
            p = sum(Fraction(a) * b for a, b in zip(nu, coords))
            if p > 0:
                h += unit * p * mult
        return h

    found: dict[tuple[int, ...], Fraction] = {}

    def record(vec: list[Fraction]):
        p = _int_primitive(vec)
        if p is None:
            return
        for nu in (p, tuple(-v for v in p)):
            if nu not in found:
                found[nu] = support(nu)

    if m == 1:
        record([Fraction(v) for v in basis[0]])
    else:
        for subset in combinations(dirs, m - 1):
            # y . (basis . s) = 0 for all s in subset; nullspace inside span
            mat = [[sum(Fraction(b[i] * s[i]) for i in range(len(s))) for b in basis]
                   for s in subset]
            red = _reduce_rows(mat)
            if len(red) != m - 1:
                continue
            leads = [next(i for i, v in enumerate(r) if v != 0) for r in red]
            free = next(i for i in range(m) if i not in leads)
            y = [Fraction(0)] * m
            y[free] = Fraction(1)
            for r, lead in zip(red, leads):
                y[lead] = -sum(r[i] * y[i] for i in range(m) if i != lead)
            normal = [sum((y[i] * basis[i][s] for i in range(m)), Fraction(0))
                      for s in range(len(z.offset.coords))]
            record(normal)
    return sorted(found.items())


def membership_by_facets(z: Zonotope, x: PointLike) -> bool:
    """Membership via facet inequalities: inside iff <nu, x - offset> stays
    within every support value, with infinitesimal parts compared
    lexicographically.  Must agree with the linear-programming route."""
    if isinstance(x, GenericWeight):
        main, eps = x.main, x.eps_part
    else:
        main, eps = x, None
    diff = main - z.offset
    data = _zonotope_facet_data(z)
    if not data:
        return diff.is_zero() and (eps is None or eps.is_zero())
    # the affine span: diff (and any eps direction) must pair to zero with
    # every vector vanishing on all generator directions
    n = len(diff.coords)
    gens = [[Fraction(v) for v in w.coords] for w, _ in z.generators.items]
    basis = _reduce_rows(gens)
    lead_cols = [next(i for i, v in enumerate(r) if v != 0) for r in basis]
    for j in range(n):
        if j in lead_cols:
            continue
        # annihilator vector supported on column j against the basis
        vec = [Fraction(0)] * n
        vec[j] = Fraction(1)
        for r, lead in zip(basis, lead_cols):
            vec[lead] = -r[j]
        for target in ([diff.coords] if eps is None else [diff.coords, eps.coords]):
            if sum(a * b for a, b in zip(vec, target)) != 0:
                return False
    for nu, h in data:
        val = sum((Fraction(a) * b for a, b in zip(nu, diff.coords)), Fraction(0))
        val += sum((Fraction(a) * b for a, b in zip(nu, z.offset.coords)), Fraction(0))
        ev = Fraction(0)
        if eps is not None:
            ev = sum((Fraction(a) * b for a, b in zip(nu, eps.coords)), Fraction(0))
        if (val, ev) > (h, Fraction(0)):
            return False
    return True


def rinv_by_cuts(q: Quiver, d: DimensionVector, x: Weight) -> Fraction:
    """Minimal-scaling value as the maximum cut ratio
    <mu, x> / <mu, R(d)^{mu>0}> over proper two-block dominant cuts, with
    everything summed directly over the weight multiset."""
    flags = assumption_flags(q)
    if not flags.very_symmetric:
        raise OracleError("the cut formula presumes a very symmetric quiver")
    xs = x.dominant_sort()
    r_weights = rep_weights(q, d, "R")
    best = Fraction(0)
    dbar = d.total
    for cuts in iproduct(*[range(n + 1) for n in d.values]):
        t = sum(cuts)
        if t == 0 or t == dbar:
            continue
        values = []
        for n, c in zip(d.values, cuts):
            values.extend([-t] * (n - c) + [dbar - t] * c)
        mu = Cocharacter(d, tuple(values))
        num = mu.pair(xs)
        den = Fraction(0)
        for w, mult in r_weights.items:
            p = mu.pair(w)
            if p > 0:
                den += p * mult
        ratio = num / den
        if ratio > best:
            best = ratio
    return best


def _v_window_points(q: Quiver, d: DimensionVector, delta: GenericWeight,
                     framing_mult: int) -> list[Weight]:
    """Integral dominant chi with chi + rho - delta inside the framed window
    polytope (half segments over edge weights, framing_mult full segments per
    framing weight), tested purely by facet inequalities."""
    n = d.total
    gens: list[tuple[Weight, int]] = list(rep_weights(q, d, "R").items)
    for s in range(n):
        coords = [Fraction(0)] * n
        coords[s] = Fraction(1)
        gens.append((Weight(d, tuple(coords)), 2 * framing_mult))
    from .lattice import WeightMultiset
    z = Zonotope(Weight.zero(d), WeightMultiset(d, tuple(gens)))

    lo = [Fraction(0)] * n
    hi = [Fraction(0)] * n
    for w, mult in gens:
        for s, c in enumerate(w.coords):
            if c > 0:
                hi[s] += Fraction(mult * c, 2)
            elif c < 0:
                lo[s] += Fraction(mult * c, 2)
    r = rho(d)
    out = []
    slot_ranges: list[tuple[int, int]] = []
    base = 0
    for count in d.values:
        slot_ranges.append((base, base + count))
        base += count

    def scan(slot: int, acc: list[int]):
        if slot == n:
            chi = Weight(d, tuple(Fraction(v) for v in acc))
            point = GenericWeight(chi + r - delta.main, -delta.eps_part)
            if membership_by_facets(z, point):
                out.append(chi)
            return
        lo_i = lo[slot] - r.coords[slot] + delta.main.coords[slot]
        hi_i = hi[slot] - r.coords[slot] + delta.main.coords[slot]
        start = -((-lo_i.numerator) // lo_i.denominator)
        stop = hi_i.numerator // hi_i.denominator
        for lo_s, hi_s in slot_ranges:
            if lo_s < slot < hi_s:
                start = max(start, acc[slot - 1])
        for v in range(start, stop + 1):
            scan(slot + 1, acc + [v])

    scan(0, [])
    return out


def window_scan(q: Quiver, d: DimensionVector, mu: GenericReal, alpha: int,
                delta: Optional[Weight] = None) -> int:
    """Exhaustive count of windowed generators for the framed stack with
    framing multiplicity alpha, by nested integer loops and facet
    membership."""
    if alpha <= 0:
        raise OracleError("alpha must be positive")
    base = delta if delta is not None else Weight.zero(d)
    shift = GenericWeight(base + sigma(d).scale(mu.q), sigma(d).scale(mu.eps))
    return len(_v_window_points(q, d, shift, alpha))
