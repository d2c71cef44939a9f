"""Quiver data model and the doubling / tripling / framing / companion
constructions.

Vertices are opaque strings; the framing vertex is the reserved token "∞".
Edges are stored as an explicit list of (source, target) pairs so that the
constructions can tag provenance: counts are always derived on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional

FRAMING_VERTEX = "∞"

# edge provenance tags
TAG_ORIG = "orig"
TAG_OPP = "opp"
TAG_OMEGA = "omega"
TAG_FRAME = "frame"
TAG_U = "u"
TAG_U_OPP = "u_op"


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    """Directed multigraph with ordered vertices; loops and parallel edges
    are allowed.  ``tags``, when present, has one entry per edge."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    tags: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("vertex ids must be distinct")
        vset = set(self.vertices)
        for s, t in self.edges:
            if s not in vset or t not in vset:
                raise QuiverError(f"edge ({s!r}, {t!r}) has an unknown endpoint")
        if self.tags is not None and len(self.tags) != len(self.edges):
            raise QuiverError("tags must partition the edge list")

    @staticmethod
    def make(vertices: Iterable[str], edges: Iterable[tuple[str, str]],
             tags: Optional[Iterable[str]] = None) -> "Quiver":
        return Quiver(tuple(vertices), tuple((s, t) for s, t in edges),
                      None if tags is None else tuple(tags))

    def edge_count(self, a: str, b: str) -> int:
        """Number of edges a -> b."""
        self._check_vertex(a)
        self._check_vertex(b)
        return sum(1 for s, t in self.edges if s == a and t == b)

    def loop_count(self, a: str) -> int:
        return self.edge_count(a, a)

    def _check_vertex(self, a: str):
        if a not in self.vertices:
            raise QuiverError(f"unknown vertex {a!r}")

    def to_json_dict(self) -> dict:
        d = {"vertices": list(self.vertices),
             "edges": [[s, t] for s, t in self.edges]}
        if self.tags is not None:
            d["tags"] = list(self.tags)
        return d

    @staticmethod
    def from_json_dict(data: dict, allow_framing: bool = False) -> "Quiver":
        try:
            vertices = [str(v) for v in data["vertices"]]
            edges = [(str(e[0]), str(e[1])) for e in data["edges"]]
        except (KeyError, TypeError, IndexError) as exc:
            raise QuiverError(f"malformed quiver JSON: {exc}") from exc
        if not allow_framing and FRAMING_VERTEX in vertices:
            raise QuiverError(f"vertex id {FRAMING_VERTEX!r} is reserved for framing")
        tags = data.get("tags")
        return Quiver.make(vertices, edges, tags)

    @staticmethod
    def from_json(text: str, allow_framing: bool = False) -> "Quiver":
        return Quiver.from_json_dict(json.loads(text), allow_framing=allow_framing)


@dataclass(frozen=True)
class DimensionVector:
    """Non-negative integer per vertex; ``total`` is the sum of all entries."""

    vertices: tuple[str, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.values):
            raise QuiverError("dimension vector length mismatch")
        if any(v < 0 or not isinstance(v, int) for v in self.values):
            raise QuiverError("dimensions must be non-negative integers")

    @staticmethod
    def make(q_or_vertices, mapping) -> "DimensionVector":
        vertices = q_or_vertices.vertices if isinstance(q_or_vertices, Quiver) else tuple(q_or_vertices)
        missing = [a for a in mapping if a not in vertices]
        if missing:
            raise QuiverError(f"dimension given for unknown vertex {missing[0]!r}")
        return DimensionVector(vertices, tuple(int(mapping.get(a, 0)) for a in vertices))

    @property
    def total(self) -> int:
        return sum(self.values)

    def __getitem__(self, a: str) -> int:
        try:
            return self.values[self.vertices.index(a)]
        except ValueError:
            raise QuiverError(f"unknown vertex {a!r}") from None

    def is_zero(self) -> bool:
        return self.total == 0

    def add(self, other: "DimensionVector") -> "DimensionVector":
        self._check_same(other)
        return DimensionVector(self.vertices, tuple(x + y for x, y in zip(self.values, other.values)))

    def sub(self, other: "DimensionVector") -> "DimensionVector":
        self._check_same(other)
        out = tuple(x - y for x, y in zip(self.values, other.values))
        return DimensionVector(self.vertices, out)

    def _check_same(self, other: "DimensionVector"):
        if self.vertices != other.vertices:
            raise QuiverError("dimension vectors over different vertex sets")

    def to_json_dict(self) -> dict:
        return {a: v for a, v in zip(self.vertices, self.values)}

    @staticmethod
    def from_json_dict(q: Quiver, data: dict) -> "DimensionVector":
        return DimensionVector.make(q, {str(k): int(v) for k, v in data.items()})


@dataclass(frozen=True)
class USpec:
    """Record of the "half" edges added by the very-symmetric companion:
    one entry (a, b) per added forward edge (loops as (a, a))."""

    edges: tuple[tuple[str, str], ...] = ()

    def is_empty(self) -> bool:
        return not self.edges


@dataclass(frozen=True)
class AssumptionFlags:
    symmetric: bool
    same_parity_loops: bool
    assum1: bool           # alpha(a, b) even for all a, b
    assum11: bool          # even cross-edges, odd loops
    very_symmetric: bool
    very_symmetric_A: Optional[int] = None

    def __post_init__(self):
        if self.very_symmetric and not self.symmetric:
            raise QuiverError("very symmetric quivers are symmetric")
        if self.assum11 and not self.same_parity_loops:
            raise QuiverError("odd loops everywhere implies equal loop parity")


def is_symmetric(q: Quiver) -> bool:
    """True iff the number of edges a -> b equals the number b -> a for all
    vertex pairs (loops are self-paired)."""
    for i, a in enumerate(q.vertices):
        for b in q.vertices[i + 1:]:
            if q.edge_count(a, b) != q.edge_count(b, a):
                return False
    return True


def alpha(q: Quiver, a: str, b: str) -> int:
    """Edge-count statistic #(a->b) + #(b->a) - 2*delta_ab."""
    n = q.edge_count(a, b) + q.edge_count(b, a)
    return n - 2 if a == b else n


def alpha_min(q: Quiver) -> int:
    """Minimum of alpha over all vertex pairs."""
    return min(alpha(q, a, b) for a in q.vertices for b in q.vertices)


def loop_parities(q: Quiver) -> set[int]:
    return {q.loop_count(a) % 2 for a in q.vertices}


def assumption_flags(q: Quiver) -> AssumptionFlags:
    sym = is_symmetric(q)
    parities = loop_parities(q)
    same_parity = len(parities) <= 1
    a1 = all(alpha(q, a, b) % 2 == 0 for a in q.vertices for b in q.vertices)
    a11 = sym and all(q.loop_count(a) % 2 == 1 for a in q.vertices) and all(
        q.edge_count(a, b) % 2 == 0
        for a in q.vertices for b in q.vertices if a != b)
    counts = {q.edge_count(a, b) for a in q.vertices for b in q.vertices}
    vs = sym and len(counts) == 1 and min(counts) >= 1
    return AssumptionFlags(
        symmetric=sym,
        same_parity_loops=same_parity,
        assum1=a1,
        assum11=a11,
        very_symmetric=vs,
        very_symmetric_A=(counts.pop() if vs else None),
    )


def double(q: Quiver) -> Quiver:
    """Add an opposite edge for every edge; tags record the pairing."""
    edges = []
    tags = []
    for s, t in q.edges:
        edges.append((s, t))
        tags.append(TAG_ORIG)
    for s, t in q.edges:
        edges.append((t, s))
        tags.append(TAG_OPP)
    return Quiver.make(q.vertices, edges, tags)


def triple(q: Quiver) -> Quiver:
    """Doubled quiver plus one tagged loop at every vertex."""
    dq = double(q)
    edges = list(dq.edges)
    tags = list(dq.tags)
    for a in q.vertices:
        edges.append((a, a))
        tags.append(TAG_OMEGA)
    return Quiver.make(q.vertices, edges, tags)


def frame(q: Quiver, alpha_edges: int = 1) -> Quiver:
    """Add the framing vertex "∞" with ``alpha_edges`` edges to every
    original vertex.  The framing vertex carries dimension 1 downstream."""
    if alpha_edges <= 0:
        raise QuiverError("framing multiplicity must be positive")
    if FRAMING_VERTEX in q.vertices:
        raise QuiverError("quiver is already framed")
    vertices = q.vertices + (FRAMING_VERTEX,)
    edges = list(q.edges)
    tags = list(q.tags) if q.tags is not None else [TAG_ORIG] * len(q.edges)
    for a in q.vertices:
        for _ in range(alpha_edges):
            edges.append((FRAMING_VERTEX, a))
            tags.append(TAG_FRAME)
    return Quiver.make(vertices, edges, tags)


def very_symmetric_companion(q: Quiver, A: Optional[int] = None) -> tuple[Quiver, USpec]:
    """Companion quiver in which every ordered vertex pair carries exactly A
    edges, together with the multiset of added forward edges (the U-spec).

    Requires q symmetric with all loop counts of one parity eps; A, when
    given, must satisfy A >= max edge count and A = eps (mod 2).  When A is
    omitted the smallest admissible value is chosen.
    """
    if not is_symmetric(q):
        raise QuiverError("companion construction needs a symmetric quiver")
    parities = loop_parities(q)
    if len(parities) > 1:
        raise QuiverError("loop counts must all have the same parity")
    eps = parities.pop() if parities else 0
    max_count = max((q.edge_count(a, b) for a in q.vertices for b in q.vertices), default=0)
    if A is None:
        A = max(max_count, 1)
        if A % 2 != eps:
            A += 1
    else:
        if A < max_count:
            raise QuiverError(f"A={A} is below the maximum edge count {max_count}")
        if A % 2 != eps:
            raise QuiverError(f"A={A} does not match the loop parity {eps}")
    if A < 1:
        raise QuiverError("A must be at least 1")

    edges = list(q.edges)
    tags = list(q.tags) if q.tags is not None else [TAG_ORIG] * len(q.edges)
    added: list[tuple[str, str]] = []
    for a in q.vertices:
        c_a = (A - q.loop_count(a)) // 2
        for _ in range(c_a):
            added.append((a, a))
            edges.append((a, a))
            tags.append(TAG_U)
            edges.append((a, a))
            tags.append(TAG_U_OPP)
    for i, a in enumerate(q.vertices):
        for b in q.vertices[i + 1:]:
            c_ab = A - q.edge_count(a, b)
            for _ in range(c_ab):
                added.append((a, b))
                edges.append((a, b))
                tags.append(TAG_U)
                edges.append((b, a))
                tags.append(TAG_U_OPP)
    return Quiver.make(q.vertices, edges, tags), USpec(tuple(added))


def jordan_quiver() -> Quiver:
    return Quiver.make(["0"], [("0", "0")])


def loop_quiver(g: int, vertex: str = "0") -> Quiver:
    """One vertex and g loops."""
    return Quiver.make([vertex], [(vertex, vertex)] * g)


def a2_quiver() -> Quiver:
    return Quiver.make(["0", "1"], [("0", "1")])
