"""Edge-coloured graphs with height labellings, and the counts Z and Z*.

A height labelling assigns every red edge uv an offset w(u, v) = -w(v, u)
with 0 < |w| <= d, and every blue edge the offset 0.  An assignment of
values h_v in [n] respects it when h_u = h_v + w(u, v) on every edge.
z_w counts respecting assignments, Z sums z_w over all labellings, and Z*
does the same counting only assignments with pairwise distinct values.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from ..errors import BudgetExceeded

Vertex = Hashable

DEFAULT_MAX_LABELLINGS = 10**6
DEFAULT_MAX_SHAPES = 10**6
DEFAULT_MAX_STATES = 2 * 10**6
DEFAULT_MAX_PARTITION_STATES = 5 * 10**6


def _pair(u, v) -> frozenset:
    if u == v:
        raise ValueError(f"loop at vertex {u!r}")
    return frozenset((u, v))


@dataclass(frozen=True)
class ColoredGraph:
    """A simple loopless graph whose edges are red or blue."""

    vertices: tuple
    red_edges: frozenset
    blue_edges: frozenset

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("repeated vertex label")
        if self.red_edges & self.blue_edges:
            raise ValueError("an edge cannot be both red and blue")
        for e in self.red_edges | self.blue_edges:
            if len(e) != 2:
                raise ValueError(f"loop or malformed edge {set(e)}")
            if not e <= vset:
                raise ValueError(f"edge {set(e)} has an endpoint outside the vertex set")

    @classmethod
    def build(cls, vertices: Iterable[Vertex] = (), red: Iterable[Sequence] = (),
              blue: Iterable[Sequence] = ()) -> "ColoredGraph":
        order: dict = {}
        for v in vertices:
            order.setdefault(v, None)
        red_set, blue_set = set(), set()
        for edges, target in ((red, red_set), (blue, blue_set)):
            for u, v in edges:
                order.setdefault(u, None)
                order.setdefault(v, None)
                target.add(_pair(u, v))
        return cls(tuple(order), frozenset(red_set), frozenset(blue_set))

    @classmethod
    def from_edge_list(cls, text: str) -> "ColoredGraph":
        """Parse lines ``u v red`` / ``u v blue``; a lone label adds a vertex."""
        vertices, red, blue = [], [], []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) == 1:
                vertices.append(_label(parts[0]))
            elif len(parts) == 3 and parts[2].lower() in ("red", "blue"):
                u, v = _label(parts[0]), _label(parts[1])
                vertices.extend((u, v))
                (red if parts[2].lower() == "red" else blue).append((u, v))
            else:
                raise ValueError(f"line {lineno}: expected 'u v red', 'u v blue' or 'u', "
                                 f"got {raw.strip()!r}")
        return cls.build(vertices, red, blue)

    @property
    def edges(self) -> frozenset:
        return self.red_edges | self.blue_edges

    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def oriented_red(self) -> list[tuple]:
        """Red edges as (u, v) with u before v in vertex order."""
        idx = self.index()
        return sorted((tuple(sorted(e, key=idx.__getitem__)) for e in self.red_edges),
                      key=lambda uv: (idx[uv[0]], idx[uv[1]]))

    def adjacency(self) -> dict:
        adj = {v: [] for v in self.vertices}
        for colour, edges in (("red", self.red_edges), ("blue", self.blue_edges)):
            for e in edges:
                u, v = tuple(e)
                adj[u].append((v, colour))
                adj[v].append((u, colour))
        return adj

    def components(self) -> list[tuple]:
        adj = self.adjacency()
        seen = set()
        comps = []
        for root in self.vertices:
            if root in seen:
                continue
            seen.add(root)
            comp = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v, _ in adj[u]:
                    if v not in seen:
                        seen.add(v)
                        comp.append(v)
                        queue.append(v)
            comps.append(tuple(comp))
        return comps

    def complement_pairs(self) -> list[frozenset]:
        taken = self.edges
        return [frozenset((u, v)) for u, v in itertools.combinations(self.vertices, 2)
                if frozenset((u, v)) not in taken]

    def induced(self, subset: Iterable[Vertex]) -> "ColoredGraph":
        keep = set(subset)
        return ColoredGraph(tuple(v for v in self.vertices if v in keep),
                            frozenset(e for e in self.red_edges if e <= keep),
                            frozenset(e for e in self.blue_edges if e <= keep))

    def with_blue(self, pairs: Iterable) -> "ColoredGraph":
        extra = frozenset(_pair(*tuple(p)) for p in pairs)
        return ColoredGraph(self.vertices, self.red_edges, self.blue_edges | extra)

    def disjoint_union(self, other: "ColoredGraph") -> "ColoredGraph":
        if set(self.vertices) & set(other.vertices):
            raise ValueError("vertex labels overlap")
        return ColoredGraph(self.vertices + other.vertices,
                            self.red_edges | other.red_edges,
                            self.blue_edges | other.blue_edges)


def _label(token: str):
    try:
        return int(token)
    except ValueError:
        return token


@dataclass(frozen=True)
class HeightLabelling:
    """Offsets on oriented edges; unlisted pairs carry offset 0."""

    offsets: Mapping

    def __call__(self, u, v) -> int:
        return self.offsets.get((u, v), 0)

    @classmethod
    def from_red(cls, graph: ColoredGraph, values: Mapping, d: int | None = None
                 ) -> "HeightLabelling":
        """Build from one offset per red edge, given for either orientation."""
        offsets = {}
        for (u, v), w in values.items():
            if frozenset((u, v)) not in graph.red_edges:
                raise ValueError(f"({u!r}, {v!r}) is not a red edge")
            offsets[(u, v)] = w
            offsets[(v, u)] = -w
        lab = cls(offsets)
        if d is not None:
            lab.validate(graph, d)
        return lab

    def validate(self, graph: ColoredGraph, d: int) -> None:
        for (u, v), w in self.offsets.items():
            if self.offsets.get((v, u), 0) != -w:
                raise ValueError(f"offsets on ({u!r}, {v!r}) are not antisymmetric")
        for e in graph.red_edges:
            u, v = tuple(e)
            if not 0 < abs(self(u, v)) <= d:
                raise ValueError(f"red edge {u!r}-{v!r} needs an offset in K, got {self(u, v)}")
        for e in graph.blue_edges:
            u, v = tuple(e)
            if self(u, v) != 0:
                raise ValueError(f"blue edge {u!r}-{v!r} must have offset 0")
        for (u, v), w in self.offsets.items():
            if w and frozenset((u, v)) not in graph.red_edges:
                raise ValueError(f"non-zero offset on non-red pair ({u!r}, {v!r})")


def offset_set(d: int) -> tuple[int, ...]:
    """K = the non-zero integers of absolute value at most d."""
    return tuple(k for k in range(-d, d + 1) if k)


def labellings(graph: ColoredGraph, d: int) -> Iterator[HeightLabelling]:
    """All (2d)^m height labellings of a graph with m red edges."""
    red = graph.oriented_red()
    K = offset_set(d)
    for choice in itertools.product(K, repeat=len(red)):
        offsets = {}
        for (u, v), w in zip(red, choice):
            offsets[(u, v)] = w
            offsets[(v, u)] = -w
        yield HeightLabelling(offsets)


def incline(graph: ColoredGraph, omega: HeightLabelling, walk: Sequence[Vertex]) -> int:
    """Sum of offsets along consecutive vertices of ``walk``."""
    if not walk:
        raise ValueError("a walk needs at least one vertex")
    edges = graph.edges
    vset = set(graph.vertices)
    if walk[0] not in vset:
        raise ValueError(f"{walk[0]!r} is not a vertex")
    total = 0
    for u, v in zip(walk, walk[1:]):
        if u == v or frozenset((u, v)) not in edges:
            raise ValueError(f"{u!r} and {v!r} are not adjacent")
        total += omega(u, v)
    return total


def potentials(graph: ColoredGraph, omega: HeightLabelling) -> dict | None:
    """Heights p with p_u - p_v = w(u, v) on every edge, or None if impossible.

    Each component is anchored at 0 on its first vertex; tree edges of a BFS
    forest fix the potentials and every other edge is then checked.
    """
    adj = graph.adjacency()
    pot = {}
    for root in graph.vertices:
        if root in pot:
            continue
        pot[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in adj[u]:
                want = pot[u] - omega(u, v)
                if v not in pot:
                    pot[v] = want
                    queue.append(v)
                elif pot[v] != want:
                    return None
    return pot


def is_consistent(graph: ColoredGraph, omega: HeightLabelling) -> bool:
    """True iff every cycle has incline 0."""
    return potentials(graph, omega) is not None


def z_omega(graph: ColoredGraph, omega: HeightLabelling, n: int) -> int:
    """Number of value assignments in [n] respecting ``omega``.

    Per component the values are pinned by one anchor, which has
    n - (max potential - min potential) admissible positions (floored at 0).
    """
    pot = potentials(graph, omega)
    if pot is None:
        return 0
    total = 1
    for comp in graph.components():
        heights = [pot[v] for v in comp]
        total *= max(0, n - (max(heights) - min(heights)))
    return total


# -- enumeration of consistent potentials ------------------------------------


def component_shapes(graph: ColoredGraph, comp: Sequence[Vertex], d: int,
                     max_shapes: int = DEFAULT_MAX_SHAPES) -> list[tuple[int, ...]]:
    """Potential vectors (BFS order, root 0) of every consistent labelling of ``comp``.

    Consistent labellings of a connected graph correspond one-to-one with
    these vectors: the offsets are the potential differences.
    """
    adj = graph.adjacency()
    order = [comp[0]]
    parent = {comp[0]: None}
    seen = {comp[0]}
    for u in order:
        for v, colour in adj[u]:
            if v not in seen:
                seen.add(v)
                parent[v] = (u, colour)
                order.append(v)
    pos = {v: i for i, v in enumerate(order)}
    back = []
    for i, v in enumerate(order):
        back.append([(pos[u], colour) for u, colour in adj[v] if pos[u] < i])
    K = offset_set(d)
    shapes: list[tuple[int, ...]] = []
    pot = [0] * len(order)

    def extend(i):
        if i == len(order):
            shapes.append(tuple(pot))
            if len(shapes) > max_shapes:
                raise BudgetExceeded("consistent labellings of one component",
                                     f"> {max_shapes}", max_shapes)
            return
        p_idx = pos[parent[order[i]][0]]
        candidates = K if parent[order[i]][1] == "red" else (0,)
        for step in candidates:
            value = pot[p_idx] + step
            ok = True
            for j, colour in back[i]:
                diff = value - pot[j]
                if colour == "red":
                    if diff == 0 or abs(diff) > d:
                        ok = False
                        break
                elif diff != 0:
                    ok = False
                    break
            if ok:
                pot[i] = value
                extend(i + 1)

    extend(1)
    return shapes


def Z(graph: ColoredGraph, n: int, d: int, method: str = "potentials",
      max_labellings: int = DEFAULT_MAX_LABELLINGS) -> int:
    """Sum of z_w over all height labellings of ``graph``.

    ``method="labellings"`` walks all (2d)^m labellings literally;
    ``method="potentials"`` visits only consistent labellings, component by
    component, and gives the same number.
    """
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    if method == "labellings":
        m = len(graph.red_edges)
        if (2 * d) ** m > max_labellings:
            raise BudgetExceeded("height labellings", (2 * d) ** m, max_labellings)
        return sum(z_omega(graph, omega, n) for omega in labellings(graph, d))
    if method != "potentials":
        raise ValueError(f"unknown method {method!r}")
    total = 1
    for comp in graph.components():
        sub = 0
        for shape in component_shapes(graph, comp, d):
            sub += max(0, n - (max(shape) - min(shape)))
        total *= sub
        if not total:
            break
    return total


# -- distinct values --------------------------------------------------------


def _require_all_red(graph: ColoredGraph) -> None:
    if graph.blue_edges:
        raise ValueError("Z* is defined for graphs whose edges are all red")


def Z_star(graph: ColoredGraph, n: int, d: int, method: str = "tuples",
           max_states: int = DEFAULT_MAX_STATES,
           max_partition_states: int = DEFAULT_MAX_PARTITION_STATES) -> int:
    """Count labelled assignments with pairwise distinct values in [n].

    "tuples" places one anchor per component (each consistent labelling
    fixes the component's value pattern) and keeps only placements whose
    values are all distinct; partial placements are merged by their set of
    used values.  "pie" is inclusion-exclusion over sets F of blue edges
    added from the complement, sum_F (-1)^|F| Z(graph + F).
    """
    _require_all_red(graph)
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    if method == "tuples":
        return _z_star_tuples(graph, n, d, max_states)
    if method == "pie":
        return pie_partial_sums(graph, n, d, max_partition_states)[-1]
    raise ValueError(f"unknown method {method!r}")


def _z_star_tuples(graph: ColoredGraph, n: int, d: int, max_states: int) -> int:
    patterns = []
    for comp in graph.components():
        counts: dict[tuple[int, int], int] = defaultdict(int)
        for shape in component_shapes(graph, comp, d):
            if len(set(shape)) != len(shape):
                continue
            lo = min(shape)
            mask = 0
            for p in shape:
                mask |= 1 << (p - lo)
            counts[(mask, max(shape) - lo)] += 1
        if not counts:
            return 0
        patterns.append(counts)
    # larger components first keeps the state space small early on
    patterns.sort(key=lambda c: -max(bin(mask).count("1") for mask, _ in c))
    states = {0: 1}
    for counts in patterns:
        nxt: dict[int, int] = defaultdict(int)
        for used, ways in states.items():
            for (mask, span), mult in counts.items():
                for anchor in range(n - span):
                    placed = mask << anchor
                    if not placed & used:
                        nxt[used | placed] += ways * mult
        if len(nxt) > max_states:
            raise BudgetExceeded("partial placements", len(nxt), max_states)
        states = nxt
        if not states:
            return 0
    return sum(states.values())


def _canonical(blocks: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(b, len(relabel)) for b in blocks)


def pie_coefficients(graph: ColoredGraph,
                     max_partition_states: int = DEFAULT_MAX_PARTITION_STATES
                     ) -> dict[tuple[int, ...], dict[int, int]]:
    """Group the subsets F of complement edges by the vertex partition their
    blue edges induce: result[partition][|F|] = number of such F.

    Z(graph + F) only depends on that partition, so this is all the
    inclusion-exclusion sum needs.
    """
    idx = graph.index()
    pairs = [tuple(sorted((idx[u] for u in e))) for e in graph.complement_pairs()]
    states: dict[tuple[int, ...], dict[int, int]] = {
        tuple(range(len(graph.vertices))): {0: 1}}
    size = 1
    for a, b in pairs:
        nxt: dict[tuple[int, ...], dict[int, int]] = defaultdict(lambda: defaultdict(int))
        for part, by_f in states.items():
            keep = nxt[part]
            for f, c in by_f.items():
                keep[f] += c
            if part[a] == part[b]:
                merged = part
            else:
                old, new = part[b], part[a]
                merged = _canonical(tuple(new if x == old else x for x in part))
            target = nxt[merged]
            for f, c in by_f.items():
                target[f + 1] += c
        states = nxt
        size = sum(len(v) for v in states.values())
        if size > max_partition_states:
            raise BudgetExceeded("inclusion-exclusion states", size, max_partition_states)
    return {p: dict(v) for p, v in states.items()}


def _merged_graph(graph: ColoredGraph, partition: Sequence[int]) -> ColoredGraph | None:
    """``graph`` plus blue edges tying each block together; None when a red
    edge falls inside a block (it would need offset 0, which K excludes)."""
    idx = graph.index()
    for e in graph.red_edges:
        u, v = tuple(e)
        if partition[idx[u]] == partition[idx[v]]:
            return None
    first: dict[int, Vertex] = {}
    blue = []
    for v, b in zip(graph.vertices, partition):
        if b in first:
            blue.append((first[b], v))
        else:
            first[b] = v
    return graph.with_blue(blue)


def pie_partial_sums(graph: ColoredGraph, n: int, d: int,
                     max_partition_states: int = DEFAULT_MAX_PARTITION_STATES) -> list[int]:
    """Partial sums P_a = sum_{|F| <= a} (-1)^|F| Z(graph + F), a = 0..|E|.

    The last entry is Z*; P_a bounds Z* from above for even a and from below
    for odd a.
    """
    _require_all_red(graph)
    coeffs = pie_coefficients(graph, max_partition_states)
    n_pairs = len(graph.complement_pairs())
    by_f = [0] * (n_pairs + 1)
    for part, fs in coeffs.items():
        merged = _merged_graph(graph, part)
        value = 0 if merged is None else Z(merged, n, d)
        if value:
            for f, c in fs.items():
                by_f[f] += c * value
    out = []
    acc = 0
    for f, s in enumerate(by_f):
        acc += s if f % 2 == 0 else -s
        out.append(acc)
    return out
