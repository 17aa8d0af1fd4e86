"""Stable dual graphs of pointed nodal curves.

A :class:`StableGraph` has one vertex per irreducible component (weighted by
its geometric genus), one edge per node and one leg per marked point.  Edges
are unordered vertex pairs; an edge ``(v, v)`` is a loop and contributes two
half-edges to the valence of ``v``.

Isomorphism classes are tracked through :func:`canonical_key`, which
minimises an encoding over all vertex orderings compatible with an
iteratively refined vertex colouring.  The graphs handled here are tiny
(at most ``3g - 3 + n`` edges for ``g <= 2``, ``n <= 5``), so the exhaustive
search is cheap and fully deterministic.
"""
from __future__ import annotations

import itertools
import json
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import OutOfWindowError, StructureError

MAX_GENUS = 2
MAX_MARKINGS = 5


@dataclass(frozen=True)
class StableGraph:
    """Dual graph of a pointed nodal curve.

    ``legs[i]`` is the vertex carrying marking ``i + 1``.
    """

    genera: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()
    legs: tuple[int, ...] = ()

    def __post_init__(self):
        genera = tuple(int(x) for x in self.genera)
        edges = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in self.edges))
        legs = tuple(int(x) for x in self.legs)
        object.__setattr__(self, "genera", genera)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "legs", legs)
        nv = len(genera)
        if nv == 0:
            raise StructureError("a stable graph needs at least one vertex")
        if any(x < 0 for x in genera):
            raise StructureError(f"negative vertex genus in {genera}")
        for a, b in edges:
            if not (0 <= a < nv and 0 <= b < nv):
                raise StructureError(f"edge ({a}, {b}) out of range for {nv} vertices")
        for i, v in enumerate(legs):
            if not 0 <= v < nv:
                raise StructureError(f"leg {i + 1} attached to missing vertex {v}")

    @property
    def num_vertices(self) -> int:
        return len(self.genera)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        return len(self.legs)

    def valence(self, v: int) -> int:
        half_edges = sum((a == v) + (b == v) for a, b in self.edges)
        return half_edges + sum(1 for x in self.legs if x == v)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        adj: dict[int, set[int]] = {v: set() for v in range(self.num_vertices)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        while stack:
            v = stack.pop()
            for w in adj[v] - seen:
                seen.add(w)
                stack.append(w)
        return len(seen) == self.num_vertices

    def relabel(self, perm) -> "StableGraph":
        """Return the same graph with vertex ``v`` renamed ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.num_vertices)):
            raise StructureError(f"{perm} is not a permutation of the vertices")
        genera = [0] * self.num_vertices
        for v, g in enumerate(self.genera):
            genera[perm[v]] = g
        return StableGraph(
            tuple(genera),
            tuple((perm[a], perm[b]) for a, b in self.edges),
            tuple(perm[v] for v in self.legs),
        )

    # serialisation ---------------------------------------------------------

    def to_text(self) -> str:
        record = {
            "genera": list(self.genera),
            "edges": [list(e) for e in self.edges],
            "legs": {str(i + 1): v for i, v in enumerate(self.legs)},
        }
        return json.dumps(record, separators=(", ", ": "))

    @classmethod
    def from_text(cls, text: str) -> "StableGraph":
        record = json.loads(text)
        legs_map = record.get("legs", {})
        labels = sorted(int(k) for k in legs_map)
        if labels != list(range(1, len(labels) + 1)):
            raise StructureError(f"leg labels must be 1..n, got {labels}")
        return cls(
            tuple(record["genera"]),
            tuple(tuple(e) for e in record.get("edges", [])),
            tuple(legs_map[str(i)] for i in labels),
        )


def is_stable(G: StableGraph) -> bool:
    return all(2 * g - 2 + G.valence(v) > 0 for v, g in enumerate(G.genera))


def total_genus(G: StableGraph) -> int:
    if not G.is_connected():
        raise StructureError("total genus is only defined for connected graphs")
    return sum(G.genera) + G.num_edges - G.num_vertices + 1


# canonical forms -------------------------------------------------------------


def _refined_colours(G: StableGraph) -> list[int]:
    """Colour-refinement of the vertices, using isomorphism-invariant data only."""
    nv = G.num_vertices
    legs_at = [tuple(i for i, x in enumerate(G.legs) if x == v) for v in range(nv)]
    loops = Counter(a for a, b in G.edges if a == b)
    nbrs: list[Counter] = [Counter() for _ in range(nv)]
    for a, b in G.edges:
        if a != b:
            nbrs[a][b] += 1
            nbrs[b][a] += 1

    sigs = [(G.genera[v], legs_at[v], loops[v]) for v in range(nv)]
    colours = _rank(sigs)
    for _ in range(nv):
        sigs = [
            (colours[v], tuple(sorted((colours[w], m) for w, m in nbrs[v].items())))
            for v in range(nv)
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(colours)):
            break
        colours = new
    return colours


def _rank(sigs) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [order[s] for s in sigs]


def _orderings(colours: list[int]):
    """All vertex orderings that list colour classes in increasing colour."""
    classes = [
        [v for v, c in enumerate(colours) if c == col] for col in sorted(set(colours))
    ]
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        yield [v for part in parts for v in part]


def _encode(G: StableGraph, order: list[int]):
    pos = {v: i for i, v in enumerate(order)}
    edges = tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in G.edges))
    legs = tuple(pos[v] for v in G.legs)
    return edges, legs


def _canonical(G: StableGraph):
    colours = _refined_colours(G)
    orders = _orderings(colours)
    first = next(orders)
    best = min(itertools.chain([_encode(G, first)], (_encode(G, o) for o in orders)))
    genera = tuple(G.genera[v] for v in first)
    return genera, best[0], best[1]


def canonical_key(G: StableGraph) -> bytes:
    """Isomorphism-class key respecting leg labels."""
    return repr(_canonical(G)).encode("ascii")


def canonical_form(G: StableGraph) -> StableGraph:
    """The representative of ``G``'s class whose encoding is the canonical key."""
    return StableGraph(*_canonical(G))


def is_isomorphic(G: StableGraph, H: StableGraph) -> bool:
    return canonical_key(G) == canonical_key(H)


def automorphism_count(G: StableGraph) -> int:
    """Order of the leg-preserving automorphism group.

    Vertex permutations preserving the graph, times the permutations of
    parallel edges, times the half-edge swaps of loops.
    """
    # Two colour-compatible orderings give the same encoding exactly when they
    # differ by a vertex automorphism, so count the orderings hitting one value.
    orders = _orderings(_refined_colours(G))
    target = _encode(G, next(orders))
    vertex_auts = 1 + sum(_encode(G, order) == target for order in orders)
    mult = Counter(G.edges)
    edge_factor = 1
    for (a, b), k in mult.items():
        edge_factor *= math.factorial(k)
        if a == b:
            edge_factor *= 2**k
    return vertex_auts * edge_factor


# enumeration ------------------------------------------------------------------


def _check_window(g: int, n: int) -> None:
    if 2 * g - 2 + n <= 0:
        raise StructureError(f"(g, n) = ({g}, {n}) is not in the stable range")
    if not (0 <= g <= MAX_GENUS and 0 <= n <= MAX_MARKINGS):
        raise OutOfWindowError(
            f"(g, n) = ({g}, {n}) is out of supported window g <= {MAX_GENUS}, n <= {MAX_MARKINGS}"
        )


def smooth_graph(g: int, n: int) -> StableGraph:
    return StableGraph((g,), (), (0,) * n)


def _degenerations(G: StableGraph):
    """All graphs obtained by adding one node at a single vertex."""
    nv = G.num_vertices
    for v in range(nv):
        gv = G.genera[v]
        if gv >= 1:
            genera = list(G.genera)
            genera[v] -= 1
            yield StableGraph(tuple(genera), G.edges + ((v, v),), G.legs)

        w = nv
        leg_ids = [i for i, x in enumerate(G.legs) if x == v]
        ends = [(j, a, b) for j, (a, b) in enumerate(G.edges) if (a == v) != (b == v)]
        loops = [j for j, (a, b) in enumerate(G.edges) if a == b == v]
        rest = [e for j, e in enumerate(G.edges) if j not in {x[0] for x in ends} and j not in loops]

        for g1 in range(gv + 1):
            g2 = gv - g1
            for leg_side in itertools.product((0, 1), repeat=len(leg_ids)):
                for end_side in itertools.product((0, 1), repeat=len(ends)):
                    for loop_side in itertools.product((0, 1, 2), repeat=len(loops)):
                        # valences at v and w, checked before building the graph
                        val_w = 1 + sum(leg_side) + sum(end_side)
                        val_w += sum((0, 2, 1)[s] for s in loop_side)
                        val_v = 1 + len(leg_side) - sum(leg_side) + len(end_side) - sum(end_side)
                        val_v += sum((2, 0, 1)[s] for s in loop_side)
                        if 2 * g1 - 2 + val_v <= 0 or 2 * g2 - 2 + val_w <= 0:
                            continue
                        legs = list(G.legs)
                        for i, s in zip(leg_ids, leg_side):
                            legs[i] = v if s == 0 else w
                        edges = list(rest)
                        for (_, a, b), s in zip(ends, end_side):
                            other = b if a == v else a
                            edges.append((v if s == 0 else w, other))
                        for s in loop_side:
                            edges.append(((v, v), (w, w), (v, w))[s])
                        edges.append((v, w))
                        genera = list(G.genera) + [g2]
                        genera[v] = g1
                        yield StableGraph(tuple(genera), tuple(edges), tuple(legs))


@lru_cache(maxsize=None)
def _strata(g: int, n: int) -> tuple[StableGraph, ...]:
    level = {canonical_key(smooth_graph(g, n)): smooth_graph(g, n)}
    found = dict(level)
    for _ in range(3 * g - 3 + n):
        nxt = {}
        for G in level.values():
            for H in _degenerations(G):
                key = canonical_key(H)
                if key not in nxt:
                    nxt[key] = canonical_form(H)
        found.update(nxt)
        level = nxt
    return tuple(found[k] for k in sorted(found))


def enumerate_strata(g: int, n: int) -> list[StableGraph]:
    """All isomorphism classes of stable graphs of genus ``g`` with ``n`` legs.

    Every stable graph with at least one edge contracts (along any edge) to a
    stable graph with one edge fewer, so degenerating vertices level by level
    from the smooth graph reaches every class.  Output sorted by canonical key.
    """
    _check_window(g, n)
    return list(_strata(g, n))


def enumerate_one_node(g: int, n: int) -> list[StableGraph]:
    """Stable graphs with exactly one edge: the loop type and the separating splits."""
    if 2 * g - 2 + n <= 0:
        raise StructureError(f"(g, n) = ({g}, {n}) is not in the stable range")
    found = {}
    if g >= 1:
        G = StableGraph((g - 1,), ((0, 0),), (0,) * n)
        found[canonical_key(G)] = G
    for g1 in range(g + 1):
        for side in itertools.product((0, 1), repeat=n):
            s1 = side.count(0)
            if 2 * g1 - 2 + s1 + 1 <= 0 or 2 * (g - g1) - 2 + (n - s1) + 1 <= 0:
                continue
            G = StableGraph((g1, g - g1), ((0, 1),), side)
            key = canonical_key(G)
            found.setdefault(key, canonical_form(G))
    return [found[k] for k in sorted(found)]


def strata_count_by_edges(g: int, n: int) -> dict[int, int]:
    counts = Counter(G.num_edges for G in enumerate_strata(g, n))
    return dict(sorted(counts.items()))
