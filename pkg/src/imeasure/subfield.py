"""The boundary graph of a sub-collection of variables.

Drop some variables of a field represented by a graph and the remainder is
always represented by one specific graph on the kept vertices, and by nothing
smaller: connect two kept vertices whenever the original graph joins them by
a path whose interior runs entirely through dropped vertices.  Three
equivalent constructions are provided (direct path search, a closed form that
cliques the neighborhoods of the dropped components, and one-vertex-at-a-time
elimination), plus the tree criterion, the minimality witnesses, and the
smallest-graph pipeline.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._bits import as_mask, iter_bits, verts_of
from .atoms import AtomSet, image_of_graph
from .graphs import Graph, clique_edges
from .measures import Distribution
from .witnesses import atom_concentrator


def _interior_reach(g: Graph, start: int, interior: int) -> int:
    """Vertices adjacent to `start` or to the interior component(s) it touches."""
    seeds = g.adjacency(start) & interior
    comp = seeds
    # close under adjacency inside the interior
    while True:
        nxt = comp
        m = comp
        while m:
            b = m & -m
            nxt |= g.adjacency(b.bit_length()) & interior
            m ^= b
        if nxt == comp:
            break
        comp = nxt
    reach = g.adjacency(start)
    for b in iter_bits(comp):
        reach |= g.adjacency(b.bit_length())
    return reach


def _keep_mask(g: Graph, keep) -> int:
    kmask = as_mask(keep, g.n)
    if kmask & ~g.vmask:
        raise ValueError("kept set names vertices outside the graph")
    if kmask == 0:
        raise ValueError("kept set must be nonempty")
    return kmask


def g_star_paths(g: Graph, keep) -> Graph:
    """Boundary graph by direct path search.

    Kept vertices u, v are joined iff some path of g connects them with every
    intermediate vertex outside the kept set (a direct edge qualifies).
    """
    kmask = _keep_mask(g, keep)
    interior = g.vmask & ~kmask
    edges = set()
    for b in iter_bits(kmask):
        u = b.bit_length()
        targets = _interior_reach(g, u, interior) & kmask & ~b
        for t in iter_bits(targets):
            v = t.bit_length()
            edges.add((u, v) if u < v else (v, u))
    return Graph(g.n, edges, vertices=kmask)


def g_star_closed_form(g: Graph, keep) -> Graph:
    """Boundary graph in closed form.

    Induced edges, plus a clique on the neighborhood of every component of
    the dropped vertices.
    """
    kmask = _keep_mask(g, keep)
    edges = set(
        (u, v) for u, v in g.edges if (kmask >> (u - 1)) & 1 and (kmask >> (v - 1)) & 1
    )
    for comp in g.component_masks(kmask):  # components of g minus the kept set
        edges |= clique_edges(g.neighbor_mask(comp))
    return Graph(g.n, edges, vertices=kmask)


def _eliminate_vertex(g: Graph, x: int) -> Graph:
    """One elimination step: drop x, then clique its neighborhood."""
    edges = set((u, v) for u, v in g.edges if u != x and v != x)
    edges |= clique_edges(g.neighbor_mask(1 << (x - 1)))
    return Graph(g.n, edges, vertices=g.vmask & ~(1 << (x - 1)))


def g_star_elimination(g: Graph, keep, order=None) -> Graph:
    """Boundary graph by eliminating the dropped vertices one at a time.

    Any elimination order yields the same graph; the default is descending
    label order.
    """
    kmask = _keep_mask(g, keep)
    drop = verts_of(g.vmask & ~kmask)
    if order is None:
        order = sorted(drop, reverse=True)
    else:
        order = list(order)
        if sorted(order) != list(drop):
            raise ValueError("order must be a permutation of the dropped vertices")
    cur = g
    for x in order:
        cur = _eliminate_vertex(cur, x)
    return cur


def boundary_set(g: Graph, keep) -> frozenset[int]:
    """Kept vertices with at least one dropped neighbor."""
    kmask = _keep_mask(g, keep)
    return g.neighbor_set(g.vmask & ~kmask)


@dataclass(frozen=True)
class SubfieldResult:
    g_star: Graph
    construction: str
    rho: frozenset[int]  # boundary set of the kept vertices

    def to_json(self) -> dict:
        return {
            "g_star": self.g_star.to_json(),
            "construction": self.construction,
            "rho": sorted(self.rho),
        }


def subfield_graph(g: Graph, keep) -> SubfieldResult:
    """Boundary graph plus the boundary set, via the closed form."""
    return SubfieldResult(g_star_closed_form(g, keep), "closed_form", boundary_set(g, keep))


def equals_induced(g: Graph, keep) -> bool:
    """Whether the boundary graph adds nothing over the induced subgraph.

    Criterion: no two distinct boundary vertices that are non-adjacent in the
    induced subgraph are connected by a path interior to the dropped set.
    Equivalently, every dropped component's neighborhood is already a clique.
    """
    kmask = _keep_mask(g, keep)
    rho = boundary_set(g, kmask)
    for comp in g.component_masks(kmask):
        nb = [v for v in verts_of(g.neighbor_mask(comp)) if v in rho]
        for u, v in itertools.combinations(nb, 2):
            if not g.has_edge(u, v):
                return False
    return True


def cutset_lift(g: Graph, keep, t) -> bool:
    """Truth of: t cuts the boundary graph implies t cuts g."""
    kmask = _keep_mask(g, keep)
    tmask = as_mask(t, g.n)
    if tmask & ~kmask:
        raise ValueError("t must lie inside the kept set")
    gs = g_star_paths(g, kmask)
    return (not gs.is_cutset(tmask)) or g.is_cutset(tmask)


@dataclass(frozen=True)
class SubtreeCheck:
    is_subtree: bool
    witness_vertex: int | None  # dropped vertex seeing >= 3 kept vertices
    witness_targets: tuple[int, ...]


def subtree_condition(g: Graph, keep) -> SubtreeCheck:
    """Tree criterion for the boundary graph of a tree.

    Fails exactly when some dropped vertex reaches three or more kept vertices
    by paths whose interiors stay inside the dropped set: those targets then
    form a cycle in the boundary graph.  Rejects non-tree inputs.
    """
    if g.component_count(0) != 1 or len(g.edges) != len(g.vertices) - 1:
        raise ValueError("subtree condition applies to trees only")
    kmask = _keep_mask(g, keep)
    interior = g.vmask & ~kmask
    for b in iter_bits(interior):
        u = b.bit_length()
        targets = _interior_reach(g, u, interior & ~b) & kmask
        if targets.bit_count() >= 3:
            return SubtreeCheck(False, u, verts_of(targets)[:3])
    return SubtreeCheck(True, None, ())


@dataclass(frozen=True)
class SmallestRepResult:
    g_hat: Graph
    exists: bool
    witness_atoms: AtomSet  # image atoms outside the vanishing set when exists is False

    def to_json(self) -> dict:
        return {
            "g_hat": self.g_hat.to_json(),
            "exists": self.exists,
            "witness_atoms": self.witness_atoms.to_json(),
        }


def smallest_graph(vanishing: AtomSet) -> SmallestRepResult:
    """Candidate smallest graph from a vanishing-atom set.

    Keep edge {u, v} iff the atom supported by exactly {u, v} is outside the
    vanishing set.  The candidate is the smallest representation iff its own
    image stays inside the vanishing set; otherwise the leftover atoms witness
    that no smallest representation exists.
    """
    n = vanishing.n
    full = (1 << n) - 1
    edges = []
    for u, v in itertools.combinations(range(1, n + 1), 2):
        pair = (1 << (u - 1)) | (1 << (v - 1))
        if not vanishing.has_cmask(full & ~pair):
            edges.append((u, v))
    g_hat = Graph(n, edges)
    img = image_of_graph(g_hat)
    missing = img - vanishing
    return SmallestRepResult(g_hat, len(missing) == 0, missing)


def _interior_path(g: Graph, u: int, v: int, interior: int) -> list[int] | None:
    """Shortest u-v path whose intermediates lie inside `interior` (BFS)."""
    allowed = interior | (1 << (v - 1))
    prev = {u: 0}
    frontier = [u]
    while frontier:
        nxt = []
        for w in frontier:
            for b in iter_bits(g.adjacency(w) & allowed):
                x = b.bit_length()
                if x in prev:
                    continue
                prev[x] = w
                if x == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(prev[path[-1]])
                    return path[::-1]
                if (interior >> (x - 1)) & 1:
                    nxt.append(x)
        frontier = nxt
    return None


def minimality_witness(g: Graph, keep, edge: tuple[int, int]) -> Distribution:
    """Distribution showing an edge of the boundary graph cannot be dropped.

    Copies one fair bit along a u-v path interior to the dropped set, constants
    elsewhere.  The result respects g, yet u and v stay dependent given the
    rest of the kept set, so any graph representing the sub-collection must
    join them.
    """
    kmask = _keep_mask(g, keep)
    u, v = edge
    gs = g_star_paths(g, kmask)
    if not gs.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge of the boundary graph")
    path = _interior_path(g, u, v, g.vmask & ~kmask)
    if path is None:  # unreachable given the edge exists
        raise ValueError(f"no interior path between {u} and {v}")
    support = as_mask(path, g.n)
    return atom_concentrator(g.n, support)
