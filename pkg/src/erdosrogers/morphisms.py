"""Decision procedures with certificates: homomorphism, k-shadow-homomorphism,
k-tight connectivity, and bounded-depth membership in iterated blowups.

A k-shadow-homomorphism from G to F assigns every k-subset S of an edge of G
a target k-subset of an edge of F together with a bijection g_S, such that on
every edge of G the per-k-set bijections glue into a single bijection onto an
edge of F.  Equivalently (and this is how the solver works): each edge of G
gets an injective map onto an edge of F, and any two edges sharing at least k
vertices agree pointwise on their intersection.  With k = 1 this is exactly a
homomorphism restricted to the covered vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidParameterError
from .hypergraph import Hypergraph, blowup_F
from .isomorphism import (
    CANONICAL_CAP,
    Embedding,
    canonical_form,
    contains_copy,
)


@dataclass(frozen=True)
class HomWitness:
    """A homomorphism: images[v] is the target of vertex v (not necessarily injective)."""

    images: tuple[int, ...]


@dataclass(frozen=True)
class SetMap:
    """A bijection between two vertex sets, stored against the sorted source.

    images[i] is the image of source[i]; the target set is the sorted image.
    """

    source: tuple[int, ...]
    images: tuple[int, ...]

    @property
    def target(self) -> tuple[int, ...]:
        return tuple(sorted(self.images))

    def apply(self, v: int) -> int:
        return self.images[self.source.index(v)]


@dataclass(frozen=True)
class ShadowHomWitness:
    """Certificate for a k-shadow-homomorphism.

    shadow_map has one entry per k-set of the source shadow (in lexicographic
    order); edge_map has one entry per source edge (in canonical edge order).
    """

    k: int
    shadow_map: tuple[SetMap, ...]
    edge_map: tuple[SetMap, ...]


@dataclass(frozen=True)
class TightOrder:
    """An edge order in which every edge meets some earlier edge in >= k vertices."""

    order: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BlowupCertificate:
    """Steps is the sequence of vertices blown up (each placing a copy of the
    base pattern), starting from the base pattern itself; embedding maps the
    probe hypergraph into the replayed iterate."""

    steps: tuple[int, ...]
    embedding: Embedding


def find_homomorphism(g: Hypergraph, f: Hypergraph) -> Optional[HomWitness]:
    """First homomorphism from g to f in a fixed search order, or None.

    Every edge of g must map to distinct vertices forming an edge of f.
    """
    if g.r != f.r:
        raise InvalidParameterError(f"uniformity mismatch: {g.r} vs {f.r}")
    if g.n == 0:
        return HomWitness(())
    if f.n == 0:
        return None
    if g.edges and not f.edges:
        return None
    order = _connectivity_order(g)
    pos = {v: i for i, v in enumerate(order)}
    checks: list[list[tuple[int, ...]]] = [[] for _ in range(g.n + 1)]
    for e in g.edges:
        checks[max(pos[v] for v in e)].append(e)
    images = [-1] * g.n
    edge_set = f.edge_set

    def rec(depth: int) -> bool:
        if depth == g.n:
            return True
        v = order[depth]
        for cand in range(f.n):
            images[v] = cand
            ok = True
            for e in checks[depth]:
                img = sorted(images[u] for u in e)
                if len(set(img)) != g.r or tuple(img) not in edge_set:
                    ok = False
                    break
            if ok and rec(depth + 1):
                return True
        images[v] = -1
        return False

    if rec(0):
        return HomWitness(tuple(images))
    return None


def _connectivity_order(g: Hypergraph) -> list[int]:
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for e in g.edges:
        for u in e:
            adj[u].update(w for w in e if w != u)
    deg = g.degrees
    order: list[int] = []
    placed = [False] * g.n
    for _ in range(g.n):
        best, best_key = -1, None
        for v in range(g.n):
            if placed[v]:
                continue
            key = (sum(1 for u in adj[v] if placed[u]), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed[best] = True
    return order


def _edge_processing_order(edges: list[tuple[int, ...]], k: int) -> list[int]:
    # Greedy order maximizing overlap with already-processed edges, so the
    # gluing constraint bites as early as possible.
    remaining = set(range(len(edges)))
    order = [0]
    remaining.discard(0)
    while remaining:
        best, best_key = -1, None
        for i in sorted(remaining):
            inter = max(
                (len(set(edges[i]) & set(edges[j])) for j in order), default=0
            )
            tied = sum(1 for j in order if len(set(edges[i]) & set(edges[j])) >= k)
            key = (inter, tied, -i)
            if best_key is None or key > best_key:
                best, best_key = i, key
        order.append(best)
        remaining.discard(best)
    return order


def find_shadow_homomorphism(
    g: Hypergraph, f: Hypergraph, k: int
) -> Optional[ShadowHomWitness]:
    """Decide whether g is k-shadow-homomorphic to f; full witness on success.

    Backtracking over edges of g in an overlap-maximizing order.  Each edge's
    candidate assignments are all injections onto an edge of f; forward
    checking filters the candidates of edges sharing >= k vertices.
    """
    if g.r != f.r:
        raise InvalidParameterError(f"uniformity mismatch: {g.r} vs {f.r}")
    if k < 1 or k > g.r:
        raise InvalidParameterError(f"shadow order must be in 1..{g.r}, got {k}")
    if not g.edges:
        return ShadowHomWitness(k=k, shadow_map=(), edge_map=())
    if not f.edges:
        return None

    edges = list(g.edges)
    m = len(edges)
    # Identical candidate pool for every source edge: image tuples aligned
    # with the sorted source, one per (target edge, permutation).
    pool = [perm for e in f.edges for perm in itertools.permutations(e)]
    # Constrained pairs: shared positions for edges intersecting in >= k vertices.
    shared: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for i in range(m):
        for j in range(i + 1, m):
            inter = set(edges[i]) & set(edges[j])
            if len(inter) >= k:
                shared[(i, j)] = [
                    (edges[i].index(v), edges[j].index(v)) for v in sorted(inter)
                ]

    def compatible(i: int, ci: tuple, j: int, cj: tuple) -> bool:
        if i > j:
            i, j, ci, cj = j, i, cj, ci
        pairs = shared.get((i, j))
        if pairs is None:
            return True
        return all(ci[p] == cj[q] for p, q in pairs)

    order = _edge_processing_order(edges, k)
    domains: list[list[tuple]] = [list(pool) for _ in range(m)]
    assignment: list[Optional[tuple]] = [None] * m

    def rec(depth: int) -> bool:
        if depth == m:
            return True
        i = order[depth]
        for cand in domains[i]:
            assignment[i] = cand
            saved = []
            feasible = True
            for j in order[depth + 1 :]:
                filtered = [c for c in domains[j] if compatible(i, cand, j, c)]
                saved.append((j, domains[j]))
                domains[j] = filtered
                if not filtered:
                    feasible = False
                    break
            if feasible and rec(depth + 1):
                return True
            for j, old in saved:
                domains[j] = old
        assignment[i] = None
        return False

    if not rec(0):
        return None

    edge_map = tuple(
        SetMap(source=edges[i], images=tuple(assignment[i])) for i in range(m)
    )
    shadow_entries = {}
    for i, e in enumerate(edges):
        img = assignment[i]
        for positions in itertools.combinations(range(g.r), k):
            s = tuple(e[p] for p in positions)
            if s not in shadow_entries:
                shadow_entries[s] = tuple(img[p] for p in positions)
    shadow_map = tuple(
        SetMap(source=s, images=shadow_entries[s]) for s in sorted(shadow_entries)
    )
    return ShadowHomWitness(k=k, shadow_map=shadow_map, edge_map=edge_map)


def verify_shadow_hom(
    g: Hypergraph, f: Hypergraph, k: int, witness: ShadowHomWitness
) -> bool:
    """Independent check of a shadow-homomorphism certificate.

    Shape mismatches (wrong k-set cover, wrong edge cover, wrong arity) raise;
    violated invariants return False.  For k = r-1 the injectivity consequence
    is asserted as well: any three edges pairwise intersecting in r-1 vertices
    with a common (r-2)-core must map to pairwise distinct target edges.
    """
    if g.r != f.r:
        raise InvalidParameterError(f"uniformity mismatch: {g.r} vs {f.r}")
    if k < 1 or k > g.r or witness.k != k:
        raise InvalidParameterError(f"witness is for k={witness.k}, expected {k}")
    expected_ksets = {
        s for e in g.edges for s in itertools.combinations(e, k)
    }
    got_ksets = {sm.source for sm in witness.shadow_map}
    if got_ksets != expected_ksets:
        raise InvalidParameterError("shadow_map does not cover the k-shadow exactly")
    if {em.source for em in witness.edge_map} != set(g.edges):
        raise InvalidParameterError("edge_map does not cover the edge set exactly")
    if any(len(sm.images) != k for sm in witness.shadow_map) or any(
        len(em.images) != g.r for em in witness.edge_map
    ):
        raise InvalidParameterError("image tuple of wrong arity")

    f_shadow_ksets = {
        s for e in f.edges for s in itertools.combinations(e, k)
    }
    by_kset = {sm.source: sm for sm in witness.shadow_map}
    for sm in witness.shadow_map:
        if len(set(sm.images)) != k or sm.target not in f_shadow_ksets:
            return False
    for em in witness.edge_map:
        if len(set(em.images)) != g.r or em.target not in f.edge_set:
            return False
        # Gluing: the edge bijection restricted to each k-subset must equal
        # the k-subset's own bijection.
        for positions in itertools.combinations(range(g.r), k):
            s = tuple(em.source[p] for p in positions)
            if by_kset[s].images != tuple(em.images[p] for p in positions):
                return False

    if k == g.r - 1:
        by_edge = {em.source: em.target for em in witness.edge_map}
        for e1, e2, e3 in itertools.combinations(g.edges, 3):
            s1, s2, s3 = set(e1), set(e2), set(e3)
            if (
                len(s1 & s2) == g.r - 1
                and len(s1 & s3) == g.r - 1
                and len(s2 & s3) == g.r - 1
                and len(s1 & s2 & s3) == g.r - 2
            ):
                if (
                    by_edge[e1] == by_edge[e2]
                    or by_edge[e1] == by_edge[e3]
                    or by_edge[e2] == by_edge[e3]
                ):
                    return False
    return True


def is_k_tightly_connected(g: Hypergraph, k: int) -> Optional[TightOrder]:
    """Greedy witness order, or None if the edge-intersection graph is disconnected.

    A hypergraph with no edges is defined not tightly connected; a single edge
    is (the ordering condition is vacuous).
    """
    if k < 1 or k > g.r:
        raise InvalidParameterError(f"connectivity order must be in 1..{g.r}, got {k}")
    if not g.edges:
        return None
    edges = list(g.edges)
    used = [False] * len(edges)
    used[0] = True
    order = [edges[0]]
    sets = [set(e) for e in edges]
    for _ in range(len(edges) - 1):
        found = -1
        for i, e in enumerate(edges):
            if used[i]:
                continue
            if any(
                len(sets[i] & sets[j]) >= k for j, u in enumerate(used) if u
            ):
                found = i
                break
        if found < 0:
            return None
        used[found] = True
        order.append(edges[found])
    return TightOrder(tuple(order))


def is_sub_iterated_blowup(
    g: Hypergraph, f: Hypergraph, max_steps: int
) -> Optional[BlowupCertificate]:
    """Bounded-depth exact membership of g in the blowup closure of f.

    Breadth-first over iterates reachable from f by at most max_steps blowups,
    deduplicating isomorphic iterates by canonical form while they are small
    enough.  A returned certificate is always correct; None only means "not
    within max_steps".
    """
    if g.r != f.r:
        raise InvalidParameterError(f"uniformity mismatch: {g.r} vs {f.r}")
    if max_steps < 0:
        raise InvalidParameterError(f"max_steps must be >= 0, got {max_steps}")
    seen = set()
    frontier: list[tuple[Hypergraph, tuple[int, ...]]] = [(f, ())]
    for depth in range(max_steps + 1):
        for iterate, steps in frontier:
            emb = contains_copy(iterate, g)
            if emb is not None:
                return BlowupCertificate(steps=steps, embedding=emb)
        if depth == max_steps:
            break
        next_frontier = []
        for iterate, steps in frontier:
            for v in range(iterate.n):
                child = blowup_F(iterate, v, f)
                if child.n <= CANONICAL_CAP:
                    key = (child.n, canonical_form(child))
                    if key in seen:
                        continue
                    seen.add(key)
                next_frontier.append((child, steps + (v,)))
        frontier = next_frontier
    return None
