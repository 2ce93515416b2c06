"""Subgraph embedding search, exact embedding counts, and a minimal canonical form.

All searches are deterministic: pattern vertices are processed in a fixed
connectivity-guided order and host candidates are tried in increasing id, so
the witness returned is the first one of a fixed left-to-right search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .errors import CapacityError, InvalidParameterError
from .hypergraph import Hypergraph

CANONICAL_CAP = 12


@dataclass(frozen=True)
class Embedding:
    """An injective edge-preserving vertex map; images[i] hosts pattern vertex i."""

    images: tuple[int, ...]

    def apply(self, v: int) -> int:
        return self.images[v]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.images))


class EmbeddingCount(NamedTuple):
    embeddings: int
    copies: int


def is_embedding(pattern: Hypergraph, host: Hypergraph, emb: Embedding) -> bool:
    """Re-check an embedding independently of how it was found."""
    img = emb.images
    if len(img) != pattern.n:
        return False
    if len(set(img)) != len(img):
        return False
    if any(u < 0 or u >= host.n for u in img):
        return False
    return all(
        tuple(sorted(img[v] for v in e)) in host.edge_set for e in pattern.edges
    )


def _pattern_order(pattern: Hypergraph) -> list[int]:
    # Constraint-first order: prefer the vertex that completes the most
    # pattern edges against those already placed, then the one sharing edges
    # with the most placed vertices, then high degree, then small id.  Edge
    # checks then fire as early as possible during the search.
    adj: list[set[int]] = [set() for _ in range(pattern.n)]
    for e in pattern.edges:
        for u in e:
            adj[u].update(w for w in e if w != u)
    deg = pattern.degrees
    order: list[int] = []
    placed = [False] * pattern.n
    for _ in range(pattern.n):
        best, best_key = -1, None
        for v in range(pattern.n):
            if placed[v]:
                continue
            completes = sum(
                1
                for e in pattern.edges
                if v in e and all(placed[u] or u == v for u in e)
            )
            link = sum(1 for u in adj[v] if placed[u])
            key = (completes, link, deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed[best] = True
    return order


def _iter_images(pattern: Hypergraph, host: Hypergraph) -> Iterator[tuple[int, ...]]:
    if pattern.n > host.n or len(pattern.edges) > len(host.edges):
        return
    order = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    # Edges become checkable at the depth where their last vertex is placed.
    checks: list[list[tuple[int, ...]]] = [[] for _ in range(pattern.n + 1)]
    for e in pattern.edges:
        checks[max(pos[v] for v in e)].append(e)
    pdeg, hdeg = pattern.degrees, host.degrees
    edge_set = host.edge_set
    images = [-1] * pattern.n
    used = [False] * host.n

    def rec(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == pattern.n:
            yield tuple(images)
            return
        p = order[depth]
        need = pdeg[p]
        for cand in range(host.n):
            if used[cand] or hdeg[cand] < need:
                continue
            images[p] = cand
            used[cand] = True
            if all(
                tuple(sorted(images[v] for v in e)) in edge_set
                for e in checks[depth]
            ):
                yield from rec(depth + 1)
            used[cand] = False
        images[p] = -1

    yield from rec(0)


def iter_embeddings(pattern: Hypergraph, host: Hypergraph) -> Iterator[Embedding]:
    """All injective edge-preserving maps of pattern into host, in a fixed order."""
    if pattern.r != host.r:
        raise InvalidParameterError(
            f"uniformity mismatch: {pattern.r} vs {host.r}"
        )
    for img in _iter_images(pattern, host):
        yield Embedding(img)


def contains_copy(host: Hypergraph, pattern: Hypergraph) -> Optional[Embedding]:
    """First embedding of pattern into host, or None if host is pattern-free."""
    if host.r != pattern.r:
        raise InvalidParameterError(f"uniformity mismatch: {host.r} vs {pattern.r}")
    for img in _iter_images(pattern, host):
        return Embedding(img)
    return None


def count_embeddings(pattern: Hypergraph, host: Hypergraph) -> EmbeddingCount:
    """Exact count of embeddings, and of copies (embeddings / |Aut(pattern)|)."""
    if pattern.r != host.r:
        raise InvalidParameterError(f"uniformity mismatch: {pattern.r} vs {host.r}")
    total = sum(1 for _ in _iter_images(pattern, host))
    if total == 0:
        return EmbeddingCount(0, 0)
    aut = sum(1 for _ in _iter_images(pattern, pattern))
    assert total % aut == 0, "embedding count must be divisible by |Aut|"
    return EmbeddingCount(total, total // aut)


def _min_edge_list(
    h: Hypergraph, incumbent: Optional[tuple], stop_on_improve: bool
) -> tuple[Optional[tuple], bool]:
    """Branch-and-bound minimum of the sorted edge list over all relabelings.

    Assigns new labels 0..n-1 to original vertices one at a time.  A partial
    assignment determines the images of edges lying inside the labeled set;
    the optimistic completion (smallest conceivable remaining edges) gives an
    admissible bound, and branches that cannot strictly beat the incumbent
    are cut.  Returns (best, improved_over_initial_incumbent).
    """
    n, m = h.n, len(h.edges)
    if m == 0:
        return (), incumbent is not None and () < incumbent
    rsets = list(itertools.combinations(range(n), h.r))
    edges_at: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in h.edges:
        for v in e:
            edges_at[v].append(e)
    deg = h.degrees
    label: list[Optional[int]] = [None] * n
    state = {"best": incumbent, "improved": False}

    def optimistic(det: list[tuple[int, ...]], k: int) -> tuple:
        need = m - len(det)
        extras = []
        for s in rsets:
            if len(extras) == need:
                break
            if s[-1] >= k:
                extras.append(s)
        return tuple(sorted(det + extras))

    def rec(k: int, det: list[tuple[int, ...]]):
        if stop_on_improve and state["improved"]:
            return
        best = state["best"]
        if k == n:
            final = tuple(sorted(det))
            if best is None or final < best:
                state["best"] = final
                state["improved"] = True
            return
        if best is not None and optimistic(det, k) >= best:
            return
        cands = []
        for v in range(n):
            if label[v] is not None:
                continue
            newly = [
                e
                for e in edges_at[v]
                if all(u == v or label[u] is not None for u in e)
            ]
            cands.append((-len(newly), -deg[v], v, newly))
        cands.sort()
        for _, _, v, newly in cands:
            label[v] = k
            images = [tuple(sorted(label[u] for u in e)) for e in newly]
            rec(k + 1, det + images)
            label[v] = None
            if stop_on_improve and state["improved"]:
                return

    rec(0, [])
    return state["best"], state["improved"]


def canonical_form(h: Hypergraph, cap: int = CANONICAL_CAP) -> tuple[tuple[int, ...], ...]:
    """Lexicographically minimal edge list of h over all vertex relabelings.

    Two hypergraphs with the same r and n are isomorphic iff their canonical
    forms are equal.  Exact but exponential; refuses n above `cap`.
    """
    if h.n > cap:
        raise CapacityError(f"canonical form limited to n <= {cap}, got {h.n}")
    best, _ = _min_edge_list(h, None, stop_on_improve=False)
    return best


def is_canonical(h: Hypergraph, cap: int = CANONICAL_CAP) -> bool:
    """True iff h's own edge list is already its canonical form."""
    if h.n > cap:
        raise CapacityError(f"canonical form limited to n <= {cap}, got {h.n}")
    if not h.edges:
        return True
    _, improved = _min_edge_list(h, h.edges, stop_on_improve=True)
    return not improved


def is_isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    """Isomorphism test via bijective embedding search (no size cap)."""
    if a.r != b.r or a.n != b.n or len(a.edges) != len(b.edges):
        return False
    # With equal vertex and edge counts, any embedding is onto the edge set.
    return contains_copy(b, a) is not None
