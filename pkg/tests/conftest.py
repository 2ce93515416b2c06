"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the library's search code: embedding
counts sweep raw permutations, homomorphism existence sweeps all vertex maps,
canonical forms minimize over all relabelings, and shadow-homomorphism
existence sweeps per-edge assignment products.  Library results are checked
against these on instances small enough to enumerate.
"""

import itertools
import random

import pytest

from erdosrogers import Hypergraph, build_complete, build_h


@pytest.fixture
def k33():
    return build_complete(3, 3)


@pytest.fixture
def k34():
    return build_complete(3, 4)


@pytest.fixture
def h32():
    return build_h(3, 2)


@pytest.fixture
def h33():
    return build_h(3, 3)


def tight_c5_minus_edge() -> Hypergraph:
    # Tight 5-cycle with one edge removed: 2-shadow-homomorphic to the single
    # triple but not homomorphic to it.
    return Hypergraph(3, 5, ((0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4)))


@pytest.fixture
def tc5_gap():
    return tight_c5_minus_edge()


def random_hypergraph(
    rng: random.Random, r: int, n: int, p: float = 0.35, ensure_edge: bool = False
) -> Hypergraph:
    rsets = list(itertools.combinations(range(n), r))
    edges = [e for e in rsets if rng.random() < p]
    if ensure_edge and not edges:
        edges = [rsets[rng.randrange(len(rsets))]]
    return Hypergraph(r, n, tuple(edges))


def oracle_embedding_count(pattern: Hypergraph, host: Hypergraph) -> int:
    count = 0
    for perm in itertools.permutations(range(host.n), pattern.n):
        if all(
            tuple(sorted(perm[v] for v in e)) in host.edge_set
            for e in pattern.edges
        ):
            count += 1
    return count


def oracle_has_hom(g: Hypergraph, f: Hypergraph) -> bool:
    if g.n == 0:
        return True
    if f.n == 0:
        return False
    for assign in itertools.product(range(f.n), repeat=g.n):
        ok = True
        for e in g.edges:
            img = sorted(assign[v] for v in e)
            if len(set(img)) != g.r or tuple(img) not in f.edge_set:
                ok = False
                break
        if ok:
            return True
    return False


def oracle_canonical(h: Hypergraph) -> tuple:
    best = None
    for perm in itertools.permutations(range(h.n)):
        relabeled = tuple(
            sorted(tuple(sorted(perm[v] for v in e)) for e in h.edges)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def oracle_has_shadow_hom(g: Hypergraph, f: Hypergraph, k: int) -> bool:
    """Sweep all per-edge injections onto edges of f; feasible iff some
    combination agrees pointwise on every pairwise intersection of size >= k.
    Exponential; keep the instances tiny."""
    if not g.edges:
        return True
    if not f.edges:
        return False
    maps_per_edge = []
    for e in g.edges:
        cands = []
        for target in f.edges:
            for perm in itertools.permutations(target):
                cands.append(dict(zip(e, perm)))
        maps_per_edge.append(cands)
    pairs = [
        (i, j, set(g.edges[i]) & set(g.edges[j]))
        for i in range(len(g.edges))
        for j in range(i + 1, len(g.edges))
        if len(set(g.edges[i]) & set(g.edges[j])) >= k
    ]
    for combo in itertools.product(*maps_per_edge):
        if all(
            all(combo[i][v] == combo[j][v] for v in inter) for i, j, inter in pairs
        ):
            return True
    return False


def relabeled(h: Hypergraph, perm) -> Hypergraph:
    return Hypergraph(
        h.r, h.n, tuple(tuple(perm[v] for v in e) for e in h.edges)
    )
