"""Ground-truth oracles at tiny scale.

Exact maximum pattern-free induced subsets (branch-and-bound plus a 2^n
exhaustive twin used as its oracle), isomorph-free enumeration of probe-free
hypergraphs by orderly generation, and the exact two-pattern extremal value
obtained by minimizing over the enumeration.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .errors import CapacityError, InvalidParameterError
from .hypergraph import Hypergraph, induced
from .isomorphism import contains_copy, is_canonical

BRANCH_AND_BOUND_CAP = 24
BRUTEFORCE_CAP = 16
ENUMERATION_CAP = 35  # limit on C(n, r)


@dataclass(frozen=True)
class FFreeResult:
    size: int
    witness: tuple[int, ...]


class FExactResult(NamedTuple):
    value: int
    extremal: Hypergraph


def max_f_free_subset(
    h: Hypergraph, f: Hypergraph, packing_bound: bool = False
) -> FFreeResult:
    """Largest vertex subset of h whose induced subgraph contains no copy of f.

    Branch and bound over include/exclude decisions in vertex order; the
    witness is the lexicographically least among the maximum ones.  The
    optional packing bound subtracts a greedy count of vertex-disjoint copies
    of f from the naive bound; it prunes harder but costs extra searches.
    """
    if h.r != f.r:
        raise InvalidParameterError(f"uniformity mismatch: {h.r} vs {f.r}")
    if not f.edges:
        raise InvalidParameterError("pattern must have at least one edge")
    if h.n > BRANCH_AND_BOUND_CAP:
        raise CapacityError(
            f"exact search limited to n <= {BRANCH_AND_BOUND_CAP}, got {h.n}"
        )
    n = h.n
    best_size = -1
    best_witness: tuple[int, ...] = ()

    def bound(cur: list[int], i: int) -> int:
        ub = len(cur) + (n - i)
        if packing_bound:
            ub -= _greedy_disjoint_copies(h, f, cur + list(range(i, n)))
        return ub

    def rec(i: int, cur: list[int]):
        nonlocal best_size, best_witness
        if bound(cur, i) <= best_size:
            return
        if i == n:
            if len(cur) > best_size:
                best_size = len(cur)
                best_witness = tuple(cur)
            return
        cur.append(i)
        if contains_copy(induced(h, cur), f) is None:
            rec(i + 1, cur)
        cur.pop()
        rec(i + 1, cur)

    rec(0, [])
    return FFreeResult(size=best_size, witness=best_witness)


def _greedy_disjoint_copies(h: Hypergraph, f: Hypergraph, active: list[int]) -> int:
    remaining = sorted(active)
    count = 0
    while True:
        sub = induced(h, remaining)
        emb = contains_copy(sub, f)
        if emb is None:
            return count
        used = {remaining[i] for i in emb.images}
        remaining = [v for v in remaining if v not in used]
        count += 1


def max_f_free_bruteforce(h: Hypergraph, f: Hypergraph) -> int:
    """Oracle: exhaustive maximum over all vertex subsets, largest size first."""
    if h.r != f.r:
        raise InvalidParameterError(f"uniformity mismatch: {h.r} vs {f.r}")
    if not f.edges:
        raise InvalidParameterError("pattern must have at least one edge")
    if h.n > BRUTEFORCE_CAP:
        raise CapacityError(f"bruteforce limited to n <= {BRUTEFORCE_CAP}, got {h.n}")
    for size in range(h.n, -1, -1):
        for subset in itertools.combinations(range(h.n), size):
            if contains_copy(induced(h, subset), f) is None:
                return size
    return 0


def enumerate_g_free(n: int, r: int, g: Hypergraph) -> Iterator[Hypergraph]:
    """One representative per isomorphism class of g-free r-graphs on n vertices.

    Orderly generation: edges are added in lexicographic order and a state is
    kept only when its own edge list is canonical, so every class appears
    exactly once (prefixes of canonical lists are canonical).  Branches whose
    state already contains g are cut.  Deterministic yield order.
    """
    if g.r != r:
        raise InvalidParameterError(f"uniformity mismatch: {r} vs {g.r}")
    if n < 0:
        raise InvalidParameterError(f"vertex count must be >= 0, got {n}")
    if math.comb(n, r) > ENUMERATION_CAP:
        raise CapacityError(
            f"enumeration limited to C(n, r) <= {ENUMERATION_CAP}, got {math.comb(n, r)}"
        )
    all_rsets = list(itertools.combinations(range(n), r))
    empty = Hypergraph(r, n, ())
    if contains_copy(empty, g) is not None:
        return
    yield empty

    def rec(state: Hypergraph, last: int) -> Iterator[Hypergraph]:
        for idx in range(last + 1, len(all_rsets)):
            cand = Hypergraph(r, n, state.edges + (all_rsets[idx],))
            if contains_copy(cand, g) is not None:
                continue
            if not is_canonical(cand):
                continue
            yield cand
            yield from rec(cand, idx)

    yield from rec(empty, -1)


def f_exact(f: Hypergraph, g: Hypergraph, n: int) -> FExactResult:
    """min over enumerated g-free hosts H of max_f_free_subset(H, f), exactly.

    The reported extremal hypergraph is the first minimizer in enumeration
    order.  Values at n < v(f) come out as n since nothing can contain f.
    """
    if f.r != g.r:
        raise InvalidParameterError(f"uniformity mismatch: {f.r} vs {g.r}")
    if not f.edges:
        raise InvalidParameterError("pattern must have at least one edge")
    if not g.edges and g.n <= n:
        raise InvalidParameterError(
            "probe with no edges on <= n vertices leaves nothing to enumerate"
        )
    best: Optional[int] = None
    best_h: Optional[Hypergraph] = None
    for h in enumerate_g_free(n, f.r, g):
        res = max_f_free_subset(h, f)
        if best is None or res.size < best:
            best, best_h = res.size, h
    assert best is not None and best_h is not None  # empty host is always g-free here
    return FExactResult(value=best, extremal=best_h)
