"""Exact rational density exponents over the pair shadow.

For a hypergraph F with at least one edge, the two exponents maximize
(e' + offset) / (v' - 1) over all nonempty edge subsets F' of the 2-shadow of
F, where v' counts the vertices covered by F'.  alpha uses offset 1 and beta
offset 0; both arise as the polylogarithmic exponents governing how large a
pattern-free induced subset the corresponding constructions leave behind.

Any maximizer must contain every shadow edge among its covered vertices
(adding such an edge raises the numerator without changing the denominator),
so enumerating induced subgraphs over vertex subsets is exact.  The 2^e edge
subset sweep is kept as an independent brute-force oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError, InvalidParameterError
from .hypergraph import Hypergraph, shadow
from .isomorphism import canonical_form

VERTEX_ENUM_CAP = 16
SUBSET_ORACLE_CAP = 20


@dataclass(frozen=True)
class DensityReport:
    """The exact maximum plus the sub-2-graph achieving it.

    witness_vertices are the covered vertices (original labels of F) and
    witness_edges the shadow edges among them; value equals
    (len(witness_edges) + numerator_offset) / (len(witness_vertices) - 1).
    """

    value: Fraction
    witness_vertices: tuple[int, ...]
    witness_edges: tuple[tuple[int, int], ...]
    numerator_offset: int

    def recompute(self) -> Fraction:
        return Fraction(
            len(self.witness_edges) + self.numerator_offset,
            len(self.witness_vertices) - 1,
        )


def _witness_canon(vertices: tuple[int, ...], edges: tuple[tuple[int, int], ...]):
    relabel = {v: i for i, v in enumerate(vertices)}
    h = Hypergraph(2, len(vertices), tuple(tuple(relabel[v] for v in e) for e in edges))
    return canonical_form(h, cap=max(12, h.n))


def _densest(f: Hypergraph, offset: int) -> DensityReport:
    if not f.edges:
        raise InvalidParameterError("exponent undefined for an edgeless hypergraph")
    if f.r < 2:
        raise InvalidParameterError(f"uniformity must be >= 2, got {f.r}")
    sh = shadow(f, 2)
    pool = sorted({v for e in sh.edges for v in e})
    if len(pool) > VERTEX_ENUM_CAP:
        raise CapacityError(
            f"exact enumeration limited to {VERTEX_ENUM_CAP} covered vertices, "
            f"got {len(pool)}"
        )
    best_value: Fraction | None = None
    best_key = None
    best = None
    for size in range(2, len(pool) + 1):
        for subset in itertools.combinations(pool, size):
            inside = set(subset)
            edges = tuple(e for e in sh.edges if inside.issuperset(e))
            if not edges:
                continue
            covered = tuple(sorted({v for e in edges for v in e}))
            value = Fraction(len(edges) + offset, len(covered) - 1)
            if best_value is not None and value < best_value:
                continue
            key = (len(covered), _witness_canon(covered, edges), edges)
            if best_value is None or value > best_value or key < best_key:
                best_value, best_key, best = value, key, (covered, edges)
    covered, edges = best
    return DensityReport(
        value=best_value,
        witness_vertices=covered,
        witness_edges=edges,
        numerator_offset=offset,
    )


def alpha(f: Hypergraph) -> DensityReport:
    """max (e' + 1)/(v' - 1) over nonempty sub-2-graphs of the 2-shadow of f."""
    return _densest(f, 1)


def beta(f: Hypergraph) -> DensityReport:
    """max e'/(v' - 1) over nonempty sub-2-graphs of the 2-shadow of f."""
    return _densest(f, 0)


def check_concluding_condition(f: Hypergraph) -> bool:
    """True iff the full 2-shadow itself attains the offset-0 maximum,
    i.e. beta(f) equals e(shadow) / (v(f) - 1)."""
    if not f.edges:
        raise InvalidParameterError("condition undefined for an edgeless hypergraph")
    sh = shadow(f, 2)
    return beta(f).value == Fraction(len(sh.edges), f.n - 1)


def max_density_bruteforce(f: Hypergraph, offset: int) -> Fraction:
    """Oracle: sweep all 2^e nonempty edge subsets of the 2-shadow."""
    if not f.edges:
        raise InvalidParameterError("exponent undefined for an edgeless hypergraph")
    sh = shadow(f, 2)
    edges = sh.edges
    if len(edges) > SUBSET_ORACLE_CAP:
        raise CapacityError(
            f"subset oracle limited to {SUBSET_ORACLE_CAP} shadow edges, got {len(edges)}"
        )
    best = None
    for mask in range(1, 1 << len(edges)):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        covered = {v for e in chosen for v in e}
        value = Fraction(len(chosen) + offset, len(covered) - 1)
        if best is None or value > best:
            best = value
    return best
