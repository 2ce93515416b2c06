"""Executable randomized constructions with deterministic verifiers.

Two seed-reproducible constructions of pattern-rich, probe-free hypergraphs:

* :func:`construct_coloring` colors every vertex pair with one of ell colors
  and keeps an r-set as an edge iff it is monochromatic in some color t and
  the color's vertex map sends it injectively onto an edge of F.  The output
  provably contains no 2-tightly-connected G that is not homomorphic to F,
  for every seed.

* :func:`construct_shadow_labeling` gives every k-subset of the vertex set a
  target k-subset of an edge of F and a uniform bijection onto it; an r-set
  is an edge iff its k-subsets' bijections glue into one injection onto an
  edge of F.  The output provably contains no G that is not
  k-shadow-homomorphic to F, for every seed.

Both return a full certificate; both are pure functions of (inputs, seed).
The module also hosts the exhaustive G-freeness verifier, a Monte-Carlo
estimator of how often small vertex subsets contain F, and the
supersaturation steps (richest extension, blowup copy extraction).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import CapacityError, InvalidParameterError
from .hypergraph import Hypergraph, blowup_F, induced, shadow
from .isomorphism import Embedding, contains_copy, iter_embeddings
from .morphisms import SetMap
from .randomness import sample_sorted, shuffled, substream

EXHAUSTIVE_COVER_CAP = 10**6


@dataclass(frozen=True)
class ConstructionParams:
    """Tunable constants and the seed for the randomized constructions.

    c1 scales the color count ell = max(1, round(c1 * ln n)); c2 is the
    analogous scale for cover widths derived via :meth:`cover_width`.
    """

    c1: Fraction = Fraction(1)
    c2: Fraction = Fraction(1)
    seed: int = 0

    def __post_init__(self):
        if self.c1 <= 0 or self.c2 <= 0:
            raise InvalidParameterError("c1 and c2 must be positive")

    def num_colors(self, n: int) -> int:
        return max(1, round(float(self.c1) * math.log(n)))

    def cover_width(self, n: int, exponent: float) -> int:
        return max(1, round(float(self.c2) * math.log(n) ** float(exponent)))


@dataclass(frozen=True)
class PairColoring:
    """Certificate of the pair-coloring construction.

    beta[i] is the color of the i-th vertex pair in lexicographic order;
    gammas[t][v] is the F-vertex assigned to v under color t.
    """

    ell: int
    beta: tuple[int, ...]
    gammas: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.gammas[0])

    def pair_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        n = self.n
        return u * (n - 1) - u * (u - 1) // 2 + v - u - 1

    def color_of(self, u: int, v: int) -> int:
        return self.beta[self.pair_index(u, v)]


@dataclass(frozen=True)
class ShadowLabeling:
    """Certificate of the k-set labeling construction: one SetMap per k-subset
    of the vertex set, in lexicographic order."""

    k: int
    labels: tuple[SetMap, ...]

    @property
    def n(self) -> int:
        return self.labels[-1].source[-1] + 1


@dataclass(frozen=True)
class CoverEstimate:
    fraction: float
    half_width: float
    hits: int
    trials: int
    exhaustive: bool = False


@dataclass(frozen=True)
class RichExtension:
    """A copy of G minus one vertex plus every host vertex completing it.

    base maps the remaining vertices of G (in increasing original order,
    relabeled 0..v(G)-2) into the host; extenders lists each host vertex u
    such that adding v -> u yields a full embedding of G.
    """

    base: Embedding
    extenders: tuple[int, ...]


def construct_coloring(
    n: int, f: Hypergraph, params: ConstructionParams
) -> tuple[Hypergraph, PairColoring]:
    """Sample the pair-coloring construction on n vertices from params.seed."""
    if f.r < 3:
        raise InvalidParameterError(f"pattern uniformity must be >= 3, got {f.r}")
    if not f.edges:
        raise InvalidParameterError("pattern must have at least one edge")
    if n < f.n:
        raise InvalidParameterError(f"need n >= {f.n}, got {n}")
    ell = params.num_colors(n)
    pairs = list(itertools.combinations(range(n), 2))
    beta = tuple(
        substream(params.seed, "pair-color", i).randrange(ell)
        for i in range(len(pairs))
    )
    gammas = tuple(_sample_color_map(params.seed, t, n, f.n) for t in range(ell))
    cert = PairColoring(ell=ell, beta=beta, gammas=gammas)
    edges = []
    for x in itertools.combinations(range(n), f.r):
        color = cert.color_of(x[0], x[1])
        if any(
            cert.color_of(u, v) != color for u, v in itertools.combinations(x, 2)
        ):
            continue
        gamma = gammas[color]
        image = tuple(sorted(gamma[u] for u in x))
        if len(set(image)) == f.r and image in f.edge_set:
            edges.append(x)
    return Hypergraph(f.r, n, tuple(edges)), cert


def _sample_color_map(seed: int, t: int, n: int, target_size: int) -> tuple[int, ...]:
    rng = substream(seed, "color-map", t)
    return tuple(rng.randrange(target_size) for _ in range(n))


def construct_shadow_labeling(
    n: int, f: Hypergraph, k: int, params: ConstructionParams
) -> tuple[Hypergraph, ShadowLabeling]:
    """Sample the k-set labeling construction on n vertices from params.seed."""
    if k < 2 or k >= f.r:
        raise InvalidParameterError(f"need r > k >= 2, got k={k}, r={f.r}")
    if not f.edges:
        raise InvalidParameterError("pattern must have at least one edge")
    if n < f.n:
        raise InvalidParameterError(f"need n >= {f.n}, got {n}")
    targets = shadow(f, k).edges
    labels = []
    for i, s in enumerate(itertools.combinations(range(n), k)):
        target = targets[
            substream(params.seed, "kset-target", i).randrange(len(targets))
        ]
        images = tuple(shuffled(target, substream(params.seed, "kset-bijection", i)))
        labels.append(SetMap(source=s, images=images))
    cert = ShadowLabeling(k=k, labels=tuple(labels))
    by_kset = {sm.source: sm for sm in labels}
    edges = []
    for x in itertools.combinations(range(n), f.r):
        glued: dict[int, int] = {}
        ok = True
        for s in itertools.combinations(x, k):
            sm = by_kset[s]
            for v, img in zip(s, sm.images):
                if glued.setdefault(v, img) != img:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        image = tuple(sorted(glued[u] for u in x))
        if len(set(glued.values())) == f.r and image in f.edge_set:
            edges.append(x)
    return Hypergraph(f.r, n, tuple(edges)), cert


def verify_g_free(h: Hypergraph, g: Hypergraph) -> Optional[Embedding]:
    """Exhaustive search for a copy of g in h; None certifies g-freeness."""
    return contains_copy(h, g)


def estimate_f_cover(
    h: Hypergraph,
    f: Hypergraph,
    w: int,
    trials: int,
    seed: int,
    exhaustive: bool = False,
) -> CoverEstimate:
    """Fraction of w-subsets W for which the induced subgraph contains f.

    Sampling mode draws `trials` uniform subsets from per-trial substreams of
    the seed and reports a 95% normal-approximation half-width.  Exhaustive
    mode sweeps all C(n, w) subsets (allowed up to 10^6) and is exact.
    """
    if h.r != f.r:
        raise InvalidParameterError(f"uniformity mismatch: {h.r} vs {f.r}")
    if w > h.n or w < 0:
        raise InvalidParameterError(f"subset size must be in 0..{h.n}, got {w}")
    if exhaustive:
        total = math.comb(h.n, w)
        if total > EXHAUSTIVE_COVER_CAP:
            raise CapacityError(
                f"exhaustive mode limited to {EXHAUSTIVE_COVER_CAP} subsets, got {total}"
            )
        hits = sum(
            1
            for subset in itertools.combinations(range(h.n), w)
            if contains_copy(induced(h, subset), f) is not None
        )
        return CoverEstimate(
            fraction=hits / total, half_width=0.0, hits=hits, trials=total,
            exhaustive=True,
        )
    if trials < 1:
        raise InvalidParameterError(f"trials must be >= 1, got {trials}")
    hits = 0
    for t in range(trials):
        subset = sample_sorted(substream(seed, "cover-trial", t), h.n, w)
        if contains_copy(induced(h, subset), f) is not None:
            hits += 1
    p = hits / trials
    half = 1.96 * math.sqrt(p * (1.0 - p) / trials)
    return CoverEstimate(fraction=p, half_width=half, hits=hits, trials=trials)


def richest_extension(
    h: Hypergraph, g: Hypergraph, v: int, threshold: int
) -> Optional[RichExtension]:
    """The copy of g minus v with the most single-vertex completions in h.

    Enumerates embeddings of g with v deleted; for each, counts host vertices
    u whose addition as the image of v completes an embedding of g.  Returns
    the first maximizer (in search order) with all its extenders, provided
    the count reaches `threshold`.
    """
    if h.r != g.r:
        raise InvalidParameterError(f"uniformity mismatch: {h.r} vs {g.r}")
    if v < 0 or v >= g.n:
        raise InvalidParameterError(f"vertex {v} not in 0..{g.n - 1}")
    rest = [w for w in range(g.n) if w != v]
    rel = {w: i for i, w in enumerate(rest)}
    minor = induced(g, rest)
    v_edges = [e for e in g.edges if v in e]
    best_count = -1
    best: Optional[RichExtension] = None
    for emb in iter_embeddings(minor, h):
        taken = set(emb.images)
        extenders = []
        for u in range(h.n):
            if u in taken:
                continue
            if all(
                tuple(sorted(u if w == v else emb.images[rel[w]] for w in e))
                in h.edge_set
                for e in v_edges
            ):
                extenders.append(u)
        if len(extenders) > best_count:
            best_count = len(extenders)
            best = RichExtension(base=emb, extenders=tuple(extenders))
    if best is None or best_count < threshold:
        return None
    return best


def extract_blowup_copy(
    h: Hypergraph, f: Hypergraph, steps: list[int] | tuple[int, ...]
) -> Optional[Embedding]:
    """Locate a copy of the iterated blowup of f (along `steps`) inside h.

    Replays the supersaturation induction at desk scale: at every step vertex
    v, find the richest copy of the current target minus v, then look for a
    copy of f among its extenders; together they form a copy of the blown-up
    target.  Returns the embedding of the final iterate, or None at the first
    failing step.  With no steps this is just an f-copy search.
    """
    if h.r != f.r:
        raise InvalidParameterError(f"uniformity mismatch: {h.r} vs {f.r}")
    current = f
    result: Optional[Embedding] = None
    if not steps:
        return contains_copy(h, f)
    for v in steps:
        if v < 0 or v >= current.n:
            raise InvalidParameterError(
                f"step vertex {v} not in the current target 0..{current.n - 1}"
            )
        ext = richest_extension(h, current, v, threshold=f.n)
        if ext is None:
            return None
        sub = induced(h, ext.extenders)
        f_emb = contains_copy(sub, f)
        if f_emb is None:
            return None
        f_hosts = [ext.extenders[i] for i in f_emb.images]
        rest = [w for w in range(current.n) if w != v]
        images = [-1] * (current.n + f.n - 1)
        for idx, w in enumerate(rest):
            images[w] = ext.base.images[idx]
        images[v] = f_hosts[0]
        for i in range(1, f.n):
            images[current.n + i - 1] = f_hosts[i]
        current = blowup_F(current, v, f)
        result = Embedding(tuple(images))
    return result


def pair_coloring_to_json(cert: PairColoring) -> dict:
    return {
        "ell": cert.ell,
        "beta": list(cert.beta),
        "gammas": [list(g) for g in cert.gammas],
    }


def pair_coloring_from_json(obj: dict) -> PairColoring:
    return PairColoring(
        ell=int(obj["ell"]),
        beta=tuple(obj["beta"]),
        gammas=tuple(tuple(g) for g in obj["gammas"]),
    )


def shadow_labeling_to_json(cert: ShadowLabeling) -> dict:
    return {
        "k": cert.k,
        "labels": [
            {"S": list(sm.source), "f_S": list(sm.target), "g_S": list(sm.images)}
            for sm in cert.labels
        ],
    }


def shadow_labeling_from_json(obj: dict) -> ShadowLabeling:
    return ShadowLabeling(
        k=int(obj["k"]),
        labels=tuple(
            SetMap(source=tuple(entry["S"]), images=tuple(entry["g_S"]))
            for entry in obj["labels"]
        ),
    )
