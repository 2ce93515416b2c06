"""Homomorphism and shadow-homomorphism deciders, tight connectivity, and
bounded iterated-blowup membership, cross-checked against sweep oracles."""

import random

import pytest

from erdosrogers import (
    Hypergraph,
    InvalidParameterError,
    SetMap,
    ShadowHomWitness,
    build_complete,
    build_h,
    find_homomorphism,
    find_shadow_homomorphism,
    is_embedding,
    is_k_tightly_connected,
    is_sub_iterated_blowup,
    iterated_blowup,
    verify_shadow_hom,
)
from conftest import (
    oracle_has_hom,
    oracle_has_shadow_hom,
    random_hypergraph,
)


class TestFindHomomorphism:
    def test_identity(self, h32):
        w = find_homomorphism(h32, h32)
        assert w is not None
        for e in h32.edges:
            assert tuple(sorted(w.images[v] for v in e)) in h32.edge_set

    def test_k34_to_k33_absent(self, k34, k33):
        assert find_homomorphism(k34, k33) is None
        assert not oracle_has_hom(k34, k33)

    def test_open_tight_cycle_not_homomorphic(self, tc5_gap, k33):
        assert find_homomorphism(tc5_gap, k33) is None

    def test_against_oracle(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_hypergraph(rng, 3, rng.randint(3, 5), p=0.4)
            f = random_hypergraph(rng, 3, rng.randint(3, 4), p=0.5)
            assert (find_homomorphism(g, f) is not None) == oracle_has_hom(g, f)

    def test_witness_is_valid(self):
        rng = random.Random(19)
        for _ in range(40):
            g = random_hypergraph(rng, 3, rng.randint(3, 5), p=0.35)
            f = random_hypergraph(rng, 3, rng.randint(3, 5), p=0.5)
            w = find_homomorphism(g, f)
            if w is None:
                continue
            assert len(w.images) == g.n
            for e in g.edges:
                img = sorted(w.images[v] for v in e)
                assert len(set(img)) == 3 and tuple(img) in f.edge_set


class TestFindShadowHomomorphism:
    def test_open_tight_cycle_yes_at_2(self, tc5_gap, k33):
        w = find_shadow_homomorphism(tc5_gap, k33, 2)
        assert w is not None
        assert verify_shadow_hom(tc5_gap, k33, 2, w)

    def test_open_tight_cycle_no_at_1(self, tc5_gap, k33):
        assert find_shadow_homomorphism(tc5_gap, k33, 1) is None

    def test_cliques_no(self, k34, k33):
        assert find_shadow_homomorphism(k34, k33, 2) is None

    def test_h_family_no(self, h33, h32):
        assert find_shadow_homomorphism(h33, h32, 2) is None

    def test_k1_matches_homomorphism(self):
        rng = random.Random(29)
        for _ in range(40):
            g = random_hypergraph(rng, 3, rng.randint(4, 6), p=0.35)
            f = random_hypergraph(rng, 3, rng.randint(4, 6), p=0.4)
            shallow = find_shadow_homomorphism(g, f, 1) is not None
            assert shallow == (find_homomorphism(g, f) is not None)

    def test_against_sweep_oracle(self):
        rng = random.Random(43)
        checked = 0
        while checked < 25:
            g = random_hypergraph(rng, 3, 4, p=0.4)
            f = random_hypergraph(rng, 3, 4, p=0.4)
            if len(g.edges) > 3 or not (1 <= len(f.edges) <= 2):
                continue
            for k in (1, 2):
                got = find_shadow_homomorphism(g, f, k) is not None
                assert got == oracle_has_shadow_hom(g, f, k)
            checked += 1

    def test_monotone_in_k(self):
        rng = random.Random(47)
        for _ in range(60):
            g = random_hypergraph(rng, 3, rng.randint(4, 6), p=0.35)
            f = random_hypergraph(rng, 3, rng.randint(4, 6), p=0.4)
            if find_shadow_homomorphism(g, f, 1) is not None:
                assert find_shadow_homomorphism(g, f, 2) is not None

    def test_edgeless_source_trivially_yes(self, k33):
        empty = Hypergraph(3, 4, ())
        w = find_shadow_homomorphism(empty, k33, 2)
        assert w == ShadowHomWitness(k=2, shadow_map=(), edge_map=())

    def test_bad_k(self, k33):
        with pytest.raises(InvalidParameterError):
            find_shadow_homomorphism(k33, k33, 0)
        with pytest.raises(InvalidParameterError):
            find_shadow_homomorphism(k33, k33, 4)


class TestVerifyShadowHom:
    def _witness(self, g, f, k):
        w = find_shadow_homomorphism(g, f, k)
        assert w is not None
        return w

    def test_accepts_solver_output(self, tc5_gap, k33):
        w = self._witness(tc5_gap, k33, 2)
        assert verify_shadow_hom(tc5_gap, k33, 2, w)

    def test_rejects_swapped_kset_images(self, tc5_gap, k33):
        w = self._witness(tc5_gap, k33, 2)
        sm = w.shadow_map[0]
        corrupted = SetMap(source=sm.source, images=(sm.images[1], sm.images[0]))
        mutated = ShadowHomWitness(
            k=2, shadow_map=(corrupted,) + w.shadow_map[1:], edge_map=w.edge_map
        )
        assert not verify_shadow_hom(tc5_gap, k33, 2, mutated)

    def test_rejects_swapped_edge_images(self, tc5_gap, k33):
        w = self._witness(tc5_gap, k33, 2)
        em = w.edge_map[0]
        corrupted = SetMap(
            source=em.source, images=(em.images[1], em.images[0], em.images[2])
        )
        mutated = ShadowHomWitness(
            k=2, shadow_map=w.shadow_map, edge_map=(corrupted,) + w.edge_map[1:]
        )
        assert not verify_shadow_hom(tc5_gap, k33, 2, mutated)

    def test_shape_mismatch_raises(self, tc5_gap, k33):
        w = self._witness(tc5_gap, k33, 2)
        with pytest.raises(InvalidParameterError):
            verify_shadow_hom(tc5_gap, k33, 1, w)
        truncated = ShadowHomWitness(
            k=2, shadow_map=w.shadow_map[1:], edge_map=w.edge_map
        )
        with pytest.raises(InvalidParameterError):
            verify_shadow_hom(tc5_gap, k33, 2, truncated)

    def test_injectivity_consequence_on_built_witness(self):
        # Hand-build edge maps sending two edges of a tight triple to the same
        # target; the k = r-1 cross-check must refuse it even though each map
        # is a bijection onto an edge.
        g = build_h(3, 3)
        f = build_complete(3, 4)
        assignment = {
            (0, 1, 2): (0, 1, 2),
            (0, 1, 3): (0, 1, 2),
            (0, 2, 3): (0, 2, 3),
        }
        edge_map = tuple(SetMap(source=e, images=assignment[e]) for e in g.edges)
        shadow_entries = {}
        for em in edge_map:
            for i in range(3):
                for j in range(i + 1, 3):
                    s = (em.source[i], em.source[j])
                    shadow_entries.setdefault(s, (em.images[i], em.images[j]))
        shadow_map = tuple(
            SetMap(source=s, images=shadow_entries[s]) for s in sorted(shadow_entries)
        )
        w = ShadowHomWitness(k=2, shadow_map=shadow_map, edge_map=edge_map)
        assert not verify_shadow_hom(g, f, 2, w)


class TestTightConnectivity:
    def test_single_edge(self, k33):
        order = is_k_tightly_connected(k33, 2)
        assert order is not None and order.order == ((0, 1, 2),)

    def test_disjoint_edges(self):
        g = Hypergraph(3, 6, ((0, 1, 2), (3, 4, 5)))
        assert is_k_tightly_connected(g, 1) is None

    def test_open_tight_cycle(self, tc5_gap):
        order = is_k_tightly_connected(tc5_gap, 2)
        assert order is not None
        seen = [set(order.order[0])]
        for e in order.order[1:]:
            assert any(len(set(e) & prev) >= 2 for prev in seen)
            seen.append(set(e))

    def test_edgeless(self):
        assert is_k_tightly_connected(Hypergraph(3, 4, ()), 1) is None

    def test_orders_valid_on_random_inputs(self):
        rng = random.Random(53)
        for _ in range(40):
            g = random_hypergraph(rng, 3, 6, p=0.3)
            for k in (1, 2, 3):
                order = is_k_tightly_connected(g, k)
                if order is None:
                    continue
                assert sorted(order.order) == list(g.edges)
                seen = [set(order.order[0])]
                for e in order.order[1:]:
                    assert any(len(set(e) & prev) >= k for prev in seen)
                    seen.append(set(e))


class TestIteratedBlowupMembership:
    def test_self_at_depth_zero(self):
        rng = random.Random(59)
        for _ in range(10):
            f = random_hypergraph(rng, 3, rng.randint(3, 5), p=0.4, ensure_edge=True)
            cert = is_sub_iterated_blowup(f, f, 0)
            assert cert is not None and cert.steps == ()

    def test_graph_case_always_member(self):
        k4 = build_complete(2, 4)
        k2 = build_complete(2, 2)
        cert = is_sub_iterated_blowup(k4, k2, 4)
        assert cert is not None
        replayed = iterated_blowup(k2, cert.steps)
        assert is_embedding(k4, replayed, cert.embedding)

    def test_k34_not_member_of_k33_closure(self, k34, k33):
        assert is_sub_iterated_blowup(k34, k33, 3) is None

    def test_certificates_replay(self, k33):
        probe = iterated_blowup(k33, [0, 1])
        cert = is_sub_iterated_blowup(probe, k33, 2)
        assert cert is not None
        replayed = iterated_blowup(k33, cert.steps)
        assert is_embedding(probe, replayed, cert.embedding)

    def test_consistent_with_tight_non_homomorphic(self, k33):
        # 2-tightly-connected and not homomorphic implies not a subgraph of
        # any iterate; spot-check at small depth.
        rng = random.Random(61)
        tested = 0
        while tested < 6:
            g = random_hypergraph(rng, 3, rng.randint(4, 5), p=0.4, ensure_edge=True)
            if is_k_tightly_connected(g, 2) is None:
                continue
            if find_homomorphism(g, k33) is not None:
                continue
            assert is_sub_iterated_blowup(g, k33, 2) is None
            tested += 1


def test_membership_found_certificates_always_embed(k33):
    rng = random.Random(67)
    for _ in range(8):
        g = random_hypergraph(rng, 3, 5, p=0.25, ensure_edge=True)
        cert = is_sub_iterated_blowup(g, k33, 2)
        if cert is None:
            continue
        assert is_embedding(g, iterated_blowup(k33, cert.steps), cert.embedding)
