"""Tests for the binary-cubics quivers, embeddings and classification checks."""

import random
from fractions import Fraction

import pytest

from binarycubics import cubics
from binarycubics import quiver as qv
from binarycubics import ratlinalg as rl


class TestBuilders:
    def test_paper_full_counts(self):
        bq = cubics.build("paper_full")
        assert len(bq.quiver.vertices) == 14
        assert len(bq.quiver.arrows) == 12
        assert len(bq.relations.relations) == 20
        assert set(bq.vertex_labels.values()) == {
            "S", "G-1", "G1", "G2", "G3", "G4", "Q0", "Q1", "Q2", "P", "D0", "D1", "D2", "E"}

    def test_big_component_counts(self):
        bq = cubics.build("big_component")
        assert len(bq.quiver.vertices) == 5
        assert len(bq.quiver.arrows) == 8
        assert bq.vertex_labels == {"1": "S", "2": "E", "3": "D0", "4": "Q0", "5": "P"}

    def test_separated_counts(self):
        bq = cubics.build("separated")
        assert len(bq.quiver.vertices) == 9
        assert len(bq.quiver.arrows) == 8
        assert len(bq.relations.relations) == 12

    def test_d4hat_counts(self):
        bq = cubics.build("d4hat")
        assert len(bq.quiver.vertices) == 5
        assert len(bq.quiver.arrows) == 4
        assert len(bq.relations.relations) == 0

    def test_instances_cached(self):
        assert cubics.build("d4hat") is cubics.build("d4hat")

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            cubics.build("mystery")

    def test_ext1_facts(self):
        pf = cubics.build("paper_full")
        assert pf.arrow_count("d1", "g1") == 1
        assert pf.arrow_count("e", "s") == 0
        assert pf.arrow_count("s", "p") == 1
        assert all(pf.arrow_count(v, v) == 0 for v in pf.quiver.vertices)

    def test_arrow_counts_fourier_symmetric(self):
        from binarycubics import catalog

        pf = cubics.build("paper_full")
        to_vertex = {s: v for v, s in pf.vertex_labels.items()}
        for x in pf.quiver.vertices:
            for y in pf.quiver.vertices:
                fx = to_vertex[catalog.fourier_partner(pf.vertex_labels[x])]
                fy = to_vertex[catalog.fourier_partner(pf.vertex_labels[y])]
                assert pf.arrow_count(x, y) == pf.arrow_count(fx, fy)


class TestSeparateNode:
    def test_simple_at_center_passes_through(self):
        bc = cubics.build("big_component")
        out = cubics.separate_node(bc.simple("5"))
        assert {v: d for v, d in out.dims.items() if d} == {"5": 1}

    def test_projective_one(self):
        bc = cubics.build("big_component")
        out = cubics.separate_node(bc.projective("1"))
        assert {v: d for v, d in out.dims.items() if d} == {"1": 1, "5": 1, "2'": 1}

    def test_total_dimension_preserved(self):
        rng = random.Random(3)
        for _ in range(6):
            V = cubics.random_big_component_rep(rng)
            assert cubics.separate_node(V).total_dim() == V.total_dim()

    def test_nonsimple_indecomposables_stay_indecomposable(self):
        rng = random.Random(17)
        checked = 0
        while checked < 20:
            V = cubics.random_big_component_rep(rng, max_outer=2, max_center=4)
            for W, certified in qv.decompose_certified(V, seed=checked):
                if not certified or W.total_dim() <= 1:
                    continue
                if all(d == 0 for v, d in W.dims.items() if v != "5"):
                    continue  # simple at the node is not covered by the bijection
                out = cubics.separate_node(W)
                assert qv.is_indecomposable(out, seed=checked) == "yes"
                checked += 1

    def test_wrong_quiver_rejected(self):
        with pytest.raises(ValueError):
            cubics.separate_node(cubics.rn_family(1, 0))


class TestEmbeddings:
    def test_alpha_image_ranks(self):
        V = cubics.embed_alpha(cubics.rn_family(1, 0))
        for i in (1, 2, 3, 4):
            assert V.arrow_rank(f"alpha{i}") == 1
            assert V.arrow_rank(f"beta{i}") == 0

    def test_beta_image_of_center_simple(self):
        d4 = cubics.build("d4hat")
        bc = cubics.build("big_component")
        out = cubics.embed_beta(d4.simple("5"))
        assert qv.is_isomorphic(out, bc.simple("5"))

    def test_beta_preserves_indecomposability(self):
        R = cubics.rn_family(3, -2)
        assert qv.is_indecomposable(cubics.embed_beta(R)) == "yes"

    def test_beta_transposes(self):
        R = cubics.rn_family(1, Fraction(2, 5))
        out = cubics.embed_beta(R)
        assert out.maps["beta4"] == [[Fraction(1), Fraction(2, 5)]]

    def test_separated_alpha_image_avoids_primed_copy(self):
        # alpha images have zero betas, so separation leaves primed vertices empty
        for lam in (0, 3):
            out = cubics.separate_node(cubics.embed_alpha(cubics.rn_family(2, lam)))
            assert all(out.dims[f"{i}'"] == 0 for i in (1, 2, 3, 4))
            assert out.total_dim() == 12

    def test_separated_beta_image_lands_in_primed_copy(self):
        # non-simple indecomposables have injective subspace maps, so the
        # unprimed outer quotients vanish for beta images
        out = cubics.separate_node(cubics.embed_beta(cubics.rn_family(2, 1)))
        assert all(out.dims[str(i)] == 0 for i in (1, 2, 3, 4))
        assert all(out.dims[f"{i}'"] == 2 for i in (1, 2, 3, 4))


class TestRnFamily:
    def test_displayed_matrices_for_n1(self):
        R = cubics.rn_family(1, 7)
        assert R.maps["alpha1"] == [[1], [0]]
        assert R.maps["alpha2"] == [[0], [1]]
        assert R.maps["alpha3"] == [[1], [1]]
        assert R.maps["alpha4"] == [[1], [7]]
        assert R.dim_vector() == (1, 1, 1, 1, 2)

    def test_jordan_block_shape(self):
        J = cubics.jordan_block(3, 5)
        assert J == rl.mat([[5, 1, 0], [0, 5, 1], [0, 0, 5]])

    def test_dimension_vector(self):
        assert cubics.rn_family(3, 0).dim_vector() == (3, 3, 3, 3, 6)

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            cubics.rn_family(0, 1)

    def test_indecomposable(self):
        assert qv.is_indecomposable(cubics.rn_family(2, 7)) == "yes"

    def test_parameters_separate_isomorphism_classes(self):
        assert not qv.is_isomorphic(cubics.rn_family(1, 0), cubics.rn_family(1, 1))
        assert qv.is_isomorphic(cubics.rn_family(2, 5), qv.conjugate(cubics.rn_family(2, 5), 1))


class TestInjectiveEnvelopeOfP:
    def test_dims_and_isomorphism(self):
        I_P = cubics.injective_envelope_of_P()
        assert {v: d for v, d in I_P.dims.items() if d} == {
            "p": 1, "s": 1, "d0": 1, "e": 1, "q0": 1}
        # the asserted isomorphism with injective(p) already ran inside


class TestClassificationChecks:
    def test_tame_sample_run_clean(self):
        report = cubics.check_tame_classification(samples=12, seed=1)
        assert report["violations"] == []
        assert report["summands"] > 0
        assert report["inconclusive_rate"] < 0.05

    def test_alpha_beta_images_recovered(self):
        # an oracle sample: conjugate of alpha(R_1(2)) + beta(R_1(3))
        V = qv.direct_sum(
            cubics.embed_alpha(cubics.rn_family(1, 2)),
            cubics.embed_beta(cubics.rn_family(1, 3)),
        )
        parts = qv.decompose(qv.conjugate(V, seed=2), seed=3)
        assert len(parts) == 2
        kinds = set()
        for p in parts:
            beta_zero = all(rl.is_zero(p.maps[f"beta{i}"]) for i in (1, 2, 3, 4))
            alpha_zero = all(rl.is_zero(p.maps[f"alpha{i}"]) for i in (1, 2, 3, 4))
            kinds.add("beta0" if beta_zero else "alpha0" if alpha_zero else "mixed")
        assert kinds == {"beta0", "alpha0"}

    def test_two_vertex_sample_run_clean(self):
        report = cubics.check_two_vertex_component(samples=15, seed=4)
        assert report["violations"] == []
        total = (report["simple_1"] + report["simple_2"]
                 + report["arrow_a"] + report["arrow_b"])
        assert total == report["summands"]
