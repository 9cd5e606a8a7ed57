"""Catalog tests: pairings, characters of the 14 simples, composition
series, local cohomology tables, and the self-verification report."""

import pytest

from binarycubics import catalog, characters as ch


class TestPairings:
    def test_exactly_fourteen_simples(self):
        assert len(catalog.SIMPLES) == 14
        assert len(set(catalog.SIMPLES)) == 14

    def test_support_partition(self):
        by_orbit = {}
        for name in catalog.SIMPLES:
            by_orbit.setdefault(catalog.SUPPORT[name], []).append(name)
        assert len(by_orbit["O4"]) == 9
        assert by_orbit["O3"] == ["P"]
        assert sorted(by_orbit["O2"]) == ["D0", "D1", "D2"]
        assert by_orbit["O0"] == ["E"]

    def test_orbit_local_system_counts(self):
        counts = {o.name: o.local_systems for o in catalog.ORBITS}
        assert counts == {"O0": 1, "O2": 3, "O3": 1, "O4": 9}
        assert sum(counts.values()) == 14
        assert {o.name: o.dim for o in catalog.ORBITS} == {"O0": 0, "O2": 2, "O3": 3, "O4": 4}

    def test_fourier_pairing(self):
        assert catalog.fourier_partner("S") == "E"
        assert catalog.fourier_partner("P") == "P"
        assert catalog.fourier_partner("G3") == "G3"
        assert catalog.fourier_partner("D0") == "Q0"
        for x in catalog.SIMPLES:
            assert catalog.fourier_partner(catalog.fourier_partner(x)) == x

    def test_duality_pairing(self):
        assert catalog.dual_partner("G3") == "G3"
        assert catalog.dual_partner("D1") == "D2"
        assert catalog.dual_partner("G1") == "G-1"
        for x in ("S", "Q0", "P", "D0", "E"):
            assert catalog.dual_partner(x) == x
        for x in catalog.SIMPLES:
            assert catalog.dual_partner(catalog.dual_partner(x)) == x

    def test_unknown_simple_rejected(self):
        with pytest.raises(KeyError):
            catalog.fourier_partner("X")
        with pytest.raises(KeyError):
            catalog.character_of("nope")

    def test_holonomic_ranks(self):
        assert sorted(catalog.HOLONOMIC_RANK.values()) == [1, 1, 1, 1, 1, 1, 2, 2, 2]


class TestCharacters:
    @pytest.mark.parametrize("name, lam, expected", [
        ("P", (3, -3), 1),
        ("P", (-6, -9), 0),
        ("G3", (3, 3), 1),          # shift of <[Sdelta], e^(0,0)> = 1
        ("Q1", (0, -2), 1),
        ("D1", (-5, -5), 1),
        ("E", (-6, -9), 1),
        ("S", (3, 0), 1),
        ("Q0", (0, -3), 0),
        ("Sdelta", (3, -3), 1),
        ("Q0delta", (-2, -4), 1),
        ("F1", (1, 1), 1),
        ("F1", (-5, -5), 1),
        ("SdeltaModS", (-6, -6), 1),
    ])
    def test_frozen_multiplicities(self, name, lam, expected):
        assert catalog.character_of(name).mult(lam) == expected

    def test_character_instances_shared(self):
        assert catalog.character_of("S") is catalog.character_of("S")

    def test_composition_series_on_box(self):
        for fact in catalog.COMPOSITION_SERIES:
            ambient = catalog.character_of(fact.ambient)
            total = ch.zero_character()
            for name in fact.factors:
                total = total + catalog.character_of(name)
            assert ch.first_disagreement(ambient, total, -15, 15) is None, fact.ambient

    def test_fourier_coherence_small_box(self):
        for check in catalog.fourier_coherence(-12, 12):
            assert check["status"] == "pass", check

    def test_p_nonnegative(self):
        p = catalog.character_of("P")
        assert all(p.mult(lam) >= 0 for lam in ch.box_weights(-15, 15))


class TestLocalCohomology:
    @pytest.mark.parametrize("name, support, k, expected", [
        ("S", "O2bar", 2, ("D0",)),
        ("P", "O2bar", 1, ("D0", "E")),
        ("Q0", "O3bar", 1, ("D0", "P")),
        ("S", "O3bar", 1, ("E", "P")),
        ("D0", "O0", 2, ("E",)),
        ("G1", "O2bar", 1, ("D1",)),
    ])
    def test_table_entries(self, name, support, k, expected):
        assert tuple(sorted(catalog.local_cohomology(name, support, k))) == expected

    def test_full_support_modules_have_no_local_cohomology(self):
        for name in ("G2", "G3", "G4", "Q1", "Q2"):
            for support in catalog.SUPPORT_CLOSURES:
                for k in range(7):
                    assert catalog.local_cohomology(name, support, k) == ()

    def test_degree_zero_rule_for_large_supports(self):
        assert catalog.local_cohomology("E", "O0", 0) == ("E",)
        assert catalog.local_cohomology("E", "O2bar", 0) == ("E",)
        assert catalog.local_cohomology("D1", "O2bar", 0) == ("D1",)
        assert catalog.local_cohomology("D1", "O2bar", 1) == ()
        assert catalog.local_cohomology("P", "O3bar", 0) == ("P",)

    def test_extension_flags(self):
        assert catalog.local_cohomology_is_extension("S", "O3bar", 1)
        assert catalog.local_cohomology_is_extension("Q0", "O3bar", 1)
        assert not catalog.local_cohomology_is_extension("P", "O2bar", 1)

    def test_unknown_names_rejected(self):
        with pytest.raises(KeyError):
            catalog.local_cohomology("S", "O1bar", 1)
        with pytest.raises(KeyError):
            catalog.local_cohomology("Sx", "O0", 1)


class TestVerifyIdentities:
    def test_all_pass_on_box(self):
        for check in catalog.verify_identities(-12, 12):
            assert check["status"] == "pass", check

    def test_empty_box_is_vacuous(self):
        for check in catalog.verify_identities(5, 4):
            assert "fail" not in check["status"] or check["status"] == "pass"

    def test_perturbed_p_is_caught_at_origin(self):
        broken = catalog.character_of("P") + ch.from_table({(0, 0): 1})
        checks = catalog.verify_identities(-8, 8, overrides={"P": broken})
        failures = [c for c in checks if c["status"] == "fail"]
        assert failures
        assert any(c.get("witness") == "(0, 0)" for c in failures)
