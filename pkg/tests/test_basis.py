"""Configuration, sector, orbit and dihedral-class bookkeeping."""

import math

import pytest

from xxring.basis import (RING_CAP, config_label, dihedral_classes,
                          dihedral_representative, enumerate_sector,
                          orbit_representative, popcount, reflect, rotate,
                          translation_orbits, up_sites)


def bits_of(sites):
    return sum(1 << s for s in sites)


class TestSectorEnumeration:
    def test_small_sector_is_ascending_and_complete(self):
        basis = enumerate_sector(4, 2)
        assert basis.configs == (0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100)
        assert [basis.index_of(c) for c in basis.configs] == list(range(6))

    def test_sector_sizes_are_binomial(self):
        assert enumerate_sector(15, 7).dim == 6435
        assert enumerate_sector(3, 0).configs == (0,)
        for n in range(1, 9):
            for k in range(n + 1):
                assert enumerate_sector(n, k).dim == math.comb(n, k)

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            enumerate_sector(4, 5)
        with pytest.raises(ValueError):
            enumerate_sector(4, -1)
        with pytest.raises(ValueError):
            enumerate_sector(RING_CAP + 1, 1)
        with pytest.raises(ValueError):
            enumerate_sector(0, 0)

    def test_membership(self):
        basis = enumerate_sector(5, 2)
        assert 0b00011 in basis
        assert 0b00111 not in basis


class TestRotate:
    def test_definition(self):
        assert rotate(0b0011, 1, 4) == 0b0110
        assert rotate(0b0101, 2, 4) == 0b0101
        assert rotate(0b1001, 1, 4) == 0b0011

    def test_identity_shifts(self):
        for c in range(16):
            assert rotate(c, 0, 4) == c
            assert rotate(c, 4, 4) == c

    def test_bijection_and_popcount_on_sectors(self):
        for n in range(1, 9):
            for k in range(n + 1):
                basis = enumerate_sector(n, k)
                for t in range(n):
                    image = {rotate(c, t, n) for c in basis.configs}
                    assert image == set(basis.configs)
        assert all(popcount(rotate(c, 3, 8)) == popcount(c) for c in range(256))


class TestReflect:
    def test_definition(self):
        assert reflect(bits_of({0, 1, 2, 4}), 8) == bits_of({0, 4, 6, 7})

    def test_palindrome_fixed(self):
        assert reflect(bits_of({1, 7}), 8) == bits_of({1, 7})
        assert reflect(0, 6) == 0

    def test_involution(self):
        for n in (3, 5, 6, 8):
            for c in range(1 << n):
                assert reflect(reflect(c, n), n) == c

    def test_reflection_lands_in_expected_orbit(self):
        # reflection of {0,1,3,5} is a rotation of {0,1,4,6}: check by brute
        # enumeration of all eight rotations
        n = 8
        reflected = reflect(bits_of({0, 1, 3, 5}), n)
        rotations = {rotate(bits_of({0, 1, 4, 6}), t, n) for t in range(n)}
        assert reflected in rotations


class TestTranslationOrbits:
    def test_four_site_half_filling(self):
        orbits = translation_orbits(enumerate_sector(4, 2))
        assert sorted(o.period for o in orbits) == [2, 4]
        assert {o.representative for o in orbits} == {0b0011, 0b0101}

    def test_six_site_periods(self):
        orbits = translation_orbits(enumerate_sector(6, 3))
        assert sorted(o.period for o in orbits) == [2, 6, 6, 6]

    def test_fifteen_site_count(self):
        orbits = translation_orbits(enumerate_sector(15, 7))
        assert len(orbits) == 429
        assert all(o.period == 15 for o in orbits)

    def test_orbits_partition_every_sector(self):
        for n in range(1, 13):
            for k in range(n + 1):
                basis = enumerate_sector(n, k)
                orbits = translation_orbits(basis)
                assert sum(o.period for o in orbits) == basis.dim
                members = [c for o in orbits for c in o.members]
                assert sorted(members) == list(basis.configs)
                for o in orbits:
                    assert n % o.period == 0
                    assert o.representative == min(o.members)
                    assert o.members == tuple(rotate(o.representative, t, n)
                                              for t in range(o.period))

    @pytest.mark.parametrize("n", [3, 5, 7, 11, 13])
    def test_prime_rings_have_full_orbits(self, n):
        for k in range(1, n):
            assert all(o.period == n
                       for o in translation_orbits(enumerate_sector(n, k)))

    def test_representative_shift_inverts(self):
        for n in (4, 6, 7):
            for c in range(1 << n):
                rep, shift = orbit_representative(c, n)
                assert rotate(rep, shift, n) == c
                assert rep == min(rotate(c, t, n) for t in range(n))


class TestDihedralClasses:
    def test_eight_site_reflection_pair(self):
        basis = enumerate_sector(8, 4)
        classes = dihedral_classes(translation_orbits(basis), 8)
        by_rep = {}
        for cid, cls in enumerate(classes):
            for orb in cls.orbits:
                by_rep[orb.representative] = cid
        rep_124, _ = orbit_representative(bits_of({0, 1, 2, 4}), 8)
        rep_126, _ = orbit_representative(bits_of({0, 1, 2, 6}), 8)
        assert by_rep[rep_124] == by_rep[rep_126]

    def test_self_reflective_orbits_stay_alone(self):
        basis = enumerate_sector(8, 4)
        classes = dihedral_classes(translation_orbits(basis), 8)
        rep_125, _ = orbit_representative(bits_of({0, 1, 2, 5}), 8)
        (lone,) = [cls for cls in classes
                   if any(o.representative == rep_125 for o in cls.orbits)]
        assert len(lone.orbits) == 1

        classes6 = dihedral_classes(translation_orbits(enumerate_sector(6, 3)), 6)
        (alternating,) = [cls for cls in classes6
                          if any(o.representative == bits_of({0, 2, 4})
                                 for o in cls.orbits)]
        assert len(alternating.orbits) == 1

    def test_classes_partition_orbits(self):
        for n in range(2, 11):
            k = n // 2
            orbits = translation_orbits(enumerate_sector(n, k))
            classes = dihedral_classes(orbits, n)
            listed = [o.representative for cls in classes for o in cls.orbits]
            assert sorted(listed) == sorted(o.representative for o in orbits)
            assert all(1 <= len(cls.orbits) <= 2 for cls in classes)

    def test_reflection_closure_within_class(self):
        n = 8
        orbits = translation_orbits(enumerate_sector(n, 4))
        for cls in dihedral_classes(orbits, n):
            members = {c for o in cls.orbits for c in o.members}
            assert {reflect(c, n) for c in members} == members

    def test_canonical_is_symmetry_invariant(self):
        n = 7
        for c in enumerate_sector(n, 3).configs:
            canon = dihedral_representative(c, n)
            for t in range(n):
                assert dihedral_representative(rotate(c, t, n), n) == canon
                assert dihedral_representative(rotate(reflect(c, n), t, n), n) == canon


class TestLabels:
    def test_offset_patterns(self):
        assert config_label(bits_of({0, 2, 4}), 6) == "|j,j+2,j+4>"
        assert config_label(bits_of({1, 2}), 5) == "|j,j+1>"
        assert config_label(0, 4) == "|->"

    def test_up_sites(self):
        assert up_sites(0b10110, 5) == (1, 2, 4)
