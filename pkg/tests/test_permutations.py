import itertools

import pytest
from hypothesis import given, strategies as st

from invmotz.permutations import (
    as_involution,
    avoids_all,
    complement,
    connected_components,
    contains_pattern,
    deficiencies,
    excedances,
    fixed_points,
    format_permutation,
    identity,
    inverse,
    involutions,
    is_connected,
    is_involution,
    parse_permutation,
    pattern_witness,
    reverse,
    reverse_complement,
    validate_permutation,
)

FIG1 = (4, 7, 5, 1, 3, 6, 2, 9, 8)
FIG2 = (4, 2, 9, 1, 10, 11, 7, 12, 3, 5, 6, 8)


class TestValidate:
    def test_accepts_valid(self):
        assert validate_permutation([2, 4, 5, 3, 1, 7, 6]) == (2, 4, 5, 3, 1, 7, 6)

    def test_empty_is_legal(self):
        assert validate_permutation([]) == ()

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError, match="duplicate value 1"):
            validate_permutation([1, 1, 2])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            validate_permutation([1, 5, 2])

    def test_rejects_zero(self):
        with pytest.raises(ValueError, match="outside"):
            validate_permutation([0, 1])

    def test_parse_round_trip(self):
        assert parse_permutation("4 7 5 1 3 6 2 9 8") == FIG1
        assert parse_permutation("") == ()
        assert format_permutation(FIG1) == "4 7 5 1 3 6 2 9 8"

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError, match="bad token"):
            parse_permutation("1 x 2")


class TestInvolution:
    def test_accepts_involution(self):
        assert as_involution(FIG1) == FIG1

    def test_identity_is_involution(self):
        for n in range(6):
            assert as_involution(identity(n)) == identity(n)

    def test_rejects_three_cycle_with_witness(self):
        with pytest.raises(ValueError, match=r"not an involution at i=1"):
            as_involution([2, 3, 1])

    def test_statistics(self):
        assert excedances(FIG1) == (1, 2, 3, 8)
        assert deficiencies(FIG1) == (4, 5, 7, 9)
        assert fixed_points(FIG1) == (6,)
        assert excedances(identity(5)) == ()
        assert excedances((2, 1)) == (1,)

    def test_cycle_structure_counts(self):
        # |exc| = |def| and 2|exc| + |fix| = n for every involution
        for n in range(9):
            for tau in involutions(n):
                e, d, f = excedances(tau), deficiencies(tau), fixed_points(tau)
                assert len(e) == len(d)
                assert 2 * len(e) + len(f) == n


class TestSymmetries:
    def test_reverse_complement_of_fig1(self):
        rc = reverse_complement(FIG1)
        assert rc == (2, 1, 8, 4, 7, 9, 5, 3, 6)
        assert is_involution(rc)

    def test_reverse_complement_fixes_identity(self):
        for n in range(7):
            assert reverse_complement(identity(n)) == identity(n)

    def test_inverse(self):
        assert inverse((2, 3, 1)) == (3, 1, 2)

    def test_reverse_and_complement_compose(self):
        p = (3, 1, 4, 2)
        assert reverse_complement(p) == complement(reverse(p)) == reverse(complement(p))

    def test_closure_on_involutions(self):
        for n in range(7):
            for tau in involutions(n):
                assert is_involution(reverse_complement(tau))
                assert inverse(tau) == tau

    @given(st.permutations(list(range(1, 13))))
    def test_symmetries_are_involutive_maps(self, values):
        p = validate_permutation(values)
        assert reverse(reverse(p)) == p
        assert complement(complement(p)) == p
        assert reverse_complement(reverse_complement(p)) == p
        assert inverse(inverse(p)) == p


class TestPatterns:
    def test_contains_4321(self):
        assert contains_pattern((2, 7, 6, 1, 3, 5, 4), (4, 3, 2, 1))

    def test_fig2_avoids_4321(self):
        assert not contains_pattern(FIG2, (4, 3, 2, 1))

    def test_contains_321(self):
        assert contains_pattern((3, 5, 1, 4, 2, 6, 8, 7), (3, 2, 1))

    def test_avoids_all(self):
        assert avoids_all((12, 2, 4, 3, 11, 10, 7, 9, 8, 6, 5, 1), [(3, 4, 1, 2)])
        assert avoids_all((3, 1, 2), [])
        assert avoids_all((1, 4, 3, 2, 6, 5, 7, 10, 9, 8), [(3, 1, 2)])

    def test_short_permutation_avoids_long_pattern(self):
        assert not contains_pattern((2, 1), (1, 2, 3))

    def test_empty_pattern_always_contained(self):
        assert contains_pattern((), ())
        assert contains_pattern((2, 1), ())

    def test_witness_is_lexicographically_first(self):
        assert pattern_witness((2, 7, 6, 1, 3, 5, 4), (4, 3, 2, 1)) == (2, 3, 6, 7)
        assert pattern_witness((1, 2, 3), (2, 1)) is None
        w = pattern_witness((3, 5, 1, 4, 2, 6, 8, 7), (3, 2, 1))
        assert w == (2, 4, 5)

    def test_matches_naive_oracle_small(self):
        # independent oracle: try every index subset of size k
        def naive(perm, pattern):
            k = len(pattern)
            if k > len(perm):
                return False
            for idx in itertools.combinations(range(len(perm)), k):
                vals = [perm[i] for i in idx]
                if all(
                    (vals[a] < vals[b]) == (pattern[a] < pattern[b])
                    for a in range(k)
                    for b in range(a + 1, k)
                ):
                    return True
            return False

        patterns = [tuple(p) for p in itertools.permutations((1, 2, 3))]
        patterns += [tuple(p) for p in itertools.permutations((1, 2, 3, 4))]
        for n in range(7):
            for perm in itertools.permutations(range(1, n + 1)):
                for pattern in patterns:
                    assert contains_pattern(perm, pattern) == naive(perm, pattern), (
                        perm,
                        pattern,
                    )

    def test_rc_and_inverse_preserve_containment(self):
        patterns = [tuple(p) for p in itertools.permutations((1, 2, 3))]
        patterns += [(4, 3, 2, 1), (3, 4, 1, 2), (2, 1, 4, 3), (1, 2, 3, 4)]
        for n in range(9):
            for tau in involutions(n):
                rc = reverse_complement(tau)
                for p in patterns:
                    assert contains_pattern(tau, p) == contains_pattern(rc, reverse_complement(p))
                    assert contains_pattern(tau, p) == contains_pattern(inverse(tau), inverse(p))


class TestComponents:
    def test_two_components(self):
        assert connected_components((2, 4, 5, 3, 1, 7, 6)) == [(2, 4, 5, 3, 1), (2, 1)]

    def test_connected(self):
        assert connected_components((2, 7, 6, 1, 3, 5, 4)) == [(2, 7, 6, 1, 3, 5, 4)]
        assert is_connected((2, 7, 6, 1, 3, 5, 4))

    def test_identity_splits_into_singletons(self):
        assert connected_components(identity(3)) == [(1,), (1,), (1,)]

    def test_empty(self):
        assert connected_components(()) == []

    def test_concatenation_recovers_and_components_connected(self):
        for n in range(8):
            for perm in itertools.permutations(range(1, n + 1)):
                comps = connected_components(perm)
                rebuilt = []
                offset = 0
                for comp in comps:
                    rebuilt.extend(v + offset for v in comp)
                    offset += len(comp)
                assert tuple(rebuilt) == perm
                for comp in comps:
                    assert is_connected(comp)


class TestGenerators:
    def test_small_listings(self):
        assert list(involutions(3)) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
        assert list(involutions(3, fixed_point_free=True)) == []
        assert list(involutions(2, centrosymmetric=True)) == [(1, 2), (2, 1)]
        assert list(involutions(4, fixed_point_free=True)) == [
            (2, 1, 4, 3),
            (3, 4, 1, 2),
            (4, 3, 2, 1),
        ]

    def test_lexicographic_and_duplicate_free(self):
        for n in range(9):
            for kwargs in ({}, {"fixed_point_free": True}, {"centrosymmetric": True}):
                items = list(involutions(n, **kwargs))
                assert items == sorted(set(items))

    def test_everything_yielded_is_a_member(self):
        for n in range(8):
            for tau in involutions(n, fixed_point_free=True):
                assert is_involution(tau)
                assert all(tau[i - 1] != i for i in range(1, n + 1))
            for tau in involutions(n, centrosymmetric=True):
                assert is_involution(tau)
                assert all(tau[i - 1] + tau[n - i] == n + 1 for i in range(1, n + 1))

    def test_restricted_generators_match_filtering(self):
        for n in range(9):
            everyone = list(involutions(n))
            fpf = [t for t in everyone if not fixed_points(t)]
            assert list(involutions(n, fixed_point_free=True)) == fpf
            centro = [
                t
                for t in everyone
                if all(t[i] + t[n - 1 - i] == n + 1 for i in range(n))
            ]
            assert list(involutions(n, centrosymmetric=True)) == centro
