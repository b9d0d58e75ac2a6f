import numpy as np
import pytest

from artin_homology.oracle.smith import (
    AbelianInvariants,
    cokernel_invariants,
    int_det,
    minor_gcd_factors,
    rank,
    row_echelon,
    snf,
)


class TestSnf:
    @pytest.mark.parametrize(
        "matrix, factors",
        [
            ([[2, 0], [0, 2]], (2, 2)),
            ([[1, 0], [0, 0]], (1,)),
            ([[2, 4], [6, 8]], (2, 4)),
            ([[2, 0], [0, 3]], (1, 6)),
            ([[0, 0], [0, 0]], ()),
            ([[4, 6, 8]], (2,)),
            ([[6], [10], [15]], (1,)),
        ],
    )
    def test_small_matrices(self, matrix, factors):
        assert snf(matrix) == factors

    def test_empty_matrix(self):
        assert snf(np.zeros((0, 3), dtype=np.int64)) == ()
        assert snf([], ncols=4) == ()

    def test_large_entries_promote(self):
        assert snf([[2 ** 40, 0], [0, 3]]) == (1, 3 * 2 ** 40)

    def test_object_input(self):
        M = np.array([[2 ** 70, 0], [0, 2 ** 70]], dtype=object)
        assert snf(M) == (2 ** 70, 2 ** 70)

    def test_agrees_with_minor_gcds(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            M = rng.integers(-5, 6, size=(4, 3))
            assert snf(M) == minor_gcd_factors(M)

    def test_divisibility_chain(self):
        factors = snf([[12, 0, 0], [0, 18, 0], [0, 0, 8]])

        assert factors == (2, 12, 72)
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))


class TestEchelon:
    def test_rank(self):
        assert rank([[1, 2], [2, 4]]) == 1
        assert rank([[1, 0], [0, 1], [1, 1]]) == 2

    def test_pivots_increase(self):
        e = row_echelon([[0, 3, 1], [2, 1, 0], [4, 5, 1]])
        assert list(e.pivots) == sorted(e.pivots)

    def test_membership(self):
        lattice = row_echelon([[2, 0], [0, 3]])

        assert lattice.contains([4, 3])
        assert lattice.contains([0, 0])
        assert not lattice.contains([1, 0])
        assert not lattice.contains([2, 1])

    def test_membership_needs_integer_combination(self):
        lattice = row_echelon([[2, 2], [0, 4]])

        assert lattice.contains([2, 6])
        assert not lattice.contains([0, 2])

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            row_echelon([[1, 0]]).contains([1, 0, 0])


class TestAbelianInvariants:
    @pytest.mark.parametrize(
        "inv, text",
        [
            (AbelianInvariants(0, ()), "0"),
            (AbelianInvariants(1, ()), "Z"),
            (AbelianInvariants(2, (2,)), "Z^2 x Z/2"),
            (AbelianInvariants(0, (2, 2, 2)), "Z/2 x Z/2 x Z/2"),
        ],
    )
    def test_str(self, inv, text):
        assert str(inv) == text

    def test_f2_rank(self):
        assert AbelianInvariants(1, (2, 3, 4)).f2_rank() == 3
        assert AbelianInvariants(0, (2, 2)).is_elementary_2
        assert not AbelianInvariants(0, (4,)).is_elementary_2

    def test_to_record(self):
        assert AbelianInvariants(0, (2,)).to_record() == {"free_rank": 0, "torsion": [2], "text": "Z/2"}

    def test_cokernel(self):
        assert cokernel_invariants([[2, 0], [0, 2], [0, 0]], 2) == AbelianInvariants(0, (2, 2))
        assert cokernel_invariants([[2, 0, 0]], 3) == AbelianInvariants(2, (2,))
        assert cokernel_invariants([], 2) == AbelianInvariants(2, ())


class TestDeterminants:
    def test_int_det(self):
        assert int_det([[1, 2], [3, 4]]) == -2
        assert int_det([[0, 1], [1, 0]]) == -1
        assert int_det([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6
        assert int_det([[1, 2], [2, 4]]) == 0
        assert int_det([]) == 1

    def test_minor_gcd_factors(self):
        assert minor_gcd_factors([[2, 4], [6, 8]]) == (2, 4)
        assert minor_gcd_factors([[0, 0]]) == ()
