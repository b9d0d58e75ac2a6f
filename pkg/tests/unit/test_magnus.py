import numpy as np
import pytest

from artin_homology.coxmat import even_presentation
from artin_homology.errors import NotInCommutatorError
from artin_homology.magnus import (
    MagnusTruncation,
    WedgeVector,
    class2_trivial,
    magnus2,
    wedge_image,
    wedge_of,
    wedge_pairs,
    wedge_vector_of,
)
from artin_homology.verify import random_word
from artin_homology.words import Word, commutator, relator, w_lemma

a1, a2, a3 = (Word.generator(i, 3) for i in (1, 2, 3))


class TestMagnus2:
    def test_identity_is_one(self):
        assert magnus2(Word.identity(3)).is_one()

    def test_generator(self):
        m = magnus2(a1)

        assert m.ab.tolist() == [1, 0, 0]
        assert not m.deg2.any()

    def test_inverse_generator(self):
        m = magnus2(~a1)

        assert m.ab.tolist() == [-1, 0, 0]
        assert m.deg2[0, 0] == 1
        assert m.deg2.sum() == 1

    def test_square(self):
        m = magnus2(a2 * a2)
        assert m.deg2[1, 1] == 1

    def test_multiplicative(self):
        u = a1 * a2 * ~a3 * a1
        v = ~a2 * a3 * a3 * ~a1
        assert magnus2(u * v) == magnus2(u) * magnus2(v)

    def test_word_times_inverse_is_one(self):
        w = a1 * a2 * ~a3 * a2
        assert (magnus2(w) * magnus2(~w)).is_one()

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            MagnusTruncation.one(2) * MagnusTruncation.one(3)

    def test_large_exponent_stays_exact(self):
        m = magnus2(a1 ** 200 * a2 ** 300)
        assert m.deg2[0, 1] == 60000


class TestWedgeImage:
    def test_basic_commutator(self):
        assert wedge_image(commutator(a1, a2)) == WedgeVector.basis(1, 2)

    def test_reversed_commutator(self):
        assert wedge_image(commutator(a2, a1)) == -WedgeVector.basis(1, 2)

    def test_commutator_power(self):
        assert wedge_image(commutator(a1, a3) ** 3) == 3 * WedgeVector.basis(1, 3)

    def test_relator_image(self):
        p = even_presentation("n=3\n1 2 6\n2 3 4")
        assert wedge_image(relator(1, 2, p)) == 3 * WedgeVector.basis(1, 2)
        assert wedge_image(relator(2, 3, p)) == 2 * WedgeVector.basis(2, 3)

    def test_conjugation_invariant(self):
        w = commutator(a1, a2)
        c = a3 * ~a1 * a2
        assert wedge_image(c * w * ~c) == wedge_image(w)

    def test_commutator_of_random_words_is_wedge_of_abelianizations(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            g, h = random_word(4, rng, 10), random_word(4, rng, 10)
            assert wedge_image(commutator(g, h)) == wedge_of(g.abelianization(), h.abelianization()), (g, h)

    def test_not_in_commutator_subgroup(self):
        with pytest.raises(NotInCommutatorError):
            wedge_image(a1 * a2)

    def test_class2_trivial(self):
        assert class2_trivial(commutator(a1, commutator(a1, a2)))
        assert class2_trivial(w_lemma(a1, a2, 4))
        assert not class2_trivial(commutator(a1, a2))
        assert not class2_trivial(a1)


class TestWedgeVector:
    def test_drops_zeros_and_sorts(self):
        v = WedgeVector((((2, 3), 1), ((1, 2), 0), ((1, 3), -2)))
        assert v.coeff == (((1, 3), -2), ((2, 3), 1))

    def test_rejects_non_increasing_pair(self):
        with pytest.raises(ValueError):
            WedgeVector((((2, 1), 1),))

    def test_get_is_antisymmetric(self):
        v = wedge_vector_of([((1, 2), 5)])

        assert v.get(1, 2) == 5
        assert v.get(2, 1) == -5
        assert v.get(1, 3) == 0

    def test_wedge_vector_of_normalizes(self):
        v = wedge_vector_of([((2, 1), 1), ((1, 1), 7), ((1, 2), 3)])
        assert v == wedge_vector_of([((1, 2), 2)])

    def test_arithmetic(self):
        e12, e13 = WedgeVector.basis(1, 2), WedgeVector.basis(1, 3)

        assert (e12 + e13 - e12) == e13
        assert (e12 - e12).is_zero()
        assert (2 * e12).as_dict() == {(1, 2): 2}
        assert (e12 + e13).support() == ((1, 2), (1, 3))

    def test_as_vector_order(self):
        v = wedge_vector_of([((2, 3), 4), ((1, 2), 1)])

        assert wedge_pairs(3) == [(1, 2), (1, 3), (2, 3)]
        assert v.as_vector(3).tolist() == [1, 0, 4]

    def test_wedge_of_vectors(self):
        assert wedge_of([1, 0, 0], [0, 1, 0]) == WedgeVector.basis(1, 2)
        assert wedge_of([1, 1, 0], [1, 1, 0]).is_zero()
        assert wedge_of(np.array([2, 0]), np.array([0, 3])) == 6 * WedgeVector.basis(1, 2)

    def test_str(self):
        assert str(WedgeVector()) == "0"
        assert str(2 * WedgeVector.basis(1, 2)) == "2*(e1^e2)"
