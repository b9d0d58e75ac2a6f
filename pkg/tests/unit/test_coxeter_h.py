import pytest

from artin_homology.artin_h import ArtinH2Class
from artin_homology.coxeter_h import (
    CoxH2Class,
    cox_h1,
    cox_h2,
    cox_pontryagin,
    cox_pontryagin_chains,
    cox_pontryagin_independent,
    rho_hat,
    rho_star,
    rho_star_matrix,
)
from artin_homology.coxmat import even_presentation
from artin_homology.errors import PairNotInBError
from artin_homology.oracle.groups import dihedral, elementary_abelian
from artin_homology.oracle.smith import AbelianInvariants
from artin_homology.pontryagin import bar_boundary
from artin_homology.words import Word, parse_word


@pytest.fixture
def p3():
    return even_presentation("n=3\n1 2 4\n1 3 2")


class TestCoxH2:
    def test_basis(self, p3):
        desc = cox_h2(p3)

        assert desc.rank == 2
        assert desc.coefficients == "Z/2"
        assert [e.label for e in desc.elements] == ["gamma_12", "gamma_13"]
        assert [e.representative for e in desc.elements] == ["[s1,s2]^2", "[s1,s3]"]

    def test_no_finite_labels(self):
        assert cox_h2(even_presentation("n=4")).rank == 0


class TestCoxH1:
    @pytest.mark.parametrize("text", ["n=2; 1 2 4", "n=2", "n=2; 1 2 2"])
    def test_rank_two(self, text):
        assert cox_h1(even_presentation(text)) == AbelianInvariants(0, (2, 2))

    def test_str(self, p3):
        assert str(cox_h1(p3)) == "Z/2 x Z/2 x Z/2"


class TestCoxH2Class:
    def test_coordinates_reduce_mod_two(self, p3):
        assert CoxH2Class(p3.B, (3, -2)).coords == (1, 0)

    def test_addition_is_mod_two(self, p3):
        unit = CoxH2Class.unit(p3, (1, 2))
        assert (unit + unit).is_zero()

    def test_unit_outside_b(self, p3):
        with pytest.raises(PairNotInBError):
            CoxH2Class.unit(p3, (2, 3))

    def test_length_mismatch(self, p3):
        with pytest.raises(ValueError):
            CoxH2Class(p3.B, (1,))


class TestRhoStar:
    def test_reduces_coordinates(self, p3):
        assert rho_star(ArtinH2Class(p3.B, (3, -2))) == CoxH2Class(p3.B, (1, 0))

    def test_kills_even_multiples(self, p3):
        assert rho_star(ArtinH2Class(p3.B, (2, 4))).is_zero()

    def test_matrix(self, p3):
        assert rho_star_matrix(p3).tolist() == [[1, 0], [0, 1]]

    def test_rho_hat_keeps_letters(self):
        w = parse_word("a1 a2^-1 a3", 3)
        assert rho_hat(w).letters == w.letters


class TestCoxPontryagin:
    def test_pair(self):
        p = even_presentation("n=2; 1 2 6")
        (g, h), cls = cox_pontryagin(1, 2, p)

        assert g == Word.generator(1, 2)
        assert h.letters == (2, 1, 2, 1, 2)
        assert cls == CoxH2Class.unit(p, (1, 2))

    @pytest.mark.parametrize(
        "text, G",
        [
            ("n=2; 1 2 4", dihedral(2)),
            ("n=2; 1 2 6", dihedral(3)),
            ("n=2; 1 2 2", elementary_abelian(2)),
        ],
    )
    def test_chains_are_independent_cycles(self, text, G):
        p = even_presentation(text)
        chains = cox_pontryagin_chains(p, G)

        assert len(chains) == 1
        assert all(bar_boundary(c).is_zero() for c in chains)
        assert cox_pontryagin_independent(p, G)
