"""End-to-end checks of the homology statements over whole families of inputs."""

from itertools import product

import numpy as np
import pytest

from artin_homology.artin_h import ArtinH2Class, artin_h2_basis_lattice, class_of, coords_via_wedge, flatten, h2
from artin_homology.cohomology import Character, cup_table, hopf_pairing
from artin_homology.coxeter_h import CoxH2Class, cox_h1, cox_h2, cox_pontryagin_independent, rho_star
from artin_homology.coxmat import even_presentation
from artin_homology.magnus import class2_trivial, wedge_image, wedge_vector_of
from artin_homology.oracle.bar import bar_h
from artin_homology.oracle.coset import todd_coxeter
from artin_homology.oracle.groups import dihedral, direct_product, elementary_abelian, order_profile
from artin_homology.oracle.smith import AbelianInvariants, minor_gcd_factors, rank, snf
from artin_homology.verify import check_chain_identities, random_relator_product
from artin_homology.words import Word, comm_rel_pair, commutator, relator, w_lemma

from .conftest import random_presentations

pytestmark = pytest.mark.integration


@pytest.mark.timeout(30)
def test_relator_wedge_images_form_a_basis(label_family):
    for p in label_family:
        for i, j in p.B:
            expected = wedge_vector_of([((i, j), p.half_label(i, j))])
            assert wedge_image(relator(i, j, p)) == expected, (p, i, j)
        lattice = artin_h2_basis_lattice(p)
        assert rank(lattice, lattice.shape[1]) == len(p.B)
        assert h2(p).rank == len(p.B)


@pytest.mark.timeout(60)
def test_lemma_words():
    a, b = Word.generator(1, 2), Word.generator(2, 2)
    for k in range(1, 11):
        w = w_lemma(a, b, k)
        assert (a * b) ** k * ((b * a) ** k) ** -1 == w * commutator(a, b) ** k, k
        assert class2_trivial(w), k


@pytest.mark.timeout(10)
@pytest.mark.parametrize("half", range(1, 11))
def test_commuting_pair_commutator_is_relator(half):
    p = even_presentation(f"n=2; 1 2 {2 * half}")
    g, h = comm_rel_pair(1, 2, p)

    assert commutator(g, h) == relator(1, 2, p)


@pytest.mark.timeout(30)
def test_counted_class_matches_magnus_class():
    rng = np.random.default_rng(4)
    presentations = [p for n in (2, 3, 4) for p in random_presentations(n, 60, seed=n) if p.B]
    for trial in range(500):
        p = presentations[trial % len(presentations)]
        rp = random_relator_product(p, rng)
        assert class_of(rp) == coords_via_wedge(flatten(rp), p), rp


@pytest.mark.timeout(30)
def test_cup_products_match_hopf_pairing(label_family):
    for p in label_family:
        n, table = p.n, cup_table(p)
        for (i, j), coeff in table.entries:
            assert coeff == (p.half_label(i, j) or 0)
        for q, r in p.B:
            comms = [(Word.generator(q, n), Word.generator(r, n))] * p.half_label(q, r)
            for (i, j), coeff in table.entries:
                value = hopf_pairing(comms, Character.dual(i, n), Character.dual(j, n))
                assert value == (coeff if (i, j) == (q, r) else 0), (p, i, j, q, r)


@pytest.mark.timeout(60)
@pytest.mark.parametrize(
    "G",
    [dihedral(1), dihedral(2), dihedral(3), elementary_abelian(2), elementary_abelian(3),
     direct_product(dihedral(1), elementary_abelian(1))],
    ids=["D4", "D8", "D12", "Z2^2", "Z2^3", "D4xZ2"],
)
def test_pontryagin_identities(G):
    check_chain_identities(G)


@pytest.mark.slow
@pytest.mark.timeout(300)
@pytest.mark.parametrize(
    "G",
    [dihedral(4), elementary_abelian(4), direct_product(dihedral(2), elementary_abelian(1))],
    ids=["D16", "Z2^4", "D8xZ2"],
)
def test_pontryagin_identities_order_sixteen(G):
    check_chain_identities(G)


COXETER_CASES = [
    ("n=2; 1 2 2", elementary_abelian(2), 1),
    ("n=2; 1 2 4", dihedral(2), 1),
    ("n=2; 1 2 6", dihedral(3), 1),
    ("n=3\n1 2 2\n1 3 2\n2 3 2", elementary_abelian(3), 3),
]


@pytest.mark.timeout(60)
@pytest.mark.parametrize("text, closed_form, expected_rank", COXETER_CASES)
def test_coxeter_h2_against_bar_complex(text, closed_form, expected_rank):
    _check_coxeter_case(text, closed_form, expected_rank)


@pytest.mark.slow
@pytest.mark.timeout(300)
def test_coxeter_h2_against_bar_complex_order_sixteen():
    _check_coxeter_case("n=3\n1 2 4\n1 3 2\n2 3 2", direct_product(dihedral(2), elementary_abelian(1)), 3)


def _check_coxeter_case(text, closed_form, expected_rank):
    p = even_presentation(text)
    G = todd_coxeter(p)

    assert G.order == closed_form.order
    assert order_profile(G) == order_profile(closed_form)
    assert cox_h2(p).rank == expected_rank
    assert bar_h(G, 2) == AbelianInvariants(0, (2,) * expected_rank)
    assert bar_h(G, 1) == AbelianInvariants(0, (2,) * p.n) == cox_h1(p)
    assert cox_pontryagin_independent(p, G)


@pytest.mark.timeout(10)
def test_rho_star_is_reduction_mod_two(label_family):
    rng = np.random.default_rng(8)
    for p in label_family:
        for pair in p.B:
            assert rho_star(ArtinH2Class.unit(p, pair)) == CoxH2Class.unit(p, pair)
        for target in product((0, 1), repeat=len(p.B)):
            assert rho_star(ArtinH2Class(p.B, target)) == CoxH2Class(p.B, target)
        coords = tuple(int(c) for c in rng.integers(-6, 7, size=len(p.B)))
        in_kernel = rho_star(ArtinH2Class(p.B, coords)).is_zero()
        assert in_kernel == all(c % 2 == 0 for c in coords)


@pytest.mark.timeout(10)
def test_snf_agrees_with_minor_gcds():
    rng = np.random.default_rng(9)
    for _ in range(100):
        rows, cols = (int(x) for x in rng.integers(1, 7, size=2))
        M = rng.integers(-5, 6, size=(rows, cols))
        assert snf(M) == minor_gcd_factors(M), M.tolist()
