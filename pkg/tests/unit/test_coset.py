import pytest

from artin_homology.coxmat import even_presentation
from artin_homology.errors import ResourceLimitError
from artin_homology.oracle.coset import todd_coxeter
from artin_homology.oracle.groups import (
    dihedral,
    direct_product,
    elementary_abelian,
    evaluate,
    order_profile,
)
from artin_homology.words import coxeter_relators


class TestToddCoxeter:
    def test_single_generator(self):
        G = todd_coxeter(even_presentation("n=1"))

        assert G.order == 2
        assert G.gens == (1,)

    def test_dihedral_order_eight(self):
        p = even_presentation("n=2; 1 2 4")
        G = todd_coxeter(p)

        assert G.order == 8
        assert order_profile(G) == order_profile(dihedral(2))

    def test_right_angled_triangle(self):
        G = todd_coxeter(even_presentation("n=3\n1 2 2\n1 3 2\n2 3 2"))

        assert G.order == 8
        assert G.is_abelian()
        assert order_profile(G) == order_profile(elementary_abelian(3))

    def test_product_with_central_involution(self):
        G = todd_coxeter(even_presentation("n=3\n1 2 4\n1 3 2\n2 3 2"))
        expected = direct_product(dihedral(2), elementary_abelian(1))

        assert G.order == 16
        assert order_profile(G) == order_profile(expected)

    def test_relators_evaluate_to_identity(self):
        p = even_presentation("n=2; 1 2 6")
        G = todd_coxeter(p)

        assert G.order == 12
        for r in coxeter_relators(p):
            assert evaluate(G, r) == G.identity

    def test_generators_are_distinct_involutions(self):
        G = todd_coxeter(even_presentation("n=3\n1 2 4\n1 3 2\n2 3 2"))

        assert len(set(G.gens)) == 3
        assert all(G.element_order(s) == 2 for s in G.gens)

    def test_infinite_group_hits_cap(self):
        with pytest.raises(ResourceLimitError) as exc:
            todd_coxeter(even_presentation("n=2"), max_cosets=200)

        assert exc.value.limit_name == "max_cosets"
        assert exc.value.limit == 200

    def test_bad_cap(self):
        with pytest.raises(ValueError):
            todd_coxeter(even_presentation("n=1"), max_cosets=0)


@pytest.mark.parametrize(
    "text, exponents",
    [
        ("n=2; 1 2 4", 4),
        ("n=2; 1 2 6", 6),
        ("n=2; 1 2 8", 8),
    ],
)
def test_order_matches_sympy(text, exponents):
    fp_groups = pytest.importorskip("sympy.combinatorics.fp_groups")
    free_groups = pytest.importorskip("sympy.combinatorics.free_groups")
    F, a, b = free_groups.free_group("a b")
    reference = fp_groups.FpGroup(F, [a ** 2, b ** 2, (a * b) ** exponents])

    assert todd_coxeter(even_presentation(text)).order == reference.order()
