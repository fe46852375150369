import pytest

from sylowclass.classify import NotADivisorError, catalog_irreducibles
from sylowclass.groups import Cyclic, Exceptional, Imprimitive, Sym, order, product_of
from sylowclass.structure import (
    CyclicGroup,
    DiagonalPart,
    DirectProduct,
    ElementaryAbelian,
    IteratedWreath,
    Named,
    SemidirectProduct,
    Trivial,
    direct_product,
    render_term,
    structure_order,
    sylow_structure,
    sylow_symmetric,
)
from sylowclass.valuation import nu, nu_factorial, prime_factors

PRIMES = (2, 3, 5, 7)


class TestStructureOrder:
    def test_examples(self):
        assert structure_order(IteratedWreath(2, 2)) == 8 == 2 ** nu_factorial(2, 4)
        assert structure_order(DiagonalPart(9, 3, 2)) == 81 // 3 == 27
        assert structure_order(Named("Q8xQ8_swap")) == 128
        assert structure_order(Named("Q8")) == 8
        assert structure_order(Named("SD16")) == 16
        assert structure_order(Named("Sp4_3_Sylow3")) == 81
        assert structure_order(Trivial()) == 1
        assert structure_order(ElementaryAbelian(3, 3)) == 27

    def test_products(self):
        t = DirectProduct((CyclicGroup(4), IteratedWreath(2, 2)))
        assert structure_order(t) == 32
        t = SemidirectProduct(DiagonalPart(4, 2, 3), CyclicGroup(2))
        assert structure_order(t) == 32 * 2

    def test_named_tags_are_closed(self):
        with pytest.raises(ValueError):
            Named("D8")

    def test_named_expansions(self):
        exp = Named("Sp4_3_Sylow3").expansion
        assert isinstance(exp, SemidirectProduct)
        assert exp.normal == ElementaryAbelian(3, 3)
        assert exp.acting == CyclicGroup(3)
        assert structure_order(exp) == 81
        exp = Named("Q8xQ8_swap").expansion
        assert structure_order(exp) == 128
        assert Named("Q8").expansion is None


class TestSylowSymmetric:
    def test_examples(self):
        assert sylow_symmetric(4, 2) == IteratedWreath(2, 2)
        assert sylow_symmetric(6, 2) == DirectProduct(
            (CyclicGroup(2), IteratedWreath(2, 2)))
        assert structure_order(sylow_symmetric(6, 2)) == 16
        assert sylow_symmetric(5, 5) == CyclicGroup(5)

    def test_order_matches_legendre(self):
        for ell in PRIMES:
            for n in range(1, 201):
                term = sylow_symmetric(n, ell)
                assert structure_order(term) == ell ** nu_factorial(ell, n)

    def test_trivial_below_ell(self):
        assert sylow_symmetric(4, 5) == Trivial()


class TestSylowStructure:
    def test_named_exceptional(self):
        assert sylow_structure(Exceptional(4), 2) == Named("Q8")
        assert sylow_structure(Exceptional(12), 2) == Named("SD16")
        assert sylow_structure(Exceptional(16), 2) == Named("Q8")
        assert sylow_structure(Exceptional(8), 3) == CyclicGroup(3)
        assert sylow_structure(Exceptional(24), 7) == CyclicGroup(7)
        assert sylow_structure(Exceptional(25), 3) == Named("Sp4_3_Sylow3")
        assert sylow_structure(Exceptional(35), 3) == Named("Sp4_3_Sylow3")

    def test_swap_product(self):
        term = sylow_structure(Exceptional(32), 2)
        assert isinstance(term, SemidirectProduct)
        assert term.normal == DirectProduct((Named("Q8"), Named("Q8")))
        assert term.acting == CyclicGroup(2)
        assert "swap" in term.action_note
        assert structure_order(term) == 128

    def test_semidirect_collapses_to_diagonal(self):
        term = sylow_structure(Imprimitive(9, 3, 2), 3)
        assert term == DiagonalPart(9, 3, 2)
        assert structure_order(term) == 27

    def test_exceptional_reduction(self):
        # G14 at 2 reduces through its reflection answer G12 to SD16
        assert sylow_structure(Exceptional(14), 2) == Named("SD16")
        # G30 = H4 at 2 reduces through D4 = G(2,2,4)
        term = sylow_structure(Exceptional(30), 2)
        assert structure_order(term) == 2**6

    def test_products_skip_ell_free_factors(self):
        g = product_of([Sym(4), Cyclic(3)])
        assert sylow_structure(g, 2) == IteratedWreath(2, 2)

    def test_cyclic(self):
        assert sylow_structure(Cyclic(8), 2) == CyclicGroup(8)
        assert sylow_structure(Cyclic(12), 3) == CyclicGroup(3)

    def test_not_a_divisor(self):
        with pytest.raises(NotADivisorError):
            sylow_structure(Sym(4), 5)

    def test_order_identity_everywhere(self):
        for g in catalog_irreducibles():
            size = order(g)
            for ell in prime_factors(size):
                term = sylow_structure(g, ell)
                assert structure_order(term) == ell ** nu(ell, size), (g, ell)


class TestRendering:
    def test_grammar_samples(self):
        assert render_term(IteratedWreath(2, 2)) == "W(2,2)"
        assert render_term(Named("SD16")) == "SD16"
        assert render_term(DiagonalPart(9, 3, 2)) == "A(9,3,2)"
        assert render_term(sylow_symmetric(6, 2)) == "C2 x W(2,2)"
        assert render_term(sylow_structure(Exceptional(32), 2)) == \
            "(Q8 x Q8):sd:C2"
        assert render_term(
            SemidirectProduct(DiagonalPart(9, 3, 3), IteratedWreath(3, 1))
        ) == "A(9,3,3):sd:W(3,1)"
        assert render_term(Trivial()) == "1"
        assert render_term(ElementaryAbelian(3, 3)) == "E(3^3)"

    def test_normalization(self):
        assert direct_product([]) == Trivial()
        assert direct_product([Trivial(), CyclicGroup(2)]) == CyclicGroup(2)
        flat = direct_product(
            [CyclicGroup(2), DirectProduct((CyclicGroup(3), CyclicGroup(5)))])
        assert flat == DirectProduct(
            (CyclicGroup(2), CyclicGroup(3), CyclicGroup(5)))
