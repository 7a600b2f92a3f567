import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_fox_count, minor_determinant
from tanglecert.colorings import (
    ColoringError,
    FoxColoring,
    Quandle,
    QuandleAxiomError,
    SolutionCapExceeded,
    determinant,
    dihedral,
    fox_solution_space,
    has_nontrivial_fox,
    link_determinant,
    parse_quandle,
    quandle_colorings,
    validate_quandle,
    verify_coloring,
    verify_fox,
)
from tanglecert.diagram import parse_diagram
from tanglecert.tangle import numerator_closure

TRICOLORING = {1: 0, 6: 0, 2: 1, 3: 1, 4: 2, 5: 2}


class TestVerifyFox:
    def test_trefoil_tricoloring(self, trefoil):
        assert verify_fox(trefoil, FoxColoring(3, TRICOLORING))

    def test_constant_coloring_always_valid(self, corpus_diagrams):
        for d in corpus_diagrams.values():
            c = FoxColoring(5, {a: 2 for a in d.arcs()})
            assert verify_fox(d, c)
            assert not c.nontrivial

    def test_bad_assignment_rejected(self, trefoil):
        colors = dict(TRICOLORING)
        colors[4] = colors[5] = 1  # strand {4,5} recolored 1: relation breaks
        assert not verify_fox(trefoil, FoxColoring(3, colors))

    def test_missing_arc_raises(self, trefoil):
        with pytest.raises(ColoringError):
            verify_fox(trefoil, FoxColoring(3, {1: 0}))


class TestSolutionSpace:
    @pytest.mark.parametrize("n,expected", [(3, 9), (5, 5), (7, 7)])
    def test_trefoil_counts(self, trefoil, n, expected):
        assert fox_solution_space(trefoil, n).count == expected
        assert brute_fox_count(trefoil, n) == expected

    def test_unknot_counts_trivial(self):
        u = parse_diagram("O 1")
        space = fox_solution_space(u, 7)
        assert space.count == 7
        assert all(not c.nontrivial for c in space.colorings())

    def test_counts_are_multiples_of_modulus(self, corpus_diagrams):
        for name, d in corpus_diagrams.items():
            if len(d.crossings) > 8:
                continue
            for n in (2, 3, 5, 6):
                assert fox_solution_space(d, n).count % n == 0, (name, n)

    def test_pins(self, trefoil):
        assert fox_solution_space(trefoil, 3, pins={1: 0}).count == 3
        assert fox_solution_space(trefoil, 3, pins={1: 0, 2: 1, 4: 1}).count == 0
        # pins on two labels of one strand: consistent or empty
        assert fox_solution_space(trefoil, 3, pins={1: 0, 6: 0}).count == 3
        assert fox_solution_space(trefoil, 3, pins={1: 0, 6: 1}).count == 0

    def test_unknown_pin_rejected(self, trefoil):
        with pytest.raises(ColoringError):
            fox_solution_space(trefoil, 3, pins={99: 0})

    def test_cap_exceeded(self, trefoil):
        with pytest.raises(SolutionCapExceeded):
            list(fox_solution_space(trefoil, 3).colorings(cap=5))

    def test_enumeration_matches_count_and_validates(self, trefoil):
        space = fox_solution_space(trefoil, 3)
        sols = list(space.colorings())
        assert len(sols) == space.count
        assert all(verify_fox(trefoil, c) for c in sols)

    @given(st.integers(2, 9), st.integers(0, 50), st.integers(1, 50))
    @settings(max_examples=40, deadline=None)
    def test_affine_symmetry(self, trefoil, n, v, u):
        from math import gcd

        if gcd(u, n) != 1:
            return
        c = fox_solution_space(trefoil, n).first_nonconstant()
        if c is None:
            return
        mapped = FoxColoring(n, {a: (u * x + v) % n for a, x in c.colors.items()})
        assert verify_fox(trefoil, mapped)
        assert mapped.nontrivial


class TestNontriviality:
    def test_tabulated_moduli(self, corpus_diagrams):
        assert has_nontrivial_fox(corpus_diagrams["8_16"], 5)
        assert has_nontrivial_fox(corpus_diagrams["6_2"], 11)

    def test_trefoil_mod5_trivial(self, trefoil):
        assert not has_nontrivial_fox(trefoil, 5)


class TestDeterminant:
    @pytest.mark.parametrize(
        "name,expected",
        [("trefoil", 3), ("fig8-knot", 5), ("6_2", 11), ("8_16", 35), ("unknot", 1)],
    )
    def test_corpus_knots(self, corpus_diagrams, name, expected):
        d = corpus_diagrams[name]
        assert determinant(d) == expected
        assert minor_determinant(d) == expected

    def test_divisibility_iff_nontrivial(self, corpus_diagrams):
        for name, d in corpus_diagrams.items():
            if d.boundary or len(d.crossings) > 8:
                continue
            from tanglecert.diagram import components

            if len(components(d)) != 1:
                continue
            det = determinant(d)
            for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
                assert has_nontrivial_fox(d, p) == (det % p == 0), (name, p)

    def test_multicomponent_rejected(self, corpus_diagrams):
        with pytest.raises(ColoringError):
            determinant(corpus_diagrams["hopf"])

    def test_link_determinant(self, corpus_diagrams):
        assert link_determinant(corpus_diagrams["hopf"]) == 2
        assert link_determinant(parse_diagram("O 1 ; O 2")) == 0
        assert link_determinant(parse_diagram("O 1")) == 1


class TestQuandles:
    def test_dihedral_table(self):
        q3 = dihedral(3)
        assert q3.op(0, 1) == 2
        assert dihedral(2).op(0, 1) == 0
        validate_quandle(q3)
        assert q3.involutory

    def test_dihedral_needs_two(self):
        with pytest.raises(ColoringError):
            dihedral(1)

    def test_axiom_violation_reports_witness(self):
        bad = Quandle(((0, 0), (1, 0)))  # 1*1 = 0 breaks idempotence
        with pytest.raises(QuandleAxiomError) as err:
            validate_quandle(bad)
        assert err.value.witness == (1,)

    def test_parse_quandle_roundtrip(self):
        text = "Q 3\n0 2 1\n2 1 0\n1 0 2\n"
        q = parse_quandle(text)
        assert q.size == 3 and q.op(0, 1) == 2

    def test_parse_quandle_rejects_garbage(self):
        with pytest.raises(ColoringError):
            parse_quandle("Q 2\n0 1\n")
        with pytest.raises(QuandleAxiomError):
            parse_quandle("Q 2\n1 0\n0 1\n")

    def test_trefoil_dihedral3_has_nine(self, trefoil):
        res = quandle_colorings(trefoil, dihedral(3))
        assert len(res) == 9 and res.complete
        assert all(verify_coloring(trefoil, c) for c in res)

    def test_one_element_quandle(self, trefoil):
        q1 = Quandle(((0,),))
        res = quandle_colorings(trefoil, q1)
        assert len(res) == 1 and not res.colorings[0].nontrivial

    def test_dihedral_counts_equal_fox(self, corpus_diagrams):
        for name, d in corpus_diagrams.items():
            for n in range(2, 10):
                assert (
                    len(quandle_colorings(d, dihedral(n)).colorings)
                    == fox_solution_space(d, n).count
                ), (name, n)

    def test_truncation_flag(self, trefoil):
        res = quandle_colorings(trefoil, dihedral(3), cap=4)
        assert len(res) == 4 and not res.complete

    def test_column_sum_closure_admits_dihedral5_coloring(self, corpus_diagrams):
        closure = numerator_closure(corpus_diagrams["fig2-p5"])
        res = quandle_colorings(closure, dihedral(5), cap=10 ** 4)
        assert any(c.nontrivial for c in res)

    def test_pins_restrict_quandle_search(self, trefoil):
        res = quandle_colorings(trefoil, dihedral(3), pins={1: 0})
        assert len(res) == 3
