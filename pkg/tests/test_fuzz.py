from spectriple.fuzz import EVEN_KO, generate_cases
from spectriple.triple import check_axioms, check_first_order, check_order_zero


def test_generator_is_deterministic():
    a = generate_cases(42, 8)
    b = generate_cases(42, 8)
    assert [c.ko for c in a] == [c.ko for c in b]
    for x, y in zip(a, b):
        assert x.triple.dirac == y.triple.dirac
        assert x.triple.real_structure.U == y.triple.real_structure.U
        assert [m.tolist() for m in x.triple.rep.basis_matrices] == [
            m.tolist() for m in y.triple.rep.basis_matrices
        ]


def test_all_generated_triples_are_valid():
    for case in generate_cases(7, 24):
        report = check_axioms(case.triple)
        assert report.ok, report.render()
        assert report.data["ko_dimension"] == case.ko
        assert check_order_zero(case.triple).ok
        assert check_first_order(case.triple).ok


def test_requested_ko_class_is_respected():
    for ko in EVEN_KO:
        for case in generate_cases(3, 4, ko=ko):
            assert case.ko == ko
            assert check_axioms(case.triple).data["ko_dimension"] == ko


def test_generated_dirac_operators_are_often_nonzero():
    cases = generate_cases(11, 30)
    nonzero = sum(1 for c in cases if not c.triple.dirac.is_zero())
    assert nonzero >= 15
