import random
from fractions import Fraction

from spectriple.algebra import (AlgebraElement, AlgebraSpec, BlockKind, Placement,
                                Representation, basis_elements, identity_element)
from spectriple.matrices import Antilinear, Matrix
from spectriple.oneforms import check_twist_commutation, omega1_span, one_form
from spectriple.realpart import real_part
from spectriple.triple import FiniteRealTriple
from spectriple.twist import twist_by_grading

from conftest import SIGMA1


def conjugate_rep_toy():
    """C acting as diag(z, conj z) on C^2 with D = sigma1."""
    spec = AlgebraSpec((BlockKind("C"),))
    plan = [Placement(0, (0,), (0,)), Placement(0, (1,), (1,), conj=True)]
    rep = Representation.from_plan(spec, 2, plan)
    return FiniteRealTriple(spec, rep, SIGMA1, None, Antilinear(Matrix.identity(2)))


def brute_force_real_rank(matrices):
    """Independent oracle: rank over R of flattened matrices, by fraction
    Gaussian elimination written from scratch."""
    rows = []
    for m in matrices:
        vec = []
        for i in range(m.nrows):
            for j in range(m.ncols):
                v = m.get(i, j)
                re = Fraction(str(v.real)) if v != 0 else Fraction(0)
                im = Fraction(str(v.imag)) if v != 0 else Fraction(0)
                vec.extend((re, im))
        rows.append(vec)
    rank = 0
    width = len(rows[0]) if rows else 0
    col = 0
    while col < width and rank < len(rows):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def test_one_form_of_identity_pair_vanishes(ko0_toy):
    e = identity_element(ko0_toy.spec)
    assert one_form(ko0_toy, [(e, e)]).is_zero()


def test_diagonal_everything_gives_zero_span(conjugate_pair_toy):
    # diagonal D, diagonal representation, no twist: all commutators vanish
    t = FiniteRealTriple(conjugate_pair_toy.spec, conjugate_pair_toy.rep,
                         Matrix.diagonal([2, -1]), None, conjugate_pair_toy.real_structure)
    span = omega1_span(t)
    assert span.dimension == 0


def test_zero_dirac_gives_zero_span(ko0_toy):
    t = FiniteRealTriple(ko0_toy.spec, ko0_toy.rep, Matrix.zeros(2), ko0_toy.grading,
                         ko0_toy.real_structure)
    assert omega1_span(t).dimension == 0


def test_canonical_toy_span_matches_brute_force_oracle():
    t = conjugate_rep_toy()
    basis = basis_elements(t.spec)
    products = []
    for a in basis:
        for b in basis:
            w = t.rep.apply(a) @ (t.dirac @ t.rep.apply(b) - t.rep.apply(b) @ t.dirac)
            if w.nnz():
                products.append(w)
    expected = brute_force_real_rank(products)
    span = omega1_span(t)
    assert span.dimension == expected == 2


def test_one_form_lies_in_reported_span():
    rng = random.Random(6)
    t = conjugate_rep_toy()
    span = omega1_span(t)
    for _ in range(10):
        pairs = []
        for _ in range(rng.randint(1, 3)):
            a = AlgebraElement(t.spec, tuple(Fraction(rng.randint(-3, 3)) for _ in range(2)))
            b = AlgebraElement(t.spec, tuple(Fraction(rng.randint(-3, 3)) for _ in range(2)))
            pairs.append((a, b))
        w = one_form(t, pairs)
        assert span.contains(w)


def test_twist_commutation_vacuous_without_elements(ko0_toy):
    report = check_twist_commutation(ko0_toy, None, [])
    assert report.ok
    assert "vacuous" in report.checks[0].detail


def test_twist_commutation_on_doubled_toy(ko6_toy):
    doubled, rho = twist_by_grading(ko6_toy)
    rp = real_part(doubled, rho)
    report = check_twist_commutation(doubled, rho, rp.elements(doubled))
    assert report.ok, report.render()
