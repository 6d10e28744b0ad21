"""Shared toy triples and small helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from spectriple.algebra import AlgebraSpec, BlockKind, Placement, Representation
from spectriple.matrices import Antilinear, Matrix
from spectriple.scalars import QI
from spectriple.triple import FiniteRealTriple


def qi(re, im=0) -> QI:
    return QI(Fraction(re), Fraction(im))


def mat(rows) -> Matrix:
    """Exact matrix from (int | Fraction | QI | 1j-free) nested lists."""
    conv = []
    for row in rows:
        out = []
        for v in row:
            if isinstance(v, QI):
                out.append(v)
            elif isinstance(v, complex):
                out.append(QI(Fraction(v.real), Fraction(v.imag)))
            else:
                out.append(QI(Fraction(v)))
        conv.append(out)
    return Matrix.from_rows(conv)


SIGMA1 = mat([[0, 1], [1, 0]])
SIGMA3 = mat([[1, 0], [0, -1]])


def scalar_rep_on_c2() -> Representation:
    """C acting as z * identity on C^2."""
    spec = AlgebraSpec((BlockKind("C"),))
    plan = [Placement(0, (0,), (0,)), Placement(0, (1,), (1,))]
    return Representation.from_plan(spec, 2, plan)


@pytest.fixture
def ko0_toy() -> FiniteRealTriple:
    """C acting as z I on C^2, D = sigma1, grading sigma3, J = conj."""
    rep = scalar_rep_on_c2()
    return FiniteRealTriple(rep.spec, rep, SIGMA1, SIGMA3, Antilinear(Matrix.identity(2)))


@pytest.fixture
def ko6_toy() -> FiniteRealTriple:
    """C acting as z I on C^2, D = sigma1, grading sigma3, J = sigma1 o conj."""
    rep = scalar_rep_on_c2()
    return FiniteRealTriple(rep.spec, rep, SIGMA1, SIGMA3, Antilinear(SIGMA1))


@pytest.fixture
def conjugate_pair_toy() -> FiniteRealTriple:
    """C + C acting as diag(z, w) on C^2, J = (swap o conj), D = 0."""
    spec = AlgebraSpec((BlockKind("C"), BlockKind("C")))
    plan = [Placement(0, (0,), (0,)), Placement(1, (1,), (1,))]
    rep = Representation.from_plan(spec, 2, plan)
    return FiniteRealTriple(spec, rep, Matrix.zeros(2), None, Antilinear(SIGMA1))
