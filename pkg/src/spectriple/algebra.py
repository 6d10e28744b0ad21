"""Structured real *-algebras: direct sums of matrix blocks over R, C, H.

An algebra is an ordered list of block kinds; an element is a real
coordinate vector laid out summand by summand.  Quaternions are always
stored through their 2x2 complex embedding
    x0 + x1 i + x2 j + x3 k  ->  [[a, b], [-conj(b), conj(a)]],
    a = x0 + i x1, b = x2 + i x3,
so there is a single matrix code path for every block family.

Representations embed coordinate vectors real-linearly into operators; they
are validated eagerly at construction (star-compatibility on basis elements,
multiplicativity on basis pairs), because every downstream theorem check
assumes it is acting through an actual *-homomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import scalars
from .matrices import Matrix, real_vector, support_union
from .scalars import QI, conj, is_zero
from .subspaces import Echelon, RealSubspaceBasis, real_nullspace, solve_real_linear

_FAMILIES = ("R", "C", "H")


@dataclass(frozen=True)
class BlockKind:
    """One matrix block: n x n matrices over R, C or the quaternions."""

    family: str
    n: int = 1

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown block family {self.family!r}")
        if self.n < 1:
            raise ValueError("block size must be positive")

    @property
    def real_dim(self) -> int:
        per_entry = {"R": 1, "C": 2, "H": 4}[self.family]
        return per_entry * self.n * self.n

    @property
    def matrix_dim(self) -> int:
        """Size of the complex matrix realizing one block element."""
        return 2 * self.n if self.family == "H" else self.n

    def label(self) -> str:
        return self.family if self.n == 1 else f"M{self.n}({self.family})"


def parse_kind(label: str) -> BlockKind:
    label = label.strip()
    if label in _FAMILIES:
        return BlockKind(label)
    if label.startswith("M") and label.endswith(")") and "(" in label:
        size, family = label[1:-1].split("(")
        return BlockKind(family.strip(), int(size))
    raise ValueError(f"cannot parse block kind {label!r}")


@dataclass(frozen=True)
class AlgebraSpec:
    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))

    @property
    def real_dimension(self) -> int:
        return sum(k.real_dim for k in self.summands)

    def offsets(self) -> list[int]:
        out, pos = [], 0
        for k in self.summands:
            out.append(pos)
            pos += k.real_dim
        return out

    def doubled(self) -> "AlgebraSpec":
        return AlgebraSpec(self.summands + self.summands)

    def labels(self) -> list[str]:
        return [k.label() for k in self.summands]

    def __len__(self):
        return len(self.summands)


# -- small dense block matrices ---------------------------------------------


def _mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(m)), 0) for j in range(p)] for i in range(n)]


def _mat_adjoint(a):
    return [[conj(a[j][i]) for j in range(len(a))] for i in range(len(a[0]))]


def _mat_conj(a):
    return [[conj(v) for v in row] for row in a]


def _block_from_coords(kind: BlockKind, coords, exact: bool):
    n = kind.n
    mk = (lambda re, im: QI(re, im)) if exact else (lambda re, im: complex(re, im))
    if kind.family == "R":
        return [[mk(coords[i * n + j], 0) for j in range(n)] for i in range(n)]
    if kind.family == "C":
        return [[mk(coords[2 * (i * n + j)], coords[2 * (i * n + j) + 1]) for j in range(n)] for i in range(n)]
    out = [[None] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            x0, x1, x2, x3 = coords[4 * (i * n + j): 4 * (i * n + j) + 4]
            a, b = mk(x0, x1), mk(x2, x3)
            out[2 * i][2 * j] = a
            out[2 * i][2 * j + 1] = b
            out[2 * i + 1][2 * j] = -conj(b)
            out[2 * i + 1][2 * j + 1] = conj(a)
    return out


def _coords_from_block(kind: BlockKind, block):
    n = kind.n
    coords = []
    if kind.family == "R":
        for i in range(n):
            for j in range(n):
                v = block[i][j]
                if not is_zero(scalars.imag_part(v)):
                    raise ValueError("real block acquired an imaginary part")
                coords.append(scalars.real_part(v))
    elif kind.family == "C":
        for i in range(n):
            for j in range(n):
                v = block[i][j]
                coords.extend((scalars.real_part(v), scalars.imag_part(v)))
    else:
        for i in range(n):
            for j in range(n):
                a = block[2 * i][2 * j]
                b = block[2 * i][2 * j + 1]
                if not is_zero(block[2 * i + 1][2 * j] + conj(b)) or not is_zero(
                    block[2 * i + 1][2 * j + 1] - conj(a)
                ):
                    raise ValueError("block left the quaternionic form")
                coords.extend(
                    (scalars.real_part(a), scalars.imag_part(a), scalars.real_part(b), scalars.imag_part(b))
                )
    return coords


@dataclass(frozen=True)
class AlgebraElement:
    spec: AlgebraSpec
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) != self.spec.real_dimension:
            raise ValueError("coordinate vector has wrong length")

    def _exact(self) -> bool:
        return all(scalars.is_exact(c) for c in self.coords)

    def blocks(self) -> list:
        out, pos = [], 0
        exact = self._exact()
        for k in self.spec.summands:
            out.append(_block_from_coords(k, self.coords[pos: pos + k.real_dim], exact))
            pos += k.real_dim
        return out

    @classmethod
    def from_blocks(cls, spec: AlgebraSpec, blocks) -> "AlgebraElement":
        coords = []
        for kind, block in zip(spec.summands, blocks):
            coords.extend(_coords_from_block(kind, block))
        return cls(spec, tuple(coords))

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_spec(other)
        return AlgebraElement(self.spec, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_spec(other)
        return AlgebraElement(self.spec, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.spec, tuple(-a for a in self.coords))

    def scale(self, factor) -> "AlgebraElement":
        """Multiply by a real scalar."""
        return AlgebraElement(self.spec, tuple(factor * a for a in self.coords))

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Blockwise product; C blocks commute, H and M_n(C) need not."""
        self._same_spec(other)
        return AlgebraElement.from_blocks(
            self.spec, [_mat_mul(a, b) for a, b in zip(self.blocks(), other.blocks())]
        )

    def star(self) -> "AlgebraElement":
        """The involution: blockwise conjugate transpose."""
        return AlgebraElement.from_blocks(self.spec, [_mat_adjoint(b) for b in self.blocks()])

    def conj(self) -> "AlgebraElement":
        """Blockwise entrywise conjugation (a real-linear automorphism)."""
        return AlgebraElement.from_blocks(self.spec, [_mat_conj(b) for b in self.blocks()])

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.spec == other.spec and (self - other).is_zero()

    __hash__ = None

    def _same_spec(self, other):
        if self.spec != other.spec:
            raise ValueError("algebra spec mismatch")


def zero_element(spec: AlgebraSpec, exact: bool = True) -> AlgebraElement:
    z = scalars.RATIONAL_ZERO if exact else 0.0
    return AlgebraElement(spec, (z,) * spec.real_dimension)


def identity_element(spec: AlgebraSpec, exact: bool = True) -> AlgebraElement:
    one = scalars.RATIONAL_ONE if exact else 1.0
    zero = scalars.RATIONAL_ZERO if exact else 0.0
    coords = []
    for kind in spec.summands:
        per = {"R": 1, "C": 2, "H": 4}[kind.family]
        for i in range(kind.n):
            for j in range(kind.n):
                head = one if i == j else zero
                coords.append(head)
                coords.extend((zero,) * (per - 1))
    return AlgebraElement(spec, tuple(coords))


def basis_element(spec: AlgebraSpec, k: int, exact: bool = True) -> AlgebraElement:
    one = scalars.RATIONAL_ONE if exact else 1.0
    zero = scalars.RATIONAL_ZERO if exact else 0.0
    coords = [zero] * spec.real_dimension
    coords[k] = one
    return AlgebraElement(spec, tuple(coords))


def basis_elements(spec: AlgebraSpec, exact: bool = True) -> list[AlgebraElement]:
    return [basis_element(spec, k, exact) for k in range(spec.real_dimension)]


def random_element(spec: AlgebraSpec, rng, exact: bool = True, span: int = 3) -> AlgebraElement:
    if exact:
        coords = tuple(
            scalars.rational(rng.randint(-span, span), rng.randint(1, span))
            for _ in range(spec.real_dimension)
        )
    else:
        coords = tuple(rng.uniform(-span, span) for _ in range(spec.real_dimension))
    return AlgebraElement(spec, coords)


def center_basis(spec: AlgebraSpec, exact: bool = True) -> RealSubspaceBasis:
    """Basis of {x : x e_k = e_k x for all basis elements e_k}."""
    d = spec.real_dimension
    basis = basis_elements(spec, exact)
    columns = []
    for e_j in basis:
        col = []
        for e_k in basis:
            col.extend((e_j * e_k - e_k * e_j).coords)
        columns.append(col)
    rows = []
    for c in range(len(columns[0]) if columns else 0):
        row = {j: columns[j][c] for j in range(d) if columns[j][c] != 0}
        if row:
            rows.append(row)
    return real_nullspace(rows, d)


# -- representations ---------------------------------------------------------


@dataclass(frozen=True)
class Placement:
    """One block action: which Hilbert slots a summand's entries land on.

    The block element B of summand `summand` (or its entrywise conjugate when
    `conj` is set, e.g. conjugate-component slots) contributes B[r][c] at
    position (rows[r], cols[c]).
    """

    summand: int
    rows: tuple
    cols: tuple
    conj: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))


class RepresentationError(ValueError):
    pass


class Representation:
    """Real-linear embedding of an algebra into operators on C^dim."""

    __slots__ = ("spec", "dim", "basis_matrices", "plan", "_support", "_columns", "_injective")

    def __init__(self, spec: AlgebraSpec, dim: int, basis_matrices, plan=None, validate: bool = True):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_matrices", tuple(basis_matrices))
        object.__setattr__(self, "plan", tuple(plan) if plan is not None else None)
        object.__setattr__(self, "_support", None)
        object.__setattr__(self, "_columns", None)
        object.__setattr__(self, "_injective", None)
        if len(self.basis_matrices) != spec.real_dimension:
            raise RepresentationError("one basis matrix per real coordinate is required")
        for m in self.basis_matrices:
            if m.nrows != dim or m.ncols != dim:
                raise RepresentationError("basis matrix has wrong dimension")
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("Representation is immutable")

    @classmethod
    def from_plan(cls, spec: AlgebraSpec, dim: int, placements, exact: bool = True,
                  validate: bool = True) -> "Representation":
        placements = tuple(placements)
        for p in placements:
            if not 0 <= p.summand < len(spec.summands):
                raise RepresentationError(f"placement references missing summand {p.summand}")
            md = spec.summands[p.summand].matrix_dim
            if len(p.rows) != md or len(p.cols) != md:
                raise RepresentationError(
                    f"placement for summand {p.summand} needs {md} rows/cols"
                )
        offsets = spec.offsets()
        mats = []
        for k in range(spec.real_dimension):
            e = basis_element(spec, k, exact)
            blocks = e.blocks()
            items = []
            for p in placements:
                block = blocks[p.summand]
                if p.conj:
                    block = _mat_conj(block)
                for r, i in enumerate(p.rows):
                    for c, j in enumerate(p.cols):
                        v = block[r][c]
                        if not _is_stored_zero(v):
                            items.append((i, j, v))
            mats.append(Matrix.from_entries(dim, dim, items, exact))
        _ = offsets
        return cls(spec, dim, mats, plan=placements, validate=validate)

    def validate(self) -> None:
        """Check star-compatibility and multiplicativity on basis pairs."""
        basis = basis_elements(self.spec, self._exact())
        for k, e in enumerate(basis):
            if self.apply(e.star()) != self.basis_matrices[k].adjoint():
                raise RepresentationError(f"star-compatibility fails on basis element {k}")
        for k, a in enumerate(basis):
            ma = self.basis_matrices[k]
            for l, b in enumerate(basis):
                if self.apply(a * b) != ma @ self.basis_matrices[l]:
                    raise RepresentationError(f"multiplicativity fails on basis pair ({k}, {l})")

    def _exact(self) -> bool:
        for m in self.basis_matrices:
            for _, v in m.entries():
                return isinstance(v, QI)
        return True

    def apply(self, elem: AlgebraElement) -> Matrix:
        if elem.spec != self.spec:
            raise ValueError("element spec does not match representation")
        acc: dict = {}
        for x, mat in zip(elem.coords, self.basis_matrices):
            if x == 0:
                continue
            for key, v in mat.entries():
                cur = acc.get(key)
                acc[key] = x * v if cur is None else cur + x * v
        return Matrix(self.dim, self.dim, acc)

    def _flat(self):
        support = object.__getattribute__(self, "_support")
        if support is None:
            support = support_union(self.basis_matrices)
            columns = [real_vector(m, support) for m in self.basis_matrices]
            object.__setattr__(self, "_support", support)
            object.__setattr__(self, "_columns", columns)
        return support, object.__getattribute__(self, "_columns")

    def is_injective(self) -> bool:
        cached = object.__getattribute__(self, "_injective")
        if cached is None:
            _, columns = self._flat()
            ech = Echelon(len(columns[0]) if columns else 0)
            for col in columns:
                ech.add(col)
            cached = ech.rank == self.spec.real_dimension
            object.__setattr__(self, "_injective", cached)
        return cached

    def pullback(self, m: Matrix) -> AlgebraElement | None:
        """The element x with apply(x) = m, or None when m is not in the image."""
        support, columns = self._flat()
        extra = [k for k, _ in m.entries() if k not in set(support)]
        if extra:
            ext = support + sorted(extra)
            columns = [real_vector(b, ext) for b in self.basis_matrices]
            support = ext
        target = real_vector(m, support)
        coeffs = solve_real_linear(columns, target, len(target))
        if coeffs is None:
            return None
        elem = AlgebraElement(self.spec, coeffs)
        if self.apply(elem) != m:
            return None
        return elem

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.dim == other.dim
            and all(a == b for a, b in zip(self.basis_matrices, other.basis_matrices))
        )

    __hash__ = None

    def __repr__(self):
        return f"Representation({'+'.join(self.spec.labels())} on C^{self.dim})"


def _is_stored_zero(v):
    if isinstance(v, QI):
        return not v
    return v == 0
