"""JSON document format for triples, twists and reports.

One document carries a whole (possibly twisted) triple: scalar mode, the
algebra as block-kind labels, the representation (assignment plan when
available, explicit basis matrices otherwise), the Dirac operator, optional
grading, real structure, KO signs, twist and eigenspace identification.

Complex entries are two-element arrays [re, im]; exact rationals are
canonical "p/q" strings (plain integers allowed), floats are JSON numbers.
Matrices are dense row-major.  parse and emit are mutually inverse on
canonical documents, which the shipped fixtures are.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraSpec, Placement, Representation, parse_kind
from .matrices import Antilinear, Matrix
from .scalars import QI, rational
from .triple import FiniteRealTriple, KOSigns
from .twist import TwistData

VERSION = "1"


class DocumentError(ValueError):
    pass


def _emit_scalar(v, mode: str):
    if mode == "exact":
        return [str(v.real), str(v.imag)]
    return [float(v.real), float(v.imag)]


def _parse_scalar(pair, mode: str, where: str):
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise DocumentError(f"{where}: complex entries are [re, im] pairs")
    re, im = pair
    if mode == "exact":
        try:
            return QI(rational(Fraction(str(re))), rational(Fraction(str(im))))
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{where}: bad exact rational: {exc}") from None
    try:
        return complex(float(re), float(im))
    except (TypeError, ValueError):
        raise DocumentError(f"{where}: bad float entry {pair!r}") from None


def _emit_matrix(m: Matrix, mode: str) -> list:
    zero = _emit_scalar(QI(0), "exact") if mode == "exact" else [0.0, 0.0]
    out = []
    for i in range(m.nrows):
        row = [list(zero) for _ in range(m.ncols)]
        out.append(row)
    for (i, j), v in m.entries():
        out[i][j] = _emit_scalar(v, mode)
    return out


def _parse_matrix(rows, mode: str, where: str) -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError(f"{where}: a matrix is a non-empty list of rows")
    ncols = len(rows[0])
    entries = {}
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise DocumentError(f"{where}: row {i} has {len(row)} entries, expected {ncols}")
        for j, pair in enumerate(row):
            v = _parse_scalar(pair, mode, f"{where}[{i}][{j}]")
            if (mode == "exact" and v) or (mode == "float" and v != 0):
                entries[(i, j)] = v
    return Matrix(len(rows), ncols, entries)


def _emit_plan(plan) -> list:
    return [
        {"summand": p.summand, "rows": list(p.rows), "cols": list(p.cols), "conj": p.conj}
        for p in plan
    ]


def _parse_plan(items, where: str) -> list[Placement]:
    out = []
    for k, item in enumerate(items):
        try:
            out.append(
                Placement(int(item["summand"]), tuple(item["rows"]), tuple(item["cols"]),
                          bool(item.get("conj", False)))
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"{where}[{k}]: bad placement: {exc}") from None
    return out


@dataclass
class ParsedDocument:
    mode: str
    triple: FiniteRealTriple
    twist: TwistData | None
    identification: Matrix | None
    metadata: dict


def emit_document(t: FiniteRealTriple, mode: str, twist: TwistData | None = None,
                  identification: Matrix | None = None, metadata: dict | None = None) -> dict:
    doc = {
        "version": VERSION,
        "mode": mode,
        "metadata": metadata or {},
        "hilbert_dim": t.dim,
        "algebra": t.spec.labels(),
    }
    if t.rep.plan is not None:
        doc["representation"] = {"plan": _emit_plan(t.rep.plan)}
    else:
        doc["representation"] = {"matrices": [_emit_matrix(m, mode) for m in t.rep.basis_matrices]}
    doc["dirac"] = _emit_matrix(t.dirac, mode)
    doc["grading"] = _emit_matrix(t.grading, mode) if t.grading is not None else None
    doc["real_structure"] = (
        {"u": _emit_matrix(t.real_structure.U, mode)} if t.real_structure is not None else None
    )
    doc["signs"] = (
        {"eps": t.signs.eps, "eps_prime": t.signs.eps_prime, "eps_dprime": t.signs.eps_dprime}
        if t.signs is not None
        else None
    )
    doc["twist"] = (
        {
            "perm": list(twist.perm),
            "conj": list(twist.conj),
            "r": _emit_matrix(twist.R, mode) if twist.R is not None else None,
        }
        if twist is not None
        else None
    )
    doc["identification"] = _emit_matrix(identification, mode) if identification is not None else None
    return doc


def parse_document(doc: dict) -> ParsedDocument:
    if not isinstance(doc, dict):
        raise DocumentError("document root must be a JSON object")
    if doc.get("version") != VERSION:
        raise DocumentError(f"unsupported document version {doc.get('version')!r}")
    mode = doc.get("mode")
    if mode not in ("exact", "float"):
        raise DocumentError("mode must be 'exact' or 'float'")
    exact = mode == "exact"

    try:
        spec = AlgebraSpec(tuple(parse_kind(lbl) for lbl in doc["algebra"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"algebra: {exc}") from None

    dim = doc.get("hilbert_dim")
    if not isinstance(dim, int) or dim <= 0:
        raise DocumentError("hilbert_dim must be a positive integer")

    rep_spec = doc.get("representation")
    if not isinstance(rep_spec, dict):
        raise DocumentError("representation must be an object")
    if "plan" in rep_spec:
        rep = Representation.from_plan(spec, dim, _parse_plan(rep_spec["plan"], "representation.plan"),
                                       exact)
    elif "matrices" in rep_spec:
        mats = [
            _parse_matrix(m, mode, f"representation.matrices[{k}]")
            for k, m in enumerate(rep_spec["matrices"])
        ]
        rep = Representation(spec, dim, mats)
    else:
        raise DocumentError("representation needs a 'plan' or 'matrices'")

    if "dirac" not in doc:
        raise DocumentError("document has no Dirac operator")
    dirac = _parse_matrix(doc["dirac"], mode, "dirac")
    grading = _parse_matrix(doc["grading"], mode, "grading") if doc.get("grading") is not None else None
    real_structure = None
    if doc.get("real_structure") is not None:
        rs = doc["real_structure"]
        if not isinstance(rs, dict) or "u" not in rs:
            raise DocumentError("real_structure must be an object with a 'u' matrix")
        u = _parse_matrix(rs["u"], mode, "real_structure.u")
        if not u.is_unitary():
            raise DocumentError("real_structure.u is not unitary")
        real_structure = Antilinear(u, check=False)

    signs = None
    if doc.get("signs") is not None:
        s = doc["signs"]
        try:
            signs = KOSigns(int(s["eps"]), int(s["eps_prime"]),
                            None if s.get("eps_dprime") is None else int(s["eps_dprime"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"signs: {exc}") from None

    twist = None
    if doc.get("twist") is not None:
        tw = doc["twist"]
        try:
            perm = tuple(int(x) for x in tw["perm"])
            conjflags = tuple(bool(x) for x in tw.get("conj") or ())
        except (KeyError, TypeError, ValueError) as exc:
            raise DocumentError(f"twist: {exc}") from None
        r = _parse_matrix(tw["r"], mode, "twist.r") if tw.get("r") is not None else None
        twist = TwistData(perm, conjflags, r)

    identification = (
        _parse_matrix(doc["identification"], mode, "identification")
        if doc.get("identification") is not None
        else None
    )

    try:
        triple = FiniteRealTriple(spec, rep, dirac, grading, real_structure, signs)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    return ParsedDocument(mode, triple, twist, identification, doc.get("metadata") or {})


def load_document(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def save_document(doc: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
