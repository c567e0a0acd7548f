"""Batch classification of quadratic ideal lattices and the reference tables.

Survey output is deterministic: records are sorted by (D, norm, a, b, g) and
serialized with a fixed schema, so identical configurations produce identical
bytes regardless of worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .arith import DeltaKind, QuadOrder, Rational, is_squarefree, is_valid_radicand
from .errors import InvariantViolation
from .families import imaginary_instance, real_instance
from .ideals import IdealTriple, enumerate_ideals
from .planar import form_from_ideal, minimal_vectors

CSV_COLUMNS = (
    "D", "a", "b", "g", "norm",
    "minimum_num", "minimum_den",
    "n_minimal", "wr", "hexagonal", "order_maximal",
)


@dataclass(frozen=True)
class SurveyRecord:
    D: int
    a: int
    b: int
    g: int
    norm: int
    minimum: Rational
    n_minimal: int
    wr: bool
    hexagonal: bool
    bound_ok: bool
    order_maximal: bool


@dataclass
class SurveyConfig:
    d_min: int
    d_max: int
    norm_bound: int = 10
    require_squarefree: bool = False
    output_format: str = "text"
    workers: int = 1

    def validate(self):
        if self.d_min > self.d_max:
            raise ValueError("d_min must not exceed d_max")
        if self.norm_bound < 1:
            raise ValueError("norm bound must be at least 1")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


def classify_triple(t: IdealTriple) -> SurveyRecord:
    """Full classification of one ideal: minimum, minimal vector count, the
    well-rounded and hexagonal flags, and the exact minimum bound check."""
    ms = minimal_vectors(form_from_ideal(t))
    nrm = t.a * t.g
    if t.order.D < 0:
        ok = ms.minimum >= nrm
    else:
        ok = ms.minimum * ms.minimum >= 4 * nrm
    count = len(ms.vectors)
    return SurveyRecord(
        D=t.order.D,
        a=t.a,
        b=t.b,
        g=t.g,
        norm=nrm,
        minimum=Fraction(ms.minimum),
        n_minimal=count,
        wr=count >= 4,
        hexagonal=count == 6,
        bound_ok=ok,
        order_maximal=t.order.maximal,
    )


def _survey_radicand(args) -> list[SurveyRecord]:
    D, norm_bound = args
    order = QuadOrder(D)
    out = []
    for t in enumerate_ideals(order, norm_bound):
        rec = classify_triple(t)
        if not rec.bound_ok:
            raise InvariantViolation(
                f"minimum bound violated for D={D}, triple=({t.a},{t.b},{t.g})"
            )
        out.append(rec)
    return out


def run_survey(cfg: SurveyConfig) -> tuple[list[SurveyRecord], dict]:
    cfg.validate()
    radicands = [
        D for D in range(cfg.d_min, cfg.d_max + 1)
        if is_valid_radicand(D) and (not cfg.require_squarefree or is_squarefree(abs(D)))
    ]
    jobs = [(D, cfg.norm_bound) for D in radicands]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_survey_radicand, jobs, chunksize=8))
    else:
        chunks = [_survey_radicand(job) for job in jobs]
    records = [rec for chunk in chunks for rec in chunk]
    records.sort(key=lambda r: (r.D, r.norm, r.a, r.b, r.g))
    summary = {
        "records": len(records),
        "wr": sum(r.wr for r in records),
        "hexagonal": sum(r.hexagonal for r in records),
        "bound_ok": sum(r.bound_ok for r in records),
    }
    return records, summary


# ---------------------------------------------------------------------------
# serialization

def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _bool_str(flag: bool) -> str:
    return "true" if flag else "false"


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def record_dict(r: SurveyRecord) -> dict:
    m = Fraction(r.minimum)
    return {
        "D": r.D,
        "a": r.a,
        "b": r.b,
        "g": r.g,
        "norm": r.norm,
        "minimum_num": m.numerator,
        "minimum_den": m.denominator,
        "n_minimal": r.n_minimal,
        "wr": r.wr,
        "hexagonal": r.hexagonal,
        "order_maximal": r.order_maximal,
    }


def record_line(r: SurveyRecord) -> str:
    return (
        f"D={r.D} (a,b,g)=({r.a},{r.b},{r.g}) norm={r.norm} min={Fraction(r.minimum)} "
        f"nmin={r.n_minimal} wr={_yn(r.wr)} hex={_yn(r.hexagonal)} maximal={_yn(r.order_maximal)}"
    )


def summary_line(summary: dict) -> str:
    return (
        f"{summary['records']} ideals: {summary['wr']} wr, {summary['hexagonal']} hexagonal, "
        f"bound holds for {summary['bound_ok']}/{summary['records']}"
    )


def records_to_csv(records) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in records:
        d = record_dict(r)
        lines.append(",".join(
            _bool_str(d[c]) if isinstance(d[c], bool) else str(d[c]) for c in CSV_COLUMNS
        ))
    return "\n".join(lines) + "\n"


def records_to_json(records, summary) -> str:
    return canonical_json({"records": [record_dict(r) for r in records], "summary": summary})


def records_to_text(records, summary) -> str:
    lines = [record_line(r) for r in records]
    lines.append(summary_line(summary))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reference tables

def element_str(order: QuadOrder, x: int, y: int) -> str:
    """Exact algebraic rendering of x + y*delta, e.g. (1-√-15)/2 or 1-√3."""
    if y == 0:
        return str(x)
    if order.delta_kind is DeltaKind.HALF_ONE_MINUS_SQRT_D:
        return f"({_radical_combo(2 * x + y, -y, order.D)})/2"
    return _radical_combo(x, -y, order.D)


def _radical_combo(r: int, s: int, D: int) -> str:
    """String for r + s*sqrt(D) with s != 0."""
    mag = "" if abs(s) == 1 else str(abs(s))
    rad = f"{mag}√{D}"
    if r == 0:
        return rad if s > 0 else f"-{rad}"
    return f"{r}+{rad}" if s > 0 else f"{r}-{rad}"


@dataclass(frozen=True)
class TableRow:
    family: str
    t: int
    D: int
    a: int
    b: int
    g: int
    ideal: str
    minimal_elements: str
    order_maximal: bool
    match: bool


# The example tables for the two families: four imaginary rows (t = 1, 3, 5, 7)
# and four real rows (t = 5, 13, 17, 31), with the expected canonical basis,
# minimal elements and maximality flag.  D = -207 is the one non-maximal order.
_EXPECTED_ROWS = (
    ("imaginary", 1, -15, "<2, (1-√-15)/2>", "±2, ±(1-√-15)/2", True),
    ("imaginary", 3, -55, "<4, (3-√-55)/2>", "±4, ±(3-√-55)/2", True),
    ("imaginary", 5, -119, "<6, (5-√-119)/2>", "±6, ±(5-√-119)/2", True),
    ("imaginary", 7, -207, "<8, (7-√-207)/2>", "±8, ±(7-√-207)/2", False),
    ("real", 5, 21, "<7, (7-√21)/2>", "±(7-√21)/2, ±(7+√21)/2", True),
    ("real", 13, 165, "<15, (15-√165)/2>", "±(15-√165)/2, ±(15+√165)/2", True),
    ("real", 17, 285, "<19, (19-√285)/2>", "±(19-√285)/2, ±(19+√285)/2", True),
    ("real", 31, 957, "<33, (33-√957)/2>", "±(33-√957)/2, ±(33+√957)/2", True),
)


def _minimal_elements_str(t: IdealTriple) -> str:
    ms = minimal_vectors(form_from_ideal(t))
    reps = [v for v in ms.vectors if v > (-v[0], -v[1])]
    reps.sort(key=lambda v: (abs(v[1]), abs(v[0]), v[1], v[0]))
    parts = []
    for m, n in reps:
        parts.append("±" + element_str(t.order, t.a * m + t.b * n, t.g * n))
    return ", ".join(parts)


def reference_tables() -> list[TableRow]:
    """Both example tables, recomputed from scratch and flagged against the
    expected rows."""
    rows = []
    for family, t, D, ideal_exp, minimal_exp, maximal_exp in _EXPECTED_ROWS:
        inst = imaginary_instance(t) if family == "imaginary" else real_instance(t)
        trip = inst.triple
        ideal = f"<{trip.a}, {element_str(trip.order, trip.b, trip.g)}>"
        minimal = _minimal_elements_str(trip)
        maximal = trip.order.maximal
        match = (
            inst.D == D
            and ideal == ideal_exp
            and minimal == minimal_exp
            and maximal == maximal_exp
        )
        rows.append(TableRow(
            family, t, inst.D, trip.a, trip.b, trip.g, ideal, minimal, maximal, match,
        ))
    return rows


def table_row_dict(row: TableRow) -> dict:
    return {
        "family": row.family,
        "t": row.t,
        "D": row.D,
        "a": row.a,
        "b": row.b,
        "g": row.g,
        "ideal": row.ideal,
        "minimal_elements": row.minimal_elements,
        "order_maximal": row.order_maximal,
        "match": row.match,
    }


def tables_to_text(rows) -> str:
    lines = []
    for family in ("imaginary", "real"):
        lines.append(f"{family} family:")
        for row in rows:
            if row.family != family:
                continue
            flag = "MATCH" if row.match else "MISMATCH"
            note = "" if row.order_maximal else " [non-maximal order]"
            lines.append(
                f"  t={row.t} D={row.D} I={row.ideal} minimal: {row.minimal_elements}{note} {flag}"
            )
    ok = all(row.match for row in rows)
    lines.append("all rows match" if ok else "MISMATCH detected")
    return "\n".join(lines) + "\n"


def tables_to_csv(rows) -> str:
    cols = ("family", "t", "D", "a", "b", "g", "ideal", "minimal_elements", "order_maximal", "match")
    lines = [",".join(cols)]
    for row in rows:
        d = table_row_dict(row)
        cells = []
        for c in cols:
            v = d[c]
            cell = _bool_str(v) if isinstance(v, bool) else str(v)
            if "," in cell:
                cell = f'"{cell}"'
            cells.append(cell)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def tables_to_json(rows) -> str:
    return canonical_json({"rows": [table_row_dict(r) for r in rows]})
